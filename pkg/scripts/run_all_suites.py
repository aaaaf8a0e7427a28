"""Run every registered suite at its default range and print a timing table."""

from __future__ import annotations

import argparse
import time

from schurpos.verify.suites import SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    unexpected = 0
    print(f"{'suite':28s} {'cases':>6s} {'xfail':>6s} {'unmet':>6s} {'secs':>7s}")
    for sid in SUITES:
        t0 = time.perf_counter()
        reports = run_suite(sid, jobs=args.jobs)
        dt = time.perf_counter() - t0
        unmet = sum(not r.ok for r in reports)
        xfail = sum(r.ok and not r.passed for r in reports)
        unexpected += unmet
        print(f"{sid:28s} {len(reports):6d} {xfail:6d} {unmet:6d} {dt:7.2f}")
    return 1 if unexpected else 0


if __name__ == "__main__":
    raise SystemExit(main())
