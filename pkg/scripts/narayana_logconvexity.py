"""Coefficient-level view of the Narayana log-convexity results.

Prints the smallest coefficient of each strong q-log-convexity difference, the
first witness against the alternative (q^(n-m+1)-weighted) notion, and the
Narayana transform of a few sequences.
"""

from __future__ import annotations

import argparse
import math

from schurpos.narayana import narayana_polys, narayana_transform
from schurpos.verify.logconvex import check_butler_flanigan
from schurpos.verify.transform import log_convex_failures


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=10)
    args = ap.parse_args()

    N = narayana_polys(args.max_m + 2)
    print("min coefficient of N_{m+1}N_{n-1} - N_m N_n over m >= n >= 1")
    for m in range(1, args.max_m + 1):
        lows = [min((c for _, c in (N[m + 1] * N[n - 1] - N[m] * N[n]).terms()), default=0) for n in range(1, m + 1)]
        print(f"  m={m:2d}: " + " ".join(f"{v:3d}" for v in lows))

    print("\nalternative notion on N_0..N_8:", check_butler_flanigan(N[:9]).witness)

    length = 10
    inputs = {
        "a_k = 1": [1] * length,
        "a_k = k! + 1": [math.factorial(k) + 1 for k in range(length)],
        "a_k = 2^k": [2**k for k in range(length)],
        "a_k = (-1)^k": [(-1) ** k for k in range(length)],
    }
    print("\nNarayana transform b_n = sum_k N(n,k) a_k")
    for name, a in inputs.items():
        b = narayana_transform(a, length)
        bad = log_convex_failures(b)
        print(f"  {name:14s} b = {[int(v) if v.denominator == 1 else v for v in b]}")
        print(f"  {'':14s} log-convex: {'yes' if not bad else f'no, fails at n={bad}'}")


if __name__ == "__main__":
    main()
