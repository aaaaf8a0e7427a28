"""One test per acceptance criterion, each held to its time bound.

Every test appends a PASS/FAIL line that is echoed in the terminal summary.
Ranges are written out here rather than taken from suite defaults, so a
change of defaults cannot quietly shrink what is being accepted.
"""

import time

import conftest
import pytest

from schurpos.partitions import Partition, SkewShape
from schurpos.schur import SchurSum, lr_coefficient, lr_tableaux
from schurpos.verify import tables
from schurpos.verify.dfamily import theo_s_lhs
from schurpos.verify.logconvex import WEAK_NOT_STRONG_EXAMPLE, is_q_log_convex, is_strongly_q_log_convex, narayana_strong_convexity
from schurpos.verify.suites import (
    FixedKRange,
    FixedNRange,
    MainConjRange,
    MRange,
    NRange,
    OracleHookRange,
    OracleLRRange,
    SampleRange,
    Sect6Range,
    run_suite,
)


def run_criterion(name, limit, body):
    t0 = time.perf_counter()
    note = ""
    try:
        body()
    except AssertionError as exc:
        note = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        raise
    finally:
        dt = time.perf_counter() - t0
        if not note and dt > limit:
            note = f"exceeded the {limit}s bound"
        line = f"{'FAIL' if note else 'PASS'}  {name}  [{dt:.2f}s / {limit}s]" + (f"  {note}" if note else "")
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
    assert dt <= limit, f"{name} took {dt:.2f}s, bound {limit}s"


def assert_suite(suite_id, cfg):
    reports = run_suite(suite_id, cfg)
    unmet = [(r.parameters, r.witness) for r in reports if not r.ok]
    assert reports and not unmet, f"{suite_id}: {len(unmet)} unmet case(s), first {unmet[:1]}"
    return reports


def _golden_rows(rows):
    differing = [r.label for r in rows if r.value != r.golden]
    assert not differing, f"rows differing from the printed table: {differing}"
    assert all(abs(c) == 1 for r in rows for _, c in r.value.items()), "a coefficient other than +-1"


def test_d_family_table_reproduction():
    def body():
        _golden_rows([r for m in (7, 8, 9) for r in tables.d_family_rows(m)])

    run_criterion("D_{m,i} table for m = 7, 8, 9 matches the printed rows exactly", 10, body)


def test_dabkr_table_reproduction():
    def body():
        _golden_rows([r for key in [(0, 1, 8), (0, 1, 9), (0, 2, 10)] for r in tables.dabkr_rows(*key)])

    run_criterion("D(a,b,k,r) table for (0,1,8), (0,1,9), (0,2,10) matches the printed rows exactly", 30, body)


def test_lr_worked_example():
    lam, mu, nu = Partition((9, 5, 3, 3, 1)), Partition((4, 2, 1)), Partition((7, 4, 3))

    def body():
        assert lr_coefficient(lam, mu, nu) == 3
        found = lr_tableaux(lam, mu, nu)
        assert len(found) == 3
        assert sorted(t.rows for t in found) == sorted([
            ((1, 1, 1, 1, 1), (1, 1, 2), (2, 2), (2, 3, 3), (3,)),
            ((1, 1, 1, 1, 1), (1, 2, 2), (2, 2), (1, 3, 3), (3,)),
            ((1, 1, 1, 1, 1), (1, 2, 2), (1, 2), (2, 3, 3), (3,)),
        ])
        assert all(t.shape == SkewShape(lam, mu) for t in found)

    run_criterion("c^(9,5,3,3,1)_(4,2,1),(7,4,3) = 3 with exactly three LR tableaux", 1, body)


def test_theo_s():
    def body():
        assert_suite("theo-s", MRange(min_m=0, max_m=12))
        assert theo_s_lhs(3) == SchurSum.parse("s[4] + s[2,2]")
        assert theo_s_lhs(4) == SchurSum.parse("s[4,2] + s[2,2,2]")
        assert theo_s_lhs(5) == SchurSum.parse("s[4,4] + s[4,2,2] + s[2,2,2,2]")

    run_criterion("theo-s holds for 0 <= m <= 12, displayed m = 3, 4, 5 sums match", 60, body)


def test_mainconj():
    def body():
        reports = assert_suite("mainconj", MainConjRange(max_b=4, max_r=10))
        assert len(reports) == 15 * 11

    run_criterion("sum_k D(a,b,k,r) s-positive for 0 <= a <= b <= 4, r <= 10", 300, body)


def test_narayana_strong_q_log_convexity():
    def body():
        assert narayana_strong_convexity(14).passed
        assert is_q_log_convex(WEAK_NOT_STRONG_EXAMPLE).passed
        strong = is_strongly_q_log_convex(WEAK_NOT_STRONG_EXAMPLE)
        assert not strong.passed and strong.witness is not None

    run_criterion("Narayana polynomials strongly q-log-convex for m <= 14; weak-not-strong example confirmed", 10, body)


def test_q_narayana_dual_formulas():
    def body():
        reports = assert_suite("qnarayana-dual", NRange(max_n=12))
        assert len(reports) == sum(range(1, 13))

    run_criterion("q-Narayana closed form equals s_(2^k) on X_n for n <= 12, k < n", 10, body)


def test_strong_q_log_concavity_suites():
    def body():
        assert_suite("qn-concave-fixed-n", FixedNRange(max_n=10))
        assert_suite("qn-concave-fixed-k", FixedKRange(max_k=4, max_n=10))
        assert_suite("sect6-identities", Sect6Range(max_m=8, max_k=5))

    run_criterion("q-Narayana strong q-log-concavity in n and in k; inversion identities for m, n <= 8, k <= 5", 120, body)


def test_transformation_pipeline():
    def body():
        assert_suite("lem1", NRange(max_n=10))
        assert_suite("alpha", NRange(max_n=12))
        reports = assert_suite("transform", SampleRange(count=100, seed=2024))
        randomized = reports[:100]
        assert all(r.passed and r.parameters["length"] == 12 for r in randomized)
        raw = [r for r in reports if r.suite_id == "transform-raw"]
        assert len(raw) == 1 and not raw[0].passed and raw[0].witness

    run_criterion("quartic factorization, alpha threshold and sums, transform on 100 random inputs, (-1)^k failure", 60, body)


def test_oracle_suites():
    def body():
        assert_suite("oracle-lr", OracleLRRange(max_size=10, n=6))
        assert_suite("oracle-hook-content", OracleHookRange(max_size=8, max_n=5))
        assert_suite("oracle-narayana", NRange(max_n=10))

    run_criterion("LR vs SSYT sums (|mu|+|nu| <= 10, n = 6), hook-content vs SSYT, Narayana vs Dyck peaks", 300, body)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
