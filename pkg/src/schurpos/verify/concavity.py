"""Strong q-log-concavity of the q-Narayana numbers and the Schur-level facts behind it."""

from __future__ import annotations

import random

from ..narayana import q_narayana
from ..partitions import Partition, SkewShape, join, meet, partitions_inside, rectangle
from ..qpoly import LaurentPoly
from ..report import CheckReport, report
from ..schur import SchurSum, s, s2, skew_to_schur
from ..specialize import GeomVarSet, X, eval_geometric
from .logconvex import first_negative

__all__ = [
    "check_sect6_identities",
    "check_fixed_k_decomposition",
    "check_qn_concave_fixed_n",
    "check_qn_concave_fixed_k",
    "check_two_column_difference",
    "check_sect6_coro",
    "check_lpp_small",
    "random_skew_pair",
    "LPP_MAX_OUTER",
]

LPP_MAX_OUTER = 8


def _ev(lam, var: GeomVarSet) -> LaurentPoly:
    return eval_geometric(Partition(lam), var)


def _col(k: int) -> Partition:
    return Partition([2] * (k - 1) + [1])


def check_sect6_identities(m: int, n: int, k: int) -> CheckReport:
    """The two inversion identities relating evaluations on X_{n-1}, X_m and their inverses."""
    if not (m >= n >= 1 and k >= 1):
        raise ValueError("need m >= n >= 1 and k >= 1")
    a, b = X(n - 1), X(m)
    ai, bi = a.inverse(), b.inverse()
    full, hook, short = rectangle(2, k), _col(k), rectangle(2, k - 1)
    failures = []

    lhs = (_ev(hook, a) * _ev(full, b)).shift(n - 1) - (_ev(hook, b) * _ev(full, a)).shift(m)
    rhs = (_ev(hook, a) * _ev(full, b) - _ev(hook, b) * _ev(full, a)).shift(k - 1)
    if lhs != rhs:
        failures.append({"identity": "inv-1", "lhs": lhs, "rhs": rhs})

    lhs = (_ev(short, a) * _ev(full, b)).shift(2 * (n - 1)) - (_ev(short, b) * _ev(full, a)).shift(2 * m)
    rhs = (_ev(short, ai) * _ev(full, bi) - _ev(short, bi) * _ev(full, ai)).shift(2 * k * (m + n - 1))
    if lhs != rhs:
        failures.append({"identity": "inv-2", "lhs": lhs, "rhs": rhs})
    return report("sect6-identities", {"m": m, "n": n, "k": k}, failures)


def check_fixed_k_decomposition(m: int, n: int, k: int) -> CheckReport:
    """N_q(m,k)N_q(n,k) - N_q(m+1,k)N_q(n-1,k) splits into the two brackets the identities rewrite.

    Needs n >= 2: the split peels q^(n-1) off X_n, and X_1 = X_0 is empty.
    """
    if not (m >= n >= 2 and k >= 1):
        raise ValueError("need m >= n >= 2 and k >= 1")
    a, b = X(n - 1), X(m)
    full, hook, short = rectangle(2, k), _col(k), rectangle(2, k - 1)
    lhs = q_narayana(m, k) * q_narayana(n, k) - q_narayana(m + 1, k) * q_narayana(n - 1, k)
    first = (_ev(hook, a) * _ev(full, b)).shift(n - 1) - (_ev(hook, b) * _ev(full, a)).shift(m)
    second = (_ev(short, a) * _ev(full, b)).shift(2 * (n - 1)) - (_ev(short, b) * _ev(full, a)).shift(2 * m)
    failures = [] if lhs == first + second else [{"lhs": lhs, "rhs": first + second}]
    return report("fixed-k-decomposition", {"m": m, "n": n, "k": k}, failures)


def _nonneg_failure(p: LaurentPoly, **where) -> list[dict]:
    bad = first_negative(p)
    return [] if bad is None else [dict(where, exponent=bad[0], coefficient=bad[1])]


def check_qn_concave_fixed_n(n: int, max_k: int) -> CheckReport:
    """N_q(n,k)N_q(n,l) - N_q(n,k+1)N_q(n,l-1) >= 0 for max_k >= k >= l >= 1."""
    if n < 1:
        raise ValueError("n >= 1")
    N = lambda j: q_narayana(n, j)  # noqa: E731
    failures = []
    for k in range(1, max_k + 1):
        for l in range(1, k + 1):
            failures += _nonneg_failure(N(k) * N(l) - N(k + 1) * N(l - 1), k=k, l=l)
    return report("qn-concave-fixed-n", {"n": n, "max_k": max_k}, failures)


def check_qn_concave_fixed_k(k: int, max_n: int) -> CheckReport:
    """N_q(m,k)N_q(n,k) - N_q(m+1,k)N_q(n-1,k) >= 0 for max_n >= m >= n >= 1."""
    if k < 1:
        raise ValueError("k >= 1")
    N = lambda j: q_narayana(j, k)  # noqa: E731
    failures = []
    for m in range(1, max_n + 1):
        for n in range(1, m + 1):
            failures += _nonneg_failure(N(m) * N(n) - N(m + 1) * N(n - 1), m=m, n=n)
    return report("qn-concave-fixed-k", {"k": k, "max_n": max_n}, failures)


def check_two_column_difference(k: int, l: int) -> CheckReport:
    """s_(2^k)s_(2^l) - s_(2^(k+1))s_(2^(l-1)) is s-positive; at k = l it is sum_a s_(4^a,3^(k-a),1^(k-a))."""
    if not k >= l >= 1:
        raise ValueError("need k >= l >= 1")
    diff = s2(k) * s2(l) - s2(k + 1) * s2(l - 1)
    failures = []
    if not diff.is_s_positive():
        failures.append({"negative_terms": diff.negative_terms()})
    if k == l:
        want = SchurSum({Partition([4] * a + [3] * (k - a) + [1] * (k - a)): 1 for a in range(k + 1)})
        if diff != want:
            failures.append({"closed_form": want, "got": diff})
    return report("two-column-difference", {"k": k, "l": l}, failures)


def _skew(outer, inner=()) -> SchurSum:
    return skew_to_schur(SkewShape(Partition(outer), Partition(inner)))


def check_sect6_coro(k: int) -> CheckReport:
    """Both families of skew-product differences are s-positive for every admissible I and J."""
    if k < 1:
        raise ValueError("k >= 1")
    full, short, hook = rectangle(2, k), rectangle(2, k - 1), _col(k)
    failures = []
    for I in partitions_inside(short):
        d = s(short) * _skew(full, I) - _skew(short, I) * s(full)
        if not d.is_s_positive():
            failures.append({"family": 1, "I": I, "negative_terms": d.negative_terms()})
    for J in partitions_inside(hook):
        d = s(hook) * _skew(full, J) - _skew(hook, J) * s(full)
        if not d.is_s_positive():
            failures.append({"family": 2, "J": J, "negative_terms": d.negative_terms()})
    return report("sect6-coro", {"k": k}, failures)


def check_lpp_small(s1: SkewShape, s2_: SkewShape) -> CheckReport:
    """s_{s1 v s2} s_{s1 ^ s2} - s_{s1} s_{s2} is s-positive, on one small pair."""
    if s1.outer.size > LPP_MAX_OUTER or s2_.outer.size > LPP_MAX_OUTER:
        raise ValueError(f"outer shapes limited to size {LPP_MAX_OUTER}")
    hi, lo = join(s1, s2_), meet(s1, s2_)
    d = skew_to_schur(hi) * skew_to_schur(lo) - skew_to_schur(s1) * skew_to_schur(s2_)
    failures = [] if d.is_s_positive() else [{"negative_terms": d.negative_terms()}]
    return report("lpp", {"s1": str(s1), "s2": str(s2_)}, failures)


def _random_partition(rng: random.Random, max_size: int) -> Partition:
    parts, left = [], rng.randint(0, max_size)
    while left:
        p = rng.randint(1, min(left, parts[-1] if parts else left))
        parts.append(p)
        left -= p
    return Partition(sorted(parts, reverse=True))


def random_skew_pair(rng: random.Random, max_size: int = LPP_MAX_OUTER) -> tuple[SkewShape, SkewShape]:
    def one() -> SkewShape:
        outer = _random_partition(rng, max_size)
        return SkewShape(outer, rng.choice(partitions_inside(outer)))

    return one(), one()
