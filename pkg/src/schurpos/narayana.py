"""Catalan and Narayana numbers, Narayana polynomials, q-Narayana numbers, Dyck-path oracles."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .partitions import Partition
from .qpoly import ONE, ZERO, LaurentPoly, exact_div, q_binomial, q_int
from .specialize import X, eval_geometric

__all__ = [
    "DYCK_ORACLE_MAX_N",
    "catalan",
    "narayana_num",
    "narayana_poly",
    "narayana_polys",
    "q_narayana",
    "q_narayana_closed_form",
    "dyck_peak_oracle",
    "dyck_peak_counts",
    "narayana_transform",
]

DYCK_ORACLE_MAX_N = 14


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def narayana_num(n: int, k: int) -> int:
    """N(n, k): Dyck paths of semilength n with k+1 peaks.

    N(0, 0) = 1 so that the Narayana polynomial sequence starts with N_0 = 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    value, rem = divmod(comb(n, k) * comb(n, k + 1), n)
    assert rem == 0
    return value


def narayana_poly(n: int) -> LaurentPoly:
    return LaurentPoly({k: narayana_num(n, k) for k in range(max(n, 1))})


def narayana_polys(count: int) -> list[LaurentPoly]:
    """[N_0(q), ..., N_{count-1}(q)]."""
    return [narayana_poly(n) for n in range(count)]


@lru_cache(maxsize=None)
def q_narayana_closed_form(n: int, k: int) -> LaurentPoly:
    """(1/[n]) [n choose k] [n choose k+1] q^(k^2+k), by exact division."""
    if n < 1:
        raise ValueError("closed form needs n >= 1")
    if k < 0:
        return ZERO
    return exact_div(q_binomial(n, k) * q_binomial(n, k + 1), q_int(n)).shift(k * k + k)


@lru_cache(maxsize=None)
def q_narayana(n: int, k: int) -> LaurentPoly:
    """N_q(n, k); the closed form is checked against s_(2^k)(q, ..., q^(n-1)) on every call."""
    if n == 0:
        # empty variable set: only s_emptyset survives
        return ONE if k == 0 else ZERO
    closed = q_narayana_closed_form(n, k)
    schur = eval_geometric(Partition([2] * k), X(n)) if k >= 0 else ZERO
    if closed != schur:
        raise ArithmeticError(f"q-Narayana formulas disagree at n={n}, k={k}: {closed} vs {schur}")
    return closed


def _dyck_paths_by_peaks(n: int) -> list[int]:
    """counts[p] = number of Dyck paths of semilength n with exactly p peaks (explicit walk)."""
    counts = [0] * (n + 1)
    # iterative DFS over (ups used, downs used, last step was up, peaks so far)
    stack = [(0, 0, False, 0)]
    while stack:
        up, down, last_up, peaks = stack.pop()
        if up == n and down == n:
            counts[peaks] += 1
            continue
        if up < n:
            stack.append((up + 1, down, True, peaks))
        if down < up:
            stack.append((up, down + 1, False, peaks + (1 if last_up else 0)))
    return counts


def dyck_peak_counts(n: int) -> list[int]:
    if n > DYCK_ORACLE_MAX_N:
        raise ValueError(f"Dyck-path enumeration is limited to n <= {DYCK_ORACLE_MAX_N}, got {n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _dyck_paths_by_peaks(n)


def dyck_peak_oracle(n: int, k: int) -> int:
    """Brute-force count of Dyck paths of semilength n with exactly k+1 peaks."""
    counts = dyck_peak_counts(n)
    p = k + 1
    if n == 0:
        return 1 if k == 0 else 0  # the empty path, by the N_0 = 1 convention
    return counts[p] if 0 <= p <= n else 0


def narayana_transform(a: Sequence, count: int) -> list[Fraction]:
    """b_n = sum_k N(n, k) a_k for 0 <= n < count, in exact rationals."""
    if len(a) < count:
        raise ValueError(f"need at least {count} input terms, got {len(a)}")
    a = [Fraction(x) for x in a]
    return [sum((narayana_num(n, k) * a[k] for k in range(n + 1)), Fraction(0)) for n in range(count)]
