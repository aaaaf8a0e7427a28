"""Weak and strong q-log-convexity and q-log-concavity of polynomial sequences.

Each checker scans every admissible index pair and every coefficient of the
relevant difference; the witness names the first offending (m, n, exponent).
"""

from __future__ import annotations

from typing import Sequence

from ..narayana import narayana_polys
from ..qpoly import LaurentPoly, q
from ..report import CheckReport, report

PolySequence = Sequence[LaurentPoly]

__all__ = [
    "PolySequence",
    "is_q_log_convex",
    "is_strongly_q_log_convex",
    "is_q_log_concave",
    "is_strongly_q_log_concave",
    "check_butler_flanigan",
    "first_negative",
    "WEAK_NOT_STRONG_EXAMPLE",
    "narayana_strong_convexity",
]


def first_negative(p: LaurentPoly) -> tuple[int, int] | None:
    for e, c in p.terms():
        if c < 0:
            return e, c
    return None


def _scan(suite: str, seq: PolySequence, pairs, diff, min_len: int) -> CheckReport:
    seq = list(seq)
    if len(seq) < min_len:
        raise ValueError(f"{suite} needs at least {min_len} terms, got {len(seq)}")
    failures = []
    for m, n in pairs:
        bad = first_negative(diff(seq, m, n))
        if bad is not None:
            failures.append({"m": m, "n": n, "exponent": bad[0], "coefficient": bad[1]})
            break
    return report(suite, {"length": len(seq)}, failures)


def _weak_pairs(length: int):
    return ((m, m) for m in range(1, length - 1))


def _strong_pairs(length: int):
    return ((m, n) for m in range(1, length - 1) for n in range(1, m + 1))


def is_q_log_convex(seq: PolySequence) -> CheckReport:
    """f_{m+1} f_{m-1} - f_m^2 >= 0 coefficientwise for 1 <= m <= len-2."""
    return _scan("q-log-convex", seq, _weak_pairs(len(seq)),
                 lambda f, m, n: f[m + 1] * f[m - 1] - f[m] * f[m], 3)


def is_strongly_q_log_convex(seq: PolySequence) -> CheckReport:
    """f_{m+1} f_{n-1} - f_m f_n >= 0 coefficientwise for all m >= n >= 1."""
    return _scan("strong-q-log-convex", seq, _strong_pairs(len(seq)),
                 lambda f, m, n: f[m + 1] * f[n - 1] - f[m] * f[n], 2)


def is_q_log_concave(seq: PolySequence) -> CheckReport:
    return _scan("q-log-concave", seq, _weak_pairs(len(seq)),
                 lambda f, m, n: f[m] * f[m] - f[m + 1] * f[m - 1], 3)


def is_strongly_q_log_concave(seq: PolySequence) -> CheckReport:
    return _scan("strong-q-log-concave", seq, _strong_pairs(len(seq)),
                 lambda f, m, n: f[m] * f[n] - f[m + 1] * f[n - 1], 2)


def check_butler_flanigan(seq: PolySequence) -> CheckReport:
    """The alternative convexity notion: f_{m-1} f_{n+1} - q^(n-m+1) f_m f_n >= 0 for n >= m >= 1."""
    pairs = ((m, n) for n in range(1, len(seq) - 1) for m in range(1, n + 1))
    return _scan("butler-flanigan", seq, pairs,
                 lambda f, m, n: f[m - 1] * f[n + 1] - (f[m] * f[n]).shift(n - m + 1), 3)


# q-log-convex but not strongly so
WEAK_NOT_STRONG_EXAMPLE: tuple[LaurentPoly, ...] = (
    2 * q + q**2 + 3 * q**3,
    q + 2 * q**2 + 2 * q**3,
    q + 2 * q**2 + 2 * q**3,
    2 * q + q**2 + 3 * q**3,
)


def narayana_strong_convexity(max_m: int) -> CheckReport:
    """Strong q-log-convexity of N_0, ..., N_{max_m+1}, i.e. all pairs m >= n >= 1 with m <= max_m."""
    rep = is_strongly_q_log_convex(narayana_polys(max_m + 2))
    return report("narayana-strong-qlc", {"max_m": max_m}, [] if rep.passed else [rep.witness])
