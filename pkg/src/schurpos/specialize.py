"""Principal specializations of Schur functions and evaluation on geometric variable sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, content, conjugate, hook_length, two_column
from .qpoly import ONE, ZERO, LaurentPoly, NonExactDivision, exact_div, q_int
from .report import CheckReport, report
from .schur import SchurSum

__all__ = [
    "GeomVarSet",
    "X",
    "ps",
    "ps1",
    "ps_sum",
    "ps1_sum",
    "eval_geometric",
    "ps_two_col",
    "ps1_two_col",
    "ps_recurrence_check",
    "convolution_check",
]


@dataclass(frozen=True)
class GeomVarSet:
    """The variable set {q^start, q^(start+1), ..., q^(start+count-1)}."""

    start: int
    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be nonnegative")

    def inverse(self) -> GeomVarSet:
        return GeomVarSet(-(self.start + self.count - 1), self.count) if self.count else self


def X(r: int) -> GeomVarSet:
    """X_r = {q, q^2, ..., q^(r-1)}; empty for r <= 1."""
    return GeomVarSet(1, max(r - 1, 0))


@lru_cache(maxsize=None)
def _ps(lam: Partition, n: int) -> LaurentPoly:
    if len(lam) > n:
        return ZERO
    if not lam:
        return ONE
    conj = conjugate(lam)
    num = den = ONE
    for c in lam.cells():
        num = num * q_int(n + content(c))
        den = den * q_int(lam[c.row - 1] + conj[c.col - 1] - c.row - c.col + 1)
    try:
        quot = exact_div(num, den)
    except NonExactDivision as exc:  # pragma: no cover - would mean a broken identity
        raise ArithmeticError(f"hook-content quotient for {lam}, n={n} is not exact") from exc
    return quot.shift(sum(k * part for k, part in enumerate(lam)))


def ps(lam, n: int) -> LaurentPoly:
    """s_lam(1, q, ..., q^(n-1)) by the hook-content formula."""
    return _ps(Partition(lam), n)


@lru_cache(maxsize=None)
def _ps1(lam: Partition, n: int) -> int:
    if len(lam) > n:
        return 0
    num = den = 1
    for c in lam.cells():
        num *= n + content(c)
        den *= hook_length(lam, c)
    value, rem = divmod(num, den)
    if rem:  # pragma: no cover
        raise ArithmeticError(f"hook-content product for {lam}, n={n} is not integral")
    return value


def ps1(lam, n: int) -> int:
    """s_lam(1^n)."""
    return _ps1(Partition(lam), n)


def ps_sum(f: SchurSum, n: int) -> LaurentPoly:
    total = ZERO
    for lam, c in f.items():
        total = total + ps(lam, n) * c
    return total


def ps1_sum(f: SchurSum, n: int) -> int:
    return sum(c * ps1(lam, n) for lam, c in f.items())


def eval_geometric(f, var: GeomVarSet) -> LaurentPoly:
    """s_lam evaluated on a geometric variable set, by homogeneity; linear on SchurSums."""
    if isinstance(f, SchurSum):
        total = ZERO
        for lam, c in f.items():
            total = total + eval_geometric(lam, var) * c
        return total
    lam = Partition(f)
    return ps(lam, var.count).shift(var.start * lam.size)


def ps_two_col(a: int, b: int, n: int) -> LaurentPoly:
    """ps_n(s_(2^a,1^b)), zero when a < 0 or b < 0."""
    lam = two_column(a, b)
    return ZERO if lam is None else ps(lam, n)


def ps1_two_col(a: int, b: int, n: int) -> int:
    lam = two_column(a, b)
    return 0 if lam is None else ps1(lam, n)


def ps_recurrence_check(k: int, n: int) -> CheckReport:
    """Both q-recurrences and both q=1 recurrences for two-column shapes, at (k, n)."""
    P = lambda a, b, m: ps_two_col(a, b, m)  # noqa: E731
    P1 = lambda a, b, m: ps1_two_col(a, b, m)  # noqa: E731
    s1 = n - 1
    sides = {
        "ps(2^k)": (
            P(k, 0, n),
            P(k, 0, n - 1) + P(k - 1, 1, n - 1).shift(s1) + P(k - 1, 0, n - 1).shift(2 * s1),
        ),
        "ps(2^k,1)": (
            P(k, 1, n),
            P(k, 1, n - 1) + (P(k, 0, n - 1) + P(k - 1, 2, n - 1)).shift(s1) + P(k - 1, 1, n - 1).shift(2 * s1),
        ),
        "ps1(2^k)": (
            P1(k, 0, n),
            P1(k, 0, n - 1) + P1(k - 1, 1, n - 1) + P1(k - 1, 0, n - 1),
        ),
        "ps1(2^k,1)": (
            P1(k, 1, n),
            P1(k, 1, n - 1) + P1(k, 0, n - 1) + P1(k - 1, 2, n - 1) + P1(k - 1, 1, n - 1),
        ),
    }
    failures = [{"identity": name, "lhs": lhs, "rhs": rhs} for name, (lhs, rhs) in sides.items() if lhs != rhs]
    return report("ps-recurrence", {"k": k, "n": n}, failures)


def convolution_check(m: int, n: int, k: int) -> CheckReport:
    if not (m >= n >= 1 and k >= 0):
        raise ValueError("need m >= n >= 1 and k >= 0")
    lhs = ps1_two_col(k, 0, m)
    rhs = 0
    for b in range(m - n + 1):
        for a in range(b + 1):
            rhs += ps1_two_col(k - b, b - a, n) * ps1_two_col(a, b - a, m - n)
    failures = [] if lhs == rhs else [{"lhs": lhs, "rhs": rhs}]
    return report("convolution", {"m": m, "n": n, "k": k}, failures)

