"""The two-column product families D_{m,i} and D(a,b,k,r), and the identities they satisfy."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..partitions import Partition, partitions_with_parts_in, q_family, rectangle
from ..report import CheckReport, report
from ..schur import SchurSum, delta, s, s2, tilde_delta

__all__ = [
    "DFamilyIndex",
    "DabkrIndex",
    "d_component",
    "d_family",
    "dabkr_component",
    "dabkr",
    "q_union",
    "check_lemm_first",
    "LEMM_FIRST_NAMES",
    "check_lemm_odd_even",
    "check_theo_odd_even",
    "check_coro_signs",
    "check_theo_s",
    "theo_s_lhs",
    "check_dabkr_shift",
    "check_lemm_two",
    "check_mainconj",
]

D2 = Partition((2,))


@dataclass(frozen=True)
class DFamilyIndex:
    m: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i <= self.m:
            raise ValueError(f"need 0 <= i <= m, got m={self.m}, i={self.i}")


@dataclass(frozen=True)
class DabkrIndex:
    a: int
    b: int
    k: int
    r: int

    def __post_init__(self):
        if min(self.a, self.b, self.k, self.r) < 0 or self.k > self.r:
            raise ValueError(f"need a, b, k, r >= 0 and k <= r, got {self}")


def _row_col(n: int) -> SchurSum:
    """s_(3^n) style helpers take a rectangle; negative sizes give zero."""
    return SchurSum() if n < 0 else s(rectangle(1, n))


def _rect(part: int, n: int) -> SchurSum:
    return SchurSum() if n < 0 else s(rectangle(part, n))


@lru_cache(maxsize=None)
def _d_component(m: int, i: int, j: int) -> SchurSum:
    if j == 1:
        return s2(i) * s2(m - i - 1)
    if j == 2:
        return s2(i - 1, 2) * s2(m - i - 1)
    if j == 3:
        return s2(i - 1, 1) * s2(m - i - 1, 1)
    raise ValueError(f"component must be 1, 2 or 3, got {j}")


def d_component(idx: DFamilyIndex, j: int) -> SchurSum:
    return _d_component(idx.m, idx.i, j)


@lru_cache(maxsize=None)
def _d_family(m: int, i: int) -> SchurSum:
    return _d_component(m, i, 1) + _d_component(m, i, 2) - _d_component(m, i, 3)


def d_family(idx: DFamilyIndex) -> SchurSum:
    return _d_family(idx.m, idx.i)


def D(m: int, i: int) -> SchurSum:
    return _d_family(m, i)


@lru_cache(maxsize=None)
def _dabkr_component(a: int, b: int, k: int, r: int, j: int) -> SchurSum:
    if j == 1:
        return s2(k - b - 1, b + 2 - a) * s2(r - k - 1)
    if j == 2:
        return s2(k - b, b - a) * s2(r - k - 1)
    if j == 3:
        return s2(k - b - 1, b + 1 - a) * s2(r - k - 1, 1)
    raise ValueError(f"component must be 1, 2 or 3, got {j}")


def dabkr_component(idx: DabkrIndex, j: int) -> SchurSum:
    return _dabkr_component(idx.a, idx.b, idx.k, idx.r, j)


@lru_cache(maxsize=None)
def _dabkr(a: int, b: int, k: int, r: int) -> SchurSum:
    return _dabkr_component(a, b, k, r, 1) + _dabkr_component(a, b, k, r, 2) - _dabkr_component(a, b, k, r, 3)


def dabkr(idx: DabkrIndex) -> SchurSum:
    return _dabkr(idx.a, idx.b, idx.k, idx.r)


# --- Q-family expansions ---------------------------------------------------------


def q_union(mus, n: int) -> SchurSum:
    """Sum of s_lam over the union of the families Q_mu(n), each lam once."""
    lams = set()
    for mu in mus:
        lams.update(q_family(Partition(mu), n))
    return SchurSum({lam: 1 for lam in lams})


def _expected(support_mus, n: int, doubled_mu=None) -> SchurSum:
    f = q_union(support_mus, n)
    if doubled_mu is not None:
        f = f + q_union([doubled_mu], n)
    return f


def _compare(name: str, got: SchurSum, want: SchurSum, failures: list):
    if got != want:
        diff = got - want
        failures.append({"identity": name, "difference": diff})


def _doubled(f: SchurSum) -> list[Partition]:
    return sorted((lam for lam, c in f.items() if c == 2), reverse=True)


def check_lemm_odd_even(k: int, amended: bool = False) -> CheckReport:
    """Twelve Q-family expansions of the D-components at m = 2k+1 and m = 2k.

    As printed, the expansion of D^(2)_{2k+1,k+1} omits Q_(3,3,2,2,2)(4k), which
    is nonempty from k = 3 on; ``amended=True`` adds that family.  For the last
    even statement the coefficient-2 set is recorded in the payload and only
    compared against Q_(3,2,2,2,1)(4k-2), the only reading consistent with sizes.
    """
    if k < 1:
        raise ValueError("k >= 1")
    failures: list = []
    n_odd, n_even = 4 * k, 4 * k - 2
    m = 2 * k + 1
    _compare("odd(i)", _d_component(m, k, 1), _expected([()], n_odd), failures)
    _compare("odd(ii)", _d_component(m, k + 1, 1), _expected([(2, 2)], n_odd), failures)
    _compare("odd(iii)", _d_component(m, k, 2), _expected([(3, 1), (2, 1, 1), (3, 3, 2)], n_odd), failures)
    q2 = [(2, 1, 1), (3, 2, 2, 1)] + ([(3, 3, 2, 2, 2)] if amended else [])
    _compare("odd(iv)", _d_component(m, k + 1, 2), _expected(q2, n_odd), failures)
    q3 = [(3, 1), (2, 2), (2, 1, 1), (3, 3, 2)]
    _compare("odd(v)", _d_component(m, k, 3), _expected(q3, n_odd, (3, 2, 2, 1)), failures)
    _compare("odd(vi)", _d_component(m, k + 1, 3), _expected(q3, n_odd, (3, 2, 2, 1)), failures)

    m = 2 * k
    _compare("even(i)", _d_component(m, k, 1), _expected([(2,)], n_even), failures)
    _compare("even(ii)", _d_component(m, k - 1, 1), _expected([(2,)], n_even), failures)
    _compare("even(iii)", _d_component(m, k, 2), _expected([(1, 1), (3, 3, 2, 2), (3, 2, 1)], n_even), failures)
    _compare("even(iv)", _d_component(m, k - 1, 2), _expected([(3, 3), (3, 2, 1), (2, 2, 1, 1)], n_even), failures)
    _compare("even(v)", _d_component(m, k, 3), _expected([(3, 3), (2,), (1, 1)], n_even, (3, 2, 1)), failures)

    ev6 = _d_component(m, k - 1, 3)
    r4 = [(3, 3, 2, 2), (3, 2, 1), (2, 2, 2), (2, 2, 1, 1)]
    _compare("even(vi)", ev6, _expected(r4, n_even, (3, 2, 2, 2, 1)), failures)
    payload = {"even(vi)_doubled": _doubled(ev6), "even(v)_doubled": _doubled(_d_component(m, k, 3))}
    return report("lemm-odd-even", {"k": k, "amended": amended}, failures, payload)


LEMM_FIRST_NAMES = ("2^k * 2^(n+1)", "2^(k-1),1^2 * 2^(n+1)", "2^k * 2^(n+1),1^2", "2^(k-1),1 * 2^(n+1),1")


def _lemm_first_sides(k: int, n: int, j: int) -> tuple[SchurSum, SchurSum]:
    if j == 1:
        return s2(k) * s2(n + 1), delta(D2, s2(k) * s2(n))
    if j == 2:
        return s2(k - 1, 2) * s2(n + 1), delta(D2, s2(k - 1, 2) * s2(n))
    if j == 3:
        return s2(k) * s2(n + 1, 2), delta(D2, s2(k) * s2(n, 2))
    if j == 4:
        return s2(k - 1, 1) * s2(n + 1, 1), delta(D2, s2(k - 1, 1) * s2(n, 1))
    raise ValueError(f"identity index must be 1..4, got {j}")


def _lemm_first_failures(k: int, n: int) -> list[dict]:
    out = []
    for j in (1, 2, 3, 4):
        lhs, rhs = _lemm_first_sides(k, n, j)
        if lhs != rhs:
            out.append({"identity": f"lemm-first {LEMM_FIRST_NAMES[j - 1]}", "k": k, "n": n, "difference": lhs - rhs})
    return out


def check_lemm_first(k: int, n: int, j: int) -> CheckReport:
    """One of the four Delta^(2) product identities at (k, n).

    The second identity fails at n = k (k = n = 1: s_(1,1)s_(2,2) contains s_(3,3));
    it holds for n > k, which is the range the D-family recurrences use.
    """
    lhs, rhs = _lemm_first_sides(k, n, j)
    failures = [] if lhs == rhs else [{"difference": lhs - rhs}]
    return report("lemm-first", {"k": k, "n": n, "identity": j}, failures)


def check_theo_odd_even(k: int, max_n: int | None = None) -> CheckReport:
    """Closed forms and Delta^(2) recurrences for D_{2k+1,.} and D_{2k,.}, plus the product identities for k < n <= max_n."""
    if k < 1:
        raise ValueError("k >= 1")
    failures: list = []
    s3k, s1k = _rect(3, k), _row_col(k)
    m = 2 * k + 1
    _compare("eq-oddk", D(m, k), s3k * s1k, failures)
    _compare("eq-oddkp", D(m, k + 1), _rect(4, k) - s3k * s1k - delta(D2, s3k * _row_col(k - 2)), failures)
    for i in range(k):
        _compare(f"odd(ii) D[{m},{i}]", D(m, i), delta(D2, D(m - 1, i)), failures)
        _compare(f"odd(ii) D[{m},{m - i}]", D(m, m - i), delta(D2, D(m - 1, m - 1 - i)), failures)

    m = 2 * k
    _compare("even(i) D[m,k-1]", D(m, k - 1), s3k * _row_col(k - 2) + delta(D2, _rect(3, k - 1) * _row_col(k - 1)), failures)
    _compare("eq-evenk", D(m, k), -(s3k * _row_col(k - 2)), failures)
    for i in range(k - 1):
        _compare(f"even(ii) D[{m},{i}]", D(m, i), delta(D2, D(m - 1, i)), failures)
        _compare(f"even(ii) D[{m},{m - i}]", D(m, m - i), delta(D2, D(m - 1, m - 1 - i)), failures)
    if k >= 2:
        _compare(f"even(ii) D[{m},{m - k + 1}]", D(m, m - k + 1), delta(D2, D(m - 1, m - k)), failures)

    for n in range(k + 1, (max_n if max_n is not None else k + 2) + 1):
        failures.extend(_lemm_first_failures(k, n))
    return report("theo-odd-even", {"k": k}, failures)


def check_coro_signs(m: int) -> CheckReport:
    if m < 2:
        raise ValueError("m >= 2")
    k = m // 2
    last_positive = k if m % 2 else k - 1
    failures = []
    for i in range(m + 1):
        f = D(m, i)
        if i == m:
            ok, want = f == 0, "zero"
        elif i <= last_positive:
            ok, want = f.is_s_positive(), "s-positive"
        else:
            ok, want = f.is_s_negative(), "s-negative"
        if not ok:
            failures.append({"i": i, "expected": want, "value": f})
    return report("coro-signs", {"m": m}, failures)


def theo_s_lhs(m: int) -> SchurSum:
    total = SchurSum()
    for i in range(m + 1):
        total = total + s2(i - 1) * s2(m - i) + s2(i - 2, 2) * s2(m - i) - s2(i - 1, 1) * s2(m - i - 1, 1)
    return total


def check_theo_s(m: int) -> CheckReport:
    lhs = theo_s_lhs(m)
    rhs = SchurSum({lam: 1 for lam in partitions_with_parts_in({2, 4}, 2 * m - 2)})
    also = sum((D(m, i) for i in range(m + 1)), SchurSum())
    failures = []
    if lhs != rhs:
        failures.append({"identity": "theo-s", "lhs": lhs, "rhs": rhs})
    if also != lhs:
        failures.append({"identity": "sum of D[m,i]", "lhs": also, "rhs": lhs})
    return report("theo-s", {"m": m}, failures, {"lhs": lhs} if not failures else None)


def check_dabkr_shift(idx: DabkrIndex) -> CheckReport:
    a, b, k, r = idx.a, idx.b, idx.k, idx.r
    if min(a, b, k, r) < 1:
        raise ValueError("shift check needs a, b, k, r >= 1")
    failures = []
    for j in (1, 2, 3):
        lhs, rhs = _dabkr_component(a, b, k, r, j), _dabkr_component(a - 1, b - 1, k - 1, r - 1, j)
        if lhs != rhs:
            failures.append({"component": j, "difference": lhs - rhs})
    return report("dabkr-shift", {"a": a, "b": b, "k": k, "r": r}, failures)


def check_lemm_two(a: int, b: int, k: int, r: int) -> CheckReport:
    if not r >= k >= b >= a >= 0:
        raise ValueError("need r >= k >= b >= a >= 0")
    one, three = Partition((1,)), Partition((3,))
    failures = []
    for j in (1, 2, 3):
        lhs = _dabkr_component(a, b, k, r, j)
        f1 = _dabkr_component(a, b - 1, k - 1, r - 1, j) if k >= 1 else SchurSum()
        f2 = _dabkr_component(a, b - 1, k - 1, r - 2, j) if k >= 1 and r >= 2 else SchurSum()
        rhs = tilde_delta(one, three, f1, f2)
        if lhs != rhs:
            failures.append({"component": j, "lhs": lhs, "rhs": rhs})
    return report("lemm-two", {"a": a, "b": b, "k": k, "r": r}, failures)


def check_mainconj(a: int, b: int, r: int) -> CheckReport:
    if not b >= a >= 0 or r < 0:
        raise ValueError("need b >= a >= 0 and r >= 0")
    total = sum((_dabkr(a, b, k, r) for k in range(r + 1)), SchurSum())
    neg = total.negative_terms()
    return report("mainconj", {"a": a, "b": b, "r": r}, [{"negative_terms": neg}] if neg else [])
