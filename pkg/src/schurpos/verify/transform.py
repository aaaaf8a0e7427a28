"""The quartic sign analysis behind the Narayana transformation, and the transformation itself.

The quartic f(x) = f1 + f2 - 2 f3 governs the sign of alpha(n, r, k); its
derivative factors as 2(2x - r) g(x).  Everything here is exact: polynomials in
x reuse LaurentPoly with q standing for x, and sequence values are Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..narayana import narayana_num, narayana_poly, narayana_transform
from ..qpoly import LaurentPoly, q
from ..report import CheckReport, report

__all__ = [
    "quartic_f",
    "quartic_poly",
    "quartic_g",
    "check_lem1",
    "check_quartic_cases",
    "alpha",
    "alpha_prime",
    "check_alpha_threshold",
    "check_alpha_sum",
    "check_transform_preserves",
    "check_raw_transform",
    "log_convex_failures",
    "random_log_convex_sequence",
    "RandomSequenceConfig",
]

x = q  # the indeterminate of the quartic


def _parts(n: int, r: int, t):
    """f1, f2, f3 at t, where t is a Fraction/int or the indeterminate."""
    u = r - t
    f1 = (n + 1) * (n - t + 1) * (n - t) * (n - t) * (n - t - 1)
    f2 = (n + 1) * (n - u + 1) * (n - u) * (n - u) * (n - u - 1)
    f3 = (n - 1) * (n - t) * (n - t + 1) * (n - u) * (n - u + 1)
    return f1, f2, f3


def quartic_f(n: int, r: int, t) -> Fraction:
    f1, f2, f3 = _parts(n, r, Fraction(t))
    return f1 + f2 - 2 * f3


def quartic_poly(n: int, r: int) -> LaurentPoly:
    f1, f2, f3 = _parts(n, r, x)
    return f1 + f2 - 2 * f3


def quartic_g(n: int, r: int) -> LaurentPoly:
    const = -2 * n + r + 2 * r * r - 5 * n * r - 8 * n * n * r - 2 + 2 * n * r * r + 6 * n * n + 8 * n**3
    return 4 * x * x - 4 * r * x + const


def check_lem1(n: int, r: int) -> CheckReport:
    """f' = 2(2x - r) g exactly, and f(0) >= f(1) >= ... >= f(floor(r/2))."""
    if n < 1 or not 0 <= r < 2 * n:
        raise ValueError("need n >= 1 and 0 <= r < 2n")
    failures = []
    f = quartic_poly(n, r)
    rhs = 2 * (2 * x - r) * quartic_g(n, r)
    if f.derivative() != rhs:
        failures.append({"identity": "derivative", "difference": f.derivative() - rhs})
    values = [quartic_f(n, r, k) for k in range(r // 2 + 1)]
    for k in range(len(values) - 1):
        if values[k] < values[k + 1]:
            failures.append({"monotone": k, "f_k": values[k], "f_k+1": values[k + 1]})
    return report("lem1", {"n": n, "r": r}, failures)


def check_quartic_cases(n: int) -> CheckReport:
    """The closed values of f(0) for r odd and even, and f(k) at r = 2n."""
    failures = []
    for m in range(n):
        want = 2 * (2 * m + 1) * (n + 1) * ((4 * m + 1) * (n - m) * (n - m - 1) + m * (m + 1))
        if quartic_f(n, 2 * m + 1, 0) != want:
            failures.append({"case": "odd", "m": m})
        want = 4 * m * (n + 1) * ((4 * m - 1) * (n - m) ** 2 + m * (m - 1))
        if quartic_f(n, 2 * m, 0) != want:
            failures.append({"case": "even", "m": m})
    for k in range(n + 1):
        if quartic_f(n, 2 * n, k) != 4 * (n - k + 1) * (n - k - 1) * (n - k) ** 2:
            failures.append({"case": "r=2n", "k": k})
    return report("quartic-cases", {"n": n}, failures)


def alpha(n: int, r: int, k: int) -> int:
    N = narayana_num
    return N(n + 1, k) * N(n - 1, r - k) + N(n + 1, r - k) * N(n - 1, k) - 2 * N(n, r - k) * N(n, k)


def alpha_prime(n: int, r: int, k: int) -> Fraction:
    a = Fraction(alpha(n, r, k))
    return a / 2 if r % 2 == 0 and 2 * k == r else a


def check_alpha_threshold(n: int, r: int) -> CheckReport:
    """alpha(n, r, .) on 0..floor(r/2) is a nonnegative run followed by a nonpositive run.

    Also checks that alpha vanishes for k <= r - n - 1 and that, wherever it is
    nonzero, it has the sign of the quartic f at k.
    """
    if n < 1 or not 0 <= r <= 2 * n:
        raise ValueError("need n >= 1 and 0 <= r <= 2n")
    vals = [alpha(n, r, k) for k in range(r // 2 + 1)]
    failures = []
    first_neg = next((k for k, v in enumerate(vals) if v < 0), len(vals))
    if any(v > 0 for v in vals[first_neg:]):
        failures.append({"alpha": vals})
    for k, v in enumerate(vals):
        if k <= r - n - 1 and v != 0:
            failures.append({"vanishing": k, "alpha": v})
        fk = quartic_f(n, r, k)
        if v * fk < 0:
            failures.append({"sign": k, "alpha": v, "f": fk})
    return report("alpha-threshold", {"n": n, "r": r}, failures, {"threshold": first_neg - 1, "alpha": vals})


def check_alpha_sum(n: int) -> CheckReport:
    """sum_k alpha'(n, r, k) is the q^r coefficient of N_{n-1} N_{n+1} - N_n^2, and that coefficient is >= 0."""
    if n < 1:
        raise ValueError("n >= 1")
    diff = narayana_poly(n - 1) * narayana_poly(n + 1) - narayana_poly(n) ** 2
    failures = []
    for r in range(2 * n + 1):
        total = sum((alpha_prime(n, r, k) for k in range(r // 2 + 1)), Fraction(0))
        c = diff.coefficient(r)
        if total != c or c < 0:
            failures.append({"r": r, "alpha_sum": total, "coefficient": c})
    if any(e < 0 or e > 2 * n for e, _ in diff.terms()):
        failures.append({"support": diff})
    return report("alpha-sum", {"n": n}, failures)


def log_convex_failures(b: Sequence) -> list[int]:
    """Indices n with b_{n-1} b_{n+1} < b_n^2."""
    return [n for n in range(1, len(b) - 1) if b[n - 1] * b[n + 1] < b[n] * b[n]]


def check_transform_preserves(a: Sequence, count: int) -> CheckReport:
    """Apply the Narayana transformation to a positive log-convex a and test b for log-convexity.

    Inputs that are not positive and log-convex are refused: the report fails
    with a witness naming the offending index, and nothing is transformed.
    """
    a = [Fraction(v) for v in a]
    params = {"count": count, "length": len(a)}
    bad = next((i for i, v in enumerate(a) if v <= 0), None)
    if bad is not None:
        return report("transform", params, [{"refused": "not positive", "index": bad, "value": a[bad]}])
    lc = log_convex_failures(a)
    if lc:
        return report("transform", params, [{"refused": "not log-convex", "index": lc[0]}])
    b = narayana_transform(a, count)
    fails = log_convex_failures(b)
    return report("transform", params, [{"index": n, "b": b[n - 1 : n + 2]} for n in fails])


@dataclass(frozen=True)
class RandomSequenceConfig:
    length: int = 12
    max_numerator: int = 20
    max_denominator: int = 9


def random_log_convex_sequence(rng: random.Random, cfg: RandomSequenceConfig = RandomSequenceConfig()) -> list[Fraction]:
    """A positive log-convex rational sequence: a_0 > 0 and nondecreasing ratios a_{k+1}/a_k."""

    def frac() -> Fraction:
        return Fraction(rng.randint(1, cfg.max_numerator), rng.randint(1, cfg.max_denominator))

    ratios = sorted(frac() for _ in range(cfg.length - 1))
    seq = [frac()]
    for ratio in ratios:
        seq.append(seq[-1] * ratio)
    return seq


def check_raw_transform(a: Sequence, count: int) -> CheckReport:
    """Transform a without any precondition and report whether b is log-convex."""
    b = narayana_transform(a, count)
    fails = log_convex_failures(b)
    return report("transform-raw", {"count": count}, [{"index": n, "b": b[n - 1 : n + 2]} for n in fails])
