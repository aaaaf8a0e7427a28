"""Named verification suites: configurable ranges, deterministic case lists, optional process pool.

Every suite expands its config into an ordered list of ``Case`` objects.  A case
records the checker, its arguments and the outcome the suite asserts, so
confirmed counterexamples are run and must still fail.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace
from typing import Any, Callable

from ..narayana import narayana_polys
from ..qpoly import ONE, q
from ..report import CheckReport
from ..specialize import convolution_check, ps_recurrence_check
from . import concavity, dfamily, logconvex, oracles, tables, transform

ENV_PREFIX = "SCHURPOS_"


@dataclass(frozen=True)
class Case:
    func: Callable[..., CheckReport]
    args: tuple = ()
    expected: bool = True

    def run(self) -> CheckReport:
        return self.func(*self.args).with_expected(self.expected)


def _run_case(case: Case) -> CheckReport:
    return case.run()


# --- range configs -----------------------------------------------------------------


@dataclass(frozen=True)
class MRange:
    min_m: int = 0
    max_m: int = 12


@dataclass(frozen=True)
class KRange:
    max_k: int = 5


@dataclass(frozen=True)
class KNRange:
    max_k: int = 5
    max_n: int = 9


@dataclass(frozen=True)
class RRange:
    max_r: int = 10


@dataclass(frozen=True)
class MainConjRange:
    max_b: int = 4
    max_r: int = 10


@dataclass(frozen=True)
class NRange:
    max_n: int = 14


@dataclass(frozen=True)
class Sect6Range:
    max_m: int = 8
    max_k: int = 5


@dataclass(frozen=True)
class FixedNRange:
    max_n: int = 10


@dataclass(frozen=True)
class FixedKRange:
    max_k: int = 4
    max_n: int = 10


@dataclass(frozen=True)
class SampleRange:
    count: int = 100
    seed: int = 2024


@dataclass(frozen=True)
class OracleLRRange:
    max_size: int = 10
    n: int = 6


@dataclass(frozen=True)
class OracleHookRange:
    max_size: int = 8
    max_n: int = 5


@dataclass(frozen=True)
class NoRange:
    pass


@dataclass(frozen=True)
class Suite:
    suite_id: str
    summary: str
    config: type
    build: Callable[[Any], list[Case]]


# --- case builders -----------------------------------------------------------------


def _ps_recurrence(c: KNRange) -> list[Case]:
    return [Case(ps_recurrence_check, (k, n)) for k in range(1, c.max_k + 1) for n in range(2, c.max_n + 1)]


def _convolution(c: KNRange) -> list[Case]:
    return [Case(convolution_check, (m, n, k))
            for m in range(1, c.max_n + 1) for n in range(1, m + 1) for k in range(c.max_k + 1)]


def _lemm_first(c: KNRange) -> list[Case]:
    # identity 2 at n = k is a confirmed counterexample
    return [Case(dfamily.check_lemm_first, (k, n, j), expected=not (j == 2 and n == k))
            for k in range(1, c.max_k + 1) for n in range(k, max(c.max_n, k) + 1) for j in (1, 2, 3, 4)]


def _lemm_odd_even(c: KRange) -> list[Case]:
    cases = []
    for k in range(1, c.max_k + 1):
        cases.append(Case(dfamily.check_lemm_odd_even, (k, False), expected=k <= 2))
        cases.append(Case(dfamily.check_lemm_odd_even, (k, True)))
    return cases


def _theo_odd_even(c: KRange) -> list[Case]:
    return [Case(dfamily.check_theo_odd_even, (k, k + 3)) for k in range(1, c.max_k + 1)]


def _coro_signs(c: MRange) -> list[Case]:
    return [Case(dfamily.check_coro_signs, (m,)) for m in range(max(c.min_m, 2), c.max_m + 1)]


def _theo_s(c: MRange) -> list[Case]:
    return [Case(dfamily.check_theo_s, (m,)) for m in range(c.min_m, c.max_m + 1)]


def _tables(_: NoRange) -> list[Case]:
    cases = []
    for m, rows in tables.GOLDEN_D_FAMILY.items():
        for i in rows:
            cases.append(Case(tables.check_table_row, ("d-family", m, i), expected=f"D[{m},{i}]" not in tables.KNOWN_ERRATA))
    for key, rows in tables.GOLDEN_DABKR.items():
        for k in rows:
            label = f"D({key[0]},{key[1]},{k},{key[2]})"
            cases.append(Case(tables.check_table_row, ("dabkr", key, k), expected=label not in tables.KNOWN_ERRATA))
    cases += [Case(tables.check_errata, (label,)) for label in tables.KNOWN_ERRATA]
    return cases


def _dabkr_shift(c: RRange) -> list[Case]:
    return [Case(dfamily.check_dabkr_shift, (dfamily.DabkrIndex(a, b, k, r),))
            for r in range(1, c.max_r + 1) for k in range(1, r + 1) for b in range(1, k + 1) for a in range(1, b + 1)]


def _lemm_two(c: RRange) -> list[Case]:
    cases = [Case(dfamily.check_lemm_two, (a, b, k, r))
             for r in range(c.max_r + 1) for k in range(r + 1) for b in range(1, k + 1) for a in range(b)]
    # the boundary b = a is outside the range where the recurrence holds
    cases.append(Case(dfamily.check_lemm_two, (1, 1, 1, 2), expected=False))
    return cases


def _mainconj(c: MainConjRange) -> list[Case]:
    return [Case(dfamily.check_mainconj, (a, b, r))
            for b in range(c.max_b + 1) for a in range(b + 1) for r in range(c.max_r + 1)]


def _narayana_qlc(c: NRange) -> list[Case]:
    return [Case(logconvex.narayana_strong_convexity, (c.max_n,))]


def _weak_not_strong(_: NoRange) -> list[Case]:
    ex = logconvex.WEAK_NOT_STRONG_EXAMPLE
    return [Case(logconvex.is_q_log_convex, (ex,)), Case(logconvex.is_strongly_q_log_convex, (ex,), expected=False)]


def _bf_narayana(c: NRange) -> list[Case]:
    return [Case(logconvex.check_butler_flanigan, (tuple(narayana_polys(c.max_n + 1)),), expected=False)]


def _bf_reference(_: NoRange) -> list[Case]:
    triangular = tuple(q ** (k * (k - 1) // 2) for k in range(8))
    geometric = tuple(q**k for k in range(8))
    return [
        Case(logconvex.check_butler_flanigan, (triangular,)),
        Case(logconvex.check_butler_flanigan, (geometric,), expected=False),
        Case(logconvex.check_butler_flanigan, ((ONE, ONE, ONE),), expected=False),
    ]


def _lem1(c: NRange) -> list[Case]:
    cases = [Case(transform.check_lem1, (n, r)) for n in range(1, c.max_n + 1) for r in range(2 * n)]
    return cases + [Case(transform.check_quartic_cases, (n,)) for n in range(1, c.max_n + 1)]


def _alpha(c: NRange) -> list[Case]:
    cases = [Case(transform.check_alpha_threshold, (n, r)) for n in range(1, c.max_n + 1) for r in range(2 * n + 1)]
    return cases + [Case(transform.check_alpha_sum, (n,)) for n in range(1, c.max_n + 1)]


def _transform(c: SampleRange) -> list[Case]:
    rng = random.Random(c.seed)
    length = transform.RandomSequenceConfig().length
    cases = [Case(transform.check_transform_preserves, (tuple(transform.random_log_convex_sequence(rng)), length))
             for _ in range(c.count)]
    alternating = tuple((-1) ** k for k in range(length))
    cases += [
        Case(transform.check_transform_preserves, ((1,) * length, length)),
        Case(transform.check_transform_preserves, (tuple(math.factorial(k) + 1 for k in range(length)), length)),
        Case(transform.check_transform_preserves, (alternating, length), expected=False),
        Case(transform.check_raw_transform, (alternating, length), expected=False),
    ]
    return cases


def _sect6_identities(c: Sect6Range) -> list[Case]:
    return [Case(concavity.check_sect6_identities, (m, n, k))
            for m in range(1, c.max_m + 1) for n in range(1, m + 1) for k in range(1, c.max_k + 1)]


def _fixed_k_decomposition(c: Sect6Range) -> list[Case]:
    return [Case(concavity.check_fixed_k_decomposition, (m, n, k))
            for m in range(2, c.max_m + 1) for n in range(2, m + 1) for k in range(1, c.max_k + 1)]


def _fixed_n(c: FixedNRange) -> list[Case]:
    return [Case(concavity.check_qn_concave_fixed_n, (n, n)) for n in range(1, c.max_n + 1)]


def _fixed_k(c: FixedKRange) -> list[Case]:
    return [Case(concavity.check_qn_concave_fixed_k, (k, c.max_n)) for k in range(1, c.max_k + 1)]


def _two_column_difference(c: KRange) -> list[Case]:
    return [Case(concavity.check_two_column_difference, (k, l)) for k in range(1, c.max_k + 1) for l in range(1, k + 1)]


def _sect6_coro(c: KRange) -> list[Case]:
    return [Case(concavity.check_sect6_coro, (k,)) for k in range(1, c.max_k + 1)]


def _lpp(c: SampleRange) -> list[Case]:
    rng = random.Random(c.seed)
    return [Case(concavity.check_lpp_small, concavity.random_skew_pair(rng)) for _ in range(c.count)]


def _oracle_lr(c: OracleLRRange) -> list[Case]:
    return [Case(oracles.check_lr_vs_ssyt, (a, total - a, c.n)) for total in range(c.max_size + 1) for a in range(total + 1)]


def _oracle_hook(c: OracleHookRange) -> list[Case]:
    return [Case(oracles.check_hook_content_vs_ssyt, (size, n))
            for size in range(c.max_size + 1) for n in range(c.max_n + 1)]


def _oracle_narayana(c: NRange) -> list[Case]:
    return [Case(oracles.check_narayana_vs_dyck, (n,)) for n in range(c.max_n + 1)]


def _qnarayana_dual(c: NRange) -> list[Case]:
    return [Case(oracles.check_qnarayana_dual, (n, k)) for n in range(1, c.max_n + 1) for k in range(n)]


SUITES: dict[str, Suite] = {
    s.suite_id: s
    for s in [
        Suite("ps-recurrence", "two-column principal specialization recurrences", KNRange, _ps_recurrence),
        Suite("convolution", "q=1 convolution of two-column specializations", KNRange, _convolution),
        Suite("lemm-first", "Delta^(2) product identities, with the n=k counterexample", KNRange, _lemm_first),
        Suite("lemm-odd-even", "Q-family expansions of the D-components", KRange, _lemm_odd_even),
        Suite("theo-odd-even", "closed forms and recurrences of D_{m,i}", KRange, _theo_odd_even),
        Suite("coro-signs", "sign pattern of D_{m,i}", MRange, _coro_signs),
        Suite("theo-s", "sum_i D_{m,i} equals the Par_{2,4}(2m-2) sum", MRange, _theo_s),
        Suite("tables", "golden D-family and D(a,b,k,r) rows, with known errata", NoRange, _tables),
        Suite("dabkr-shift", "D(a,b,k,r) = D(a-1,b-1,k-1,r-1)", RRange, _dabkr_shift),
        Suite("lemm-two", "tilde-Delta recurrence of the D_i(a,b,k,r)", RRange, _lemm_two),
        Suite("mainconj", "s-positivity of sum_k D(a,b,k,r)", MainConjRange, _mainconj),
        Suite("narayana-strong-qlc", "strong q-log-convexity of the Narayana polynomials", NRange, _narayana_qlc),
        Suite("weak-not-strong", "q-log-convex but not strongly q-log-convex example", NoRange, _weak_not_strong),
        Suite("butler-flanigan-narayana", "Narayana polynomials fail the alternative convexity", NRange, _bf_narayana),
        Suite("butler-flanigan-reference", "reference sequences for the alternative convexity", NoRange, _bf_reference),
        Suite("lem1", "quartic derivative factorization and monotonicity", NRange, _lem1),
        Suite("alpha", "alpha sign threshold and the alpha' coefficient sums", NRange, _alpha),
        Suite("transform", "Narayana transformation preserves log-convexity", SampleRange, _transform),
        Suite("sect6-identities", "inversion identities for two-column evaluations", Sect6Range, _sect6_identities),
        Suite("fixed-k-decomposition", "splitting of the fixed-k q-Narayana difference", Sect6Range, _fixed_k_decomposition),
        Suite("qn-concave-fixed-n", "strong q-log-concavity of N_q(n, .)", FixedNRange, _fixed_n),
        Suite("qn-concave-fixed-k", "strong q-log-concavity of N_q(., k)", FixedKRange, _fixed_k),
        Suite("two-column-difference", "s_(2^k)s_(2^l) - s_(2^(k+1))s_(2^(l-1)) is s-positive", KRange, _two_column_difference),
        Suite("sect6-coro", "skew-product differences are s-positive", KRange, _sect6_coro),
        Suite("lpp", "join/meet skew-product differences on random small pairs", SampleRange, _lpp),
        Suite("oracle-lr", "LR products against tableau counts and SSYT sums", OracleLRRange, _oracle_lr),
        Suite("oracle-hook-content", "hook-content formula against SSYT enumeration", OracleHookRange, _oracle_hook),
        Suite("oracle-narayana", "Narayana numbers against Dyck-path peaks", NRange, _oracle_narayana),
        Suite("qnarayana-dual", "q-Narayana closed form against the Schur evaluation", NRange, _qnarayana_dual),
    ]
}

# defaults that differ from the config class defaults
_SUITE_DEFAULTS: dict[str, dict[str, int]] = {
    "lem1": {"max_n": 10},
    "alpha": {"max_n": 12},
    "butler-flanigan-narayana": {"max_n": 8},
    "oracle-narayana": {"max_n": 10},
    "qnarayana-dual": {"max_n": 12},
    "lemm-odd-even": {"max_k": 6},
    "theo-odd-even": {"max_k": 6},
    "two-column-difference": {"max_k": 6},
    "sect6-coro": {"max_k": 6},
    "lpp": {"count": 200},
}


def config_fields(suite_id: str) -> list[str]:
    return [f.name for f in fields(SUITES[suite_id].config)]


def make_config(suite_id: str, overrides: dict[str, int] | None = None, env: dict[str, str] | None = None):
    """Defaults, then SCHURPOS_<FIELD> environment values, then explicit overrides."""
    suite = SUITES[suite_id]
    cfg = replace(suite.config(), **_SUITE_DEFAULTS.get(suite_id, {}))
    env = os.environ if env is None else env
    names = config_fields(suite_id)
    from_env = {name: int(env[ENV_PREFIX + name.upper()]) for name in names if ENV_PREFIX + name.upper() in env}
    cfg = replace(cfg, **from_env)
    overrides = overrides or {}
    unknown = set(overrides) - set(names)
    if unknown:
        raise KeyError(f"suite {suite_id} has no range parameter(s) {sorted(unknown)}; known: {names}")
    cfg = replace(cfg, **overrides)
    for name in names:
        if getattr(cfg, name) < 0:
            raise ValueError(f"{name} must be nonnegative")
    return cfg


def build_cases(suite_id: str, cfg=None) -> list[Case]:
    cfg = make_config(suite_id) if cfg is None else cfg
    return SUITES[suite_id].build(cfg)


def run_suite(suite_id: str, cfg=None, jobs: int = 1) -> list[CheckReport]:
    """Run every case; the result order is the case order regardless of ``jobs``."""
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    cases = build_cases(suite_id, cfg)
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_case, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    return [c.run() for c in cases]
