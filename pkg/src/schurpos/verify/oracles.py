"""Cross-checks of the fast routes against slow, independent ones."""

from __future__ import annotations

from ..narayana import dyck_peak_counts, narayana_num, q_narayana_closed_form
from ..partitions import SkewShape, partitions_of
from ..qpoly import ZERO, LaurentPoly
from ..report import CheckReport, report
from ..schur import iter_ssyt, lr_coefficient, lr_product, s, ssyt_weight_sum
from ..specialize import X, eval_geometric, ps

__all__ = [
    "check_lr_vs_ssyt",
    "check_hook_content_vs_ssyt",
    "check_narayana_vs_dyck",
    "check_qnarayana_dual",
]


def check_lr_vs_ssyt(size_mu: int, size_nu: int, n: int = 6) -> CheckReport:
    """For every mu |- size_mu and nu |- size_nu, compare s_mu s_nu three ways.

    The strip DP expansion is compared termwise with the tableau-count LR
    coefficient, and its principal specialization in n variables with the
    product of the two SSYT generating functions.
    """
    failures = []
    for mu in partitions_of(size_mu):
        for nu in partitions_of(size_nu):
            prod = lr_product(s(mu), s(nu))
            for lam in partitions_of(size_mu + size_nu):
                if prod.coefficient(lam) != lr_coefficient(lam, mu, nu):
                    failures.append({"mu": mu, "nu": nu, "lambda": lam})
            lhs = ssyt_weight_sum(mu, n) * ssyt_weight_sum(nu, n)
            rhs = ZERO
            for lam, c in prod.items():
                rhs = rhs + ssyt_weight_sum(lam, n) * c
            if lhs != rhs:
                failures.append({"mu": mu, "nu": nu, "ssyt_difference": lhs - rhs})
    return report("oracle-lr", {"size_mu": size_mu, "size_nu": size_nu, "n": n}, failures)


def _enumerated(lam, n: int) -> LaurentPoly:
    weights: dict[int, int] = {}
    for t in iter_ssyt(SkewShape(lam), n):
        e = sum(v - 1 for row in t.rows for v in row)
        weights[e] = weights.get(e, 0) + 1
    return LaurentPoly(weights)


def check_hook_content_vs_ssyt(size: int, n: int) -> CheckReport:
    """Hook-content ps_n(s_lam) against brute-force SSYT enumeration, for every lam |- size."""
    failures = []
    for lam in partitions_of(size):
        if ps(lam, n) != _enumerated(lam, n):
            failures.append({"lambda": lam})
    return report("oracle-hook-content", {"size": size, "n": n}, failures)


def check_narayana_vs_dyck(n: int) -> CheckReport:
    counts = dyck_peak_counts(n)
    # counts[p] is indexed by peaks, N(n, k) by peaks minus one
    got = counts[1:] if n else [1]
    want = [narayana_num(n, k) for k in range(len(got))]
    failures = [] if got == want else [{"dyck": got, "formula": want}]
    return report("oracle-narayana", {"n": n}, failures)


def check_qnarayana_dual(n: int, k: int) -> CheckReport:
    """The q-binomial closed form equals s_(2^k) evaluated on X_n."""
    closed = q_narayana_closed_form(n, k)
    schur = eval_geometric((2,) * k, X(n))
    failures = [] if closed == schur else [{"closed": closed, "schur": schur}]
    return report("qnarayana-dual", {"n": n, "k": k}, failures)
