import pytest
from hypothesis import given, strategies as st

from schurpos.narayana import narayana_polys
from schurpos.qpoly import LaurentPoly, q
from schurpos.verify.logconvex import (
    WEAK_NOT_STRONG_EXAMPLE,
    check_butler_flanigan,
    first_negative,
    is_q_log_concave,
    is_q_log_convex,
    is_strongly_q_log_concave,
    is_strongly_q_log_convex,
    narayana_strong_convexity,
)

L = LaurentPoly


def dense_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def dense_sub_nonneg(a, b):
    n = max(len(a), len(b))
    a, b = a + [0] * (n - len(a)), b + [0] * (n - len(b))
    return all(x - y >= 0 for x, y in zip(a, b))


def brute_strong_convex(seq):
    # seq is a list of dense coefficient lists
    return all(
        dense_sub_nonneg(dense_mul(seq[m + 1], seq[n - 1]), dense_mul(seq[m], seq[n]))
        for m in range(1, len(seq) - 1)
        for n in range(1, m + 1)
    )


def test_first_negative():
    assert first_negative(L({0: 1, 2: -3, 5: -1})) == (2, -3)
    assert first_negative(1 + q) is None


def test_weak_not_strong_example():
    assert is_q_log_convex(WEAK_NOT_STRONG_EXAMPLE).passed
    rep = is_strongly_q_log_convex(WEAK_NOT_STRONG_EXAMPLE)
    assert not rep.passed
    assert rep.witness == {"m": 2, "n": 1, "exponent": 5, "coefficient": -2}
    f = WEAK_NOT_STRONG_EXAMPLE
    assert (f[3] * f[0] - f[2] * f[1]).coefficient(5) == -2


def test_constant_sequence_passes_all_four():
    ones = [L(1)] * 5
    for check in (is_q_log_convex, is_strongly_q_log_convex, is_q_log_concave, is_strongly_q_log_concave):
        rep = check(ones)
        assert rep.passed and rep.witness is None


def test_short_sequences_are_refused():
    with pytest.raises(ValueError):
        is_q_log_convex([L(1), L(1)])


def test_narayana_strong_convexity():
    assert is_strongly_q_log_convex(narayana_polys(13)).passed
    assert narayana_strong_convexity(14).passed


def test_butler_flanigan():
    rep = check_butler_flanigan(narayana_polys(9))
    assert not rep.passed
    assert rep.witness == {"m": 1, "n": 2, "exponent": 3, "coefficient": -1}
    # f_0 f_3 - q^2 f_1 f_2 at q^3
    N = narayana_polys(4)
    assert (N[0] * N[3] - (N[1] * N[2]).shift(2)).coefficient(3) == -1


def test_butler_flanigan_reference_sequences():
    # q^C(k,2): every difference vanishes identically
    tri = [L.monomial(k * (k - 1) // 2) for k in range(7)]
    assert check_butler_flanigan(tri).passed
    geo = [L.monomial(k) for k in range(7)]
    rep = check_butler_flanigan(geo)
    assert not rep.passed and rep.witness["coefficient"] == -1
    assert not check_butler_flanigan([L(1)] * 3).passed


coeff_lists = st.lists(st.integers(0, 4), min_size=1, max_size=4)


@given(st.lists(coeff_lists, min_size=2, max_size=5))
def test_strong_convexity_matches_dense_brute_force(seq):
    polys = [L.from_coeffs(c) for c in seq]
    assert is_strongly_q_log_convex(polys).passed == brute_strong_convex(seq)


@given(st.lists(coeff_lists, min_size=3, max_size=5))
def test_strong_implies_weak(seq):
    polys = [L.from_coeffs(c) for c in seq]
    if is_strongly_q_log_convex(polys).passed:
        assert is_q_log_convex(polys).passed
    if is_strongly_q_log_concave(polys).passed:
        assert is_q_log_concave(polys).passed


@given(st.lists(coeff_lists, min_size=2, max_size=5))
def test_reports_are_deterministic(seq):
    polys = [L.from_coeffs(c) for c in seq]
    assert is_strongly_q_log_convex(polys) == is_strongly_q_log_convex(list(polys))


@given(st.lists(coeff_lists, min_size=2, max_size=5))
def test_witness_present_iff_failed(seq):
    rep = is_strongly_q_log_concave([L.from_coeffs(c) for c in seq])
    assert (rep.witness is None) == rep.passed
