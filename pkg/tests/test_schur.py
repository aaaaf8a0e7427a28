import pytest
from _oracles import lr_bialternant, ps_coefficients
from conftest import partitions
from hypothesis import assume, given, settings, strategies as st

from schurpos.partitions import Partition, SkewShape, partitions_of
from schurpos.qpoly import LaurentPoly, ZERO
from schurpos.schur import (
    SchurSum,
    Tableau,
    delta,
    is_lattice_word,
    iter_ssyt,
    lr_coefficient,
    lr_product,
    lr_tableaux,
    pieri_col,
    pieri_row,
    reverse_reading_word,
    s,
    s2,
    skew_to_schur,
    ssyt_weight_sum,
    tilde_delta,
)

P = Partition


def S(text):
    return SchurSum.parse(text)


# Littlewood-Richardson fillings of (9,5,3,3,1)/(4,2,1) with content (7,4,3)
WORKED_LR_TABLEAUX = [
    ((1, 1, 1, 1, 1), (1, 1, 2), (2, 2), (2, 3, 3), (3,)),
    ((1, 1, 1, 1, 1), (1, 2, 2), (2, 2), (1, 3, 3), (3,)),
    ((1, 1, 1, 1, 1), (1, 2, 2), (1, 2), (2, 3, 3), (3,)),
]

# frozen from tests/_oracles.lr_bialternant
FROZEN_PRODUCTS = {
    ((2, 1), (2, 1)): "s[4,2] + s[4,1,1] + s[3,3] + 2*s[3,2,1] + s[3,1,1,1] + s[2,2,2] + s[2,2,1,1]",
    ((2, 2), (2, 2)): "s[4,4] + s[4,3,1] + s[4,2,2] + s[3,3,1,1] + s[3,2,2,1] + s[2,2,2,2]",
    ((3, 1), (2, 1, 1)): "s[5,2,1] + s[5,1,1,1] + s[4,3,1] + s[4,2,2] + 2*s[4,2,1,1] + s[4,1,1,1,1]"
    " + s[3,3,1,1] + s[3,2,2,1] + s[3,2,1,1,1]",
    ((4, 2), (2, 2)): "s[6,4] + s[6,3,1] + s[6,2,2] + s[5,4,1] + s[5,3,2] + s[5,3,1,1] + s[5,2,2,1]"
    " + s[4,4,2] + s[4,3,2,1] + s[4,2,2,2]",
}


def test_schur_sum_basics():
    f = S("s[4,3^2] - 2*s[1] + s[]")
    assert f.coefficient((4, 3, 3)) == 1 and f.coefficient((1,)) == -2 and f.coefficient(()) == 1
    assert (f - f) == SchurSum() and not (f - f)
    assert SchurSum({P((2,)): 0}) == SchurSum()
    assert f.render() == "s[4,3,3] - 2*s[1] + s[]"
    assert f.render_short() == "s[4,3^2] - 2*s[1] + s[]"
    assert SchurSum.parse(f.render()) == f
    assert SchurSum.from_records(f.to_records()) == f
    assert S("0") == SchurSum() and SchurSum().render() == "0"
    assert (f * 3).coefficient((1,)) == -6


def test_positivity_predicates():
    assert S("s[2] + s[1,1]").is_s_positive()
    assert S("-s[2]").is_s_negative() and not S("-s[2]").is_s_positive()
    assert SchurSum().is_s_positive() and SchurSum().is_s_negative()
    assert S("s[2] - s[1,1]").negative_terms() == [(P((1, 1)), -1)]


def test_two_column_convention():
    assert s2(2, 1) == s((2, 2, 1))
    assert s2(-1) == SchurSum() and s2(2, -1) == SchurSum()
    assert s2(0) == s(())


def test_lattice_words():
    assert is_lattice_word((1, 1, 2, 1, 2, 3))
    assert not is_lattice_word((2, 1))
    assert is_lattice_word(())
    assert not is_lattice_word((1, 2, 2))


def test_reverse_reading_word():
    assert reverse_reading_word(Tableau(SkewShape(P((3,))), ((1, 1, 2),))) == (2, 1, 1)
    assert reverse_reading_word(Tableau(SkewShape(P()), ())) == ()
    t = Tableau(SkewShape(P((9, 5, 3, 3, 1)), P((4, 2, 1))), WORKED_LR_TABLEAUX[0])
    assert reverse_reading_word(t) == (1, 1, 1, 1, 1, 2, 1, 1, 2, 2, 3, 3, 2, 3)


def test_worked_lr_example():
    lam, mu, nu = P((9, 5, 3, 3, 1)), P((4, 2, 1)), P((7, 4, 3))
    assert lr_coefficient(lam, mu, nu) == 3
    found = lr_tableaux(lam, mu, nu)
    assert sorted(t.rows for t in found) == sorted(WORKED_LR_TABLEAUX)
    for t in found:
        assert t.is_semistandard() and t.type() == tuple(nu)
        assert is_lattice_word(reverse_reading_word(t))
    assert lr_product(s(mu), s(nu)).coefficient(lam) == 3


def test_lr_coefficient_edges():
    assert lr_coefficient((3, 1), (3, 1), ()) == 1
    assert lr_coefficient((3, 1), (2,), (3,)) == 0  # size mismatch
    assert lr_coefficient((3, 1), (1, 1, 1), (1,)) == 0  # mu not inside lam
    lam, mu, nu = (4, 3, 3, 2, 2, 1), (2, 2, 2, 2, 2, 1), (2, 1, 1)
    # column strictness forces the single filling 1 1 / 2 / 3
    assert lr_coefficient(lam, mu, nu) == 1
    assert lr_product(s(mu), s(nu)).coefficient(lam) == 1


@pytest.mark.parametrize("pair", sorted(FROZEN_PRODUCTS))
def test_frozen_products(pair):
    mu, nu = pair
    assert lr_product(s(mu), s(nu)) == S(FROZEN_PRODUCTS[pair])
    assert lr_product(s(nu), s(mu)) == S(FROZEN_PRODUCTS[pair])


def test_product_examples_and_rendering_order():
    got = lr_product(s((2, 1)), s((1,)))
    assert got.render() == "s[3,1] + s[2,2] + s[2,1,1]"
    f = S("s[4,3] - s[2]")
    assert lr_product(f, s(())) == f
    assert lr_product(f, SchurSum()) == SchurSum()


def test_pieri():
    assert pieri_row(P((1,)), 1) == S("s[2] + s[1,1]")
    assert pieri_col(P((2, 1)), 2) == S("s[3,2] + s[3,1,1] + s[2,2,1] + s[2,1,1,1]")
    assert pieri_row(P((2, 1)), 0) == s((2, 1))


def test_skew_to_schur():
    assert skew_to_schur(SkewShape(P((3, 2)))) == s((3, 2))
    assert skew_to_schur(SkewShape(P((2, 2)), P((1,)))) == s((2, 1))
    assert skew_to_schur(SkewShape(P((2, 2)), P((2, 2)))) == s(())
    # a disconnected shape is the product of its pieces
    assert skew_to_schur(SkewShape(P((3, 1)), P((1,)))) == lr_product(s((2,)), s((1,)))


def test_delta_operators():
    f = S("s[4,3,2] + 3*s[2,2,1] + 2*s[5]")
    assert delta(P((3, 1)), f) == S("s[4,3,3,2,1] + 3*s[3,2,2,1,1] + 2*s[5,3,1]")
    assert delta(P(), f) == f
    assert delta(P((2,)), s((2, 2))) == s((2, 2, 2))
    assert tilde_delta(P(), P(), f, f) == f
    assert tilde_delta(P((1,)), P((3,)), s((2,)), s((2,))) == S("s[2,1] + s[3,2]")
    assert tilde_delta(P(), P(), 2 * s((1,)), 3 * s((1,))) == 3 * s((1,))


def test_ssyt_weight_sum_examples():
    assert ssyt_weight_sum(P((1,)), 2) == LaurentPoly.from_coeffs([1, 1])
    assert ssyt_weight_sum(P((2,)), 2) == LaurentPoly.from_coeffs([1, 1, 1])
    assert ssyt_weight_sum(P((1, 1)), 1) == ZERO
    assert ssyt_weight_sum(P((2, 2)), 3) == LaurentPoly(ps_coefficients((2, 2), 3))
    skew = SkewShape(P((2, 1)), P((1,)))
    assert ssyt_weight_sum(skew, 3) == ssyt_weight_sum(P((1,)), 3) ** 2


@given(partitions(4), partitions(4))
@settings(max_examples=30)
def test_lr_dp_matches_bialternant_oracle(mu, nu):
    assume(len(mu) + len(nu) <= 5)  # the oracle is factorial in the number of variables
    prod = lr_product(s(mu), s(nu))
    assert dict(prod.items()) == {P(k): v for k, v in lr_bialternant(mu, nu).items()}


@given(partitions(5), partitions(4))
def test_lr_dfs_matches_dp(mu, nu):
    prod = lr_product(s(mu), s(nu))
    for lam in partitions_of(sum(mu) + sum(nu)):
        assert lr_coefficient(lam, mu, nu) == prod.coefficient(lam)


@given(partitions(5), partitions(5))
def test_lr_symmetry_and_conjugation(mu, nu):
    prod = lr_product(s(mu), s(nu))
    assert prod == lr_product(s(nu), s(mu))
    conj = lr_product(s(P(mu).conjugate()), s(P(nu).conjugate()))
    assert conj == SchurSum({lam.conjugate(): c for lam, c in prod.items()})


@given(partitions(4), partitions(3), partitions(3))
@settings(max_examples=25)
def test_lr_associativity(a, b, c):
    left = lr_product(lr_product(s(a), s(b)), s(c))
    right = lr_product(s(a), lr_product(s(b), s(c)))
    assert left == right


@given(partitions(6), st.integers(0, 4))
def test_pieri_agrees_with_lr(mu, n):
    assert pieri_row(P(mu), n) == lr_product(s(mu), s((n,) if n else ()))
    assert pieri_col(P(mu), n) == lr_product(s(mu), s((1,) * n))


@given(partitions(6), st.integers(1, 4))
def test_iter_ssyt_matches_oracle_and_weight_sum(lam, n):
    lam = P(lam)
    tabs = list(iter_ssyt(SkewShape(lam), n))
    assert all(t.is_semistandard() for t in tabs)
    oracle = ps_coefficients(tuple(lam), n)
    assert len(tabs) == sum(oracle.values())
    assert ssyt_weight_sum(lam, n) == LaurentPoly(oracle)
