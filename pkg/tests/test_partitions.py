import pytest
from conftest import partitions
from hypothesis import given, strategies as st

from schurpos.partitions import (
    Cell,
    Partition,
    SkewShape,
    conjugate,
    contains,
    content,
    format_partition,
    hook_length,
    is_horizontal_strip,
    is_vertical_strip,
    join,
    meet,
    parse_partition,
    partitions_inside,
    partitions_of,
    partitions_with_parts_in,
    q_family,
    union,
)

P = Partition


def test_partition_normalises_and_rejects():
    assert P([3, 1, 0, 0]) == P([3, 1])
    assert P().size == 0 and P().length == 0
    with pytest.raises(ValueError):
        P([1, 2])
    with pytest.raises(ValueError):
        P([2, -1])


@pytest.mark.parametrize(
    "lam, want",
    [((), ()), ((4, 2, 2, 1, 1, 1), (6, 3, 1, 1)), ((2, 2), (2, 2))],
)
def test_conjugate_examples(lam, want):
    assert conjugate(P(lam)) == P(want)


@pytest.mark.parametrize(
    "mu, lam, want",
    [((), (3, 1), True), ((2, 2), (2, 1), False), ((4, 2, 1), (9, 5, 3, 3, 1), True), ((1, 1, 1), (3,), False)],
)
def test_contains(mu, lam, want):
    assert contains(P(mu), P(lam)) is want


def test_union_examples():
    assert union(P((4, 3, 2)), P((3, 1))) == P((4, 3, 3, 2, 1))
    assert union(P((5, 1)), P()) == P((5, 1))
    assert union(P((2, 2)), P((2, 2))) == P((2, 2, 2, 2))


def test_hook_and_content():
    assert hook_length(P((1,)), Cell(1, 1)) == 1
    assert hook_length(P((2, 2)), Cell(1, 1)) == 3
    assert hook_length(P((2, 2)), Cell(2, 2)) == 1
    with pytest.raises(ValueError):
        hook_length(P((2, 2)), Cell(3, 1))
    assert [content(Cell(*c)) for c in [(1, 1), (1, 2), (3, 1)]] == [0, 1, -2]


def test_strips():
    assert is_horizontal_strip(SkewShape(P((3, 1)), P((1,))))
    assert not is_horizontal_strip(SkewShape(P((2, 2)), P((1,))))
    assert is_vertical_strip(SkewShape(P((1, 1))))
    with pytest.raises(ValueError):
        SkewShape(P((2,)), P((1, 1)))


def test_parts_in_set():
    assert partitions_with_parts_in({2, 4}, 4) == [P((4,)), P((2, 2))]
    assert partitions_with_parts_in({2, 4}, 6) == [P((4, 2)), P((2, 2, 2))]
    assert partitions_with_parts_in({2, 4}, 3) == []
    assert partitions_with_parts_in({2, 4}, 0) == [P()]


def test_q_family():
    assert q_family(P(), 4) == [P((4,)), P((3, 1)), P((2, 2))]
    assert q_family(P((2, 2)), 4) == [P((2, 2))]
    assert q_family(P(), 2) == []
    # the (3,3,2,2,2) family at 14 has exactly the three one-block extensions
    assert q_family(P((3, 3, 2, 2, 2)), 16) == sorted(
        [P((4, 3, 3, 2, 2, 2)), P((3, 3, 3, 2, 2, 2, 1)), P((3, 3, 2, 2, 2, 2, 2))], reverse=True
    )


def test_join_meet_examples():
    a, b = SkewShape(P((2, 1))), SkewShape(P((1, 1, 1)))
    assert join(a, b) == SkewShape(P((2, 1, 1)))
    assert join(a, a) == a
    assert meet(SkewShape(P((2, 2)), P((1,))), SkewShape(P((3, 1)), P((1, 1)))) == SkewShape(P((2, 1)), P((1,)))


def test_partition_counts():
    # p(n), n = 0..12
    assert [len(partitions_of(n)) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    assert partitions_of(4) == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]


def test_parse_partition():
    assert parse_partition("4,3^2,1") == P((4, 3, 3, 1))
    assert parse_partition("2^3") == P((2, 2, 2))
    assert parse_partition("-") == P()
    for bad in ["0", "3,0", "a", "1,2", "2^x"]:
        with pytest.raises(ValueError):
            parse_partition(bad)


@given(partitions(12))
def test_conjugate_is_an_involution(lam):
    lam = P(lam)
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions(12))
def test_hook_lengths_match_cell_count(lam):
    lam = P(lam)
    for c in lam.cells():
        h = hook_length(lam, c)
        arm = lam[c.row - 1] - c.col
        leg = sum(1 for r in lam[c.row :] if r >= c.col)
        assert h == arm + leg + 1


@given(partitions(10))
def test_format_round_trip(lam):
    lam = P(lam)
    assert parse_partition(format_partition(lam) or "-") == lam


@given(partitions(7))
def test_partitions_inside(lam):
    lam = P(lam)
    inside = partitions_inside(lam)
    assert len(set(inside)) == len(inside)
    assert all(contains(mu, lam) for mu in inside)
    brute = [mu for n in range(lam.size + 1) for mu in partitions_of(n) if contains(mu, lam)]
    assert set(brute) == set(inside)


@given(partitions(6), partitions(6), partitions(6), partitions(6))
def test_join_meet_lattice(o1, i1, o2, i2):
    def shape(o, i):
        o, i = P(o), P(i)
        return SkewShape(join(SkewShape(o), SkewShape(i)).outer, meet(SkewShape(o), SkewShape(i)).outer)

    a, b = shape(o1, i1), shape(o2, i2)
    assert join(a, b) == join(b, a)
    assert meet(a, b) == meet(b, a)
    assert join(a, meet(a, b)) == a
    assert join(a, b).size + meet(a, b).size == a.size + b.size
