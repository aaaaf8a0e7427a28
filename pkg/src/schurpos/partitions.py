"""Integer partitions, skew shapes and the shape families used by the D-family identities.

Partitions are stored canonically (no zero parts), so structural equality is
partition equality.  Every function that returns a list of partitions returns it
in decreasing lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "SkewShape",
    "Cell",
    "EMPTY",
    "conjugate",
    "contains",
    "union",
    "hook_length",
    "content",
    "is_horizontal_strip",
    "is_vertical_strip",
    "partitions_of",
    "partitions_with_parts_in",
    "q_family",
    "partitions_inside",
    "join",
    "meet",
    "parse_partition",
    "format_partition",
    "two_column",
    "rectangle",
]


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    if not lam:
        return "-"
    out = []
    for value, group in groupby(lam):
        k = len(list(group))
        out.append(f"{value}^{k}" if k > 1 else str(value))
    return ",".join(out)


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), reading missing parts as 0."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield Cell(i, j)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError(f"cell coordinates are 1-based: {self}")


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.inner, self.outer):
            raise ValueError(f"inner {self.inner} is not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self.outer, start=1):
            for j in range(self.inner.part(i - 1) + 1, row + 1):
                yield Cell(i, j)

    def __str__(self) -> str:
        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff mu is contained in lam (mu_i <= lam_i for all i)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def union(lam: Partition, mu: Partition) -> Partition:
    return Partition(sorted(lam + mu, reverse=True))


def hook_length(lam: Partition, c: Cell) -> int:
    lam = Partition(lam)
    if not (c.row <= len(lam) and c.col <= lam[c.row - 1]):
        raise ValueError(f"cell {c} lies outside the diagram of {lam}")
    conj = conjugate(lam)
    return lam[c.row - 1] + conj[c.col - 1] - c.row - c.col + 1


def content(c: Cell) -> int:
    return c.col - c.row


def _skew_cells(s: SkewShape) -> list[Cell]:
    return list(s.cells())


def is_horizontal_strip(s: SkewShape) -> bool:
    cols = [c.col for c in _skew_cells(s)]
    return len(cols) == len(set(cols))


def is_vertical_strip(s: SkewShape) -> bool:
    rows = [c.row for c in _skew_cells(s)]
    return len(rows) == len(set(rows))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n, decreasing lexicographic."""
    if max_part is None:
        max_part = n
    return [Partition(p) for p in _gen_parts(n, max_part, None)]


def _gen_parts(n: int, max_part: int, allowed: frozenset[int] | None) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        if allowed is not None and first not in allowed:
            continue
        for rest in _gen_parts(n - first, first, allowed):
            yield (first,) + rest


def partitions_with_parts_in(S: Iterable[int], n: int) -> list[Partition]:
    allowed = frozenset(S)
    if n < 0 or not allowed and n > 0:
        return []
    return [Partition(p) for p in _gen_parts(n, max(allowed, default=0), allowed)]


def q_family(mu: Partition, n: int) -> list[Partition]:
    """Partitions of n of the form mu + (4)^a + (3,1)^b + (2,2)^c (multiset union)."""
    mu = Partition(mu)
    rest = n - mu.size
    if rest < 0 or rest % 4:
        return []
    t = rest // 4
    found = set()
    for a in range(t + 1):
        for b in range(t - a + 1):
            c = t - a - b
            parts = list(mu) + [4] * a + [3, 1] * b + [2, 2] * c
            found.add(Partition(sorted(parts, reverse=True)))
    return sorted(found, reverse=True)


def partitions_inside(lam: Partition) -> list[Partition]:
    """Every partition mu contained in lam, decreasing lexicographic."""
    lam = Partition(lam)

    def rec(i: int, cap: int) -> Iterator[tuple]:
        if i == len(lam):
            yield ()
            return
        for p in range(min(cap, lam[i]), -1, -1):
            for rest in rec(i + 1, p) if p else [()]:
                yield (p,) + rest

    return [Partition(t) for t in rec(0, lam[0] if lam else 0)]


def _componentwise(a: Partition, b: Partition, op) -> Partition:
    n = max(len(a), len(b))
    return Partition(op(a.part(i), b.part(i)) for i in range(n))


def join(s1: SkewShape, s2: SkewShape) -> SkewShape:
    """Componentwise maximum of outers and of inners."""
    return SkewShape(_componentwise(s1.outer, s2.outer, max), _componentwise(s1.inner, s2.inner, max))


def meet(s1: SkewShape, s2: SkewShape) -> SkewShape:
    """Componentwise minimum of outers and of inners."""
    return SkewShape(_componentwise(s1.outer, s2.outer, min), _componentwise(s1.inner, s2.inner, min))


def two_column(a: int, b: int) -> Partition | None:
    """The shape (2^a, 1^b), or None when a < 0 or b < 0."""
    if a < 0 or b < 0:
        return None
    return Partition([2] * a + [1] * b)


def rectangle(part: int, times: int) -> Partition:
    return Partition([part] * times)


def parse_partition(text: str) -> Partition:
    """Parse ``4,3^2,1`` into (4, 3, 3, 1); ``-`` is the empty partition.

    A zero part is rejected, so ``0`` never silently means the empty partition.
    """
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        base, _, exp = token.partition("^")
        try:
            value = int(base)
            count = int(exp) if exp else 1
        except ValueError:
            raise ValueError(f"malformed partition token {token!r} in {text!r}") from None
        if value <= 0:
            raise ValueError(f"parts must be positive, got {token!r} (use '-' for the empty partition)")
        if count < 0 or (exp and count == 0):
            raise ValueError(f"bad multiplicity in {token!r}")
        parts.extend([value] * count)
    return Partition(parts)
