"""Symmetric functions in the Schur basis.

Two independent Littlewood-Richardson routes live here:

* :func:`lr_tableaux` / :func:`lr_coefficient` fill the skew diagram cell by cell
  in reverse reading order, pruning on row weakness, column strictness, the
  lattice condition and the remaining type.
* :func:`lr_product` builds the product by adding one horizontal strip per row
  of the second factor, merging identical intermediate states.

:func:`ssyt_weight_sum` is a third route that never looks at reading words: it
enumerates semistandard fillings by peeling off the largest entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    contains,
    format_partition,
    parse_partition,
    two_column,
    union,
)
from .qpoly import ONE, ZERO, LaurentPoly

__all__ = [
    "SchurSum",
    "Tableau",
    "s",
    "s2",
    "is_lattice_word",
    "reverse_reading_word",
    "lr_tableaux",
    "lr_coefficient",
    "lr_product",
    "pieri_row",
    "pieri_col",
    "skew_to_schur",
    "delta",
    "tilde_delta",
    "ssyt_weight_sum",
    "iter_ssyt",
]


class SchurSum:
    """Finite integer combination of Schur functions, keyed by partition."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[Partition, int] = {}
        for lam, c in items:
            lam = Partition(lam)
            t[lam] = t.get(lam, 0) + int(c)
        self._t = {lam: c for lam, c in t.items() if c}

    @classmethod
    def basis(cls, lam: Iterable[int] | None, coeff: int = 1) -> SchurSum:
        if lam is None:
            return cls()
        return cls({Partition(lam): coeff})

    @classmethod
    def parse(cls, text: str) -> SchurSum:
        """Inverse of :meth:`render` (also accepts shorthand parts like ``s[3^2,1]``)."""
        text = text.strip()
        if text == "0":
            return cls()
        out: dict[Partition, int] = {}
        sign = 1
        for tok in text.replace(" - ", " + -").split(" + "):
            tok = tok.strip()
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:].strip()
            coeff = 1
            if "*" in tok:
                c, tok = tok.split("*", 1)
                coeff = int(c)
            if not (tok.startswith("s[") and tok.endswith("]")):
                raise ValueError(f"cannot parse Schur term {tok!r}")
            lam = parse_partition(tok[2:-1] or "-")
            out[lam] = out.get(lam, 0) + sign * coeff
        return cls(out)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in decreasing lexicographic order of the partition."""
        return sorted(self._t.items(), reverse=True)

    def coefficient(self, lam: Iterable[int]) -> int:
        return self._t.get(Partition(lam), 0)

    def support(self) -> set[Partition]:
        return set(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __iter__(self):
        return iter(self.items())

    def is_s_positive(self) -> bool:
        return all(c >= 0 for c in self._t.values())

    def is_s_negative(self) -> bool:
        return all(c <= 0 for c in self._t.values())

    def negative_terms(self) -> list[tuple[Partition, int]]:
        return [(lam, c) for lam, c in self.items() if c < 0]

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._t
        if not isinstance(other, SchurSum):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __add__(self, other: SchurSum) -> SchurSum:
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self._t)
        for lam, c in other._t.items():
            out[lam] = out.get(lam, 0) + c
        return SchurSum(out)

    __radd__ = __add__

    def __neg__(self) -> SchurSum:
        return SchurSum({lam: -c for lam, c in self._t.items()})

    def __sub__(self, other: SchurSum) -> SchurSum:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurSum({lam: c * other for lam, c in self._t.items()})
        if isinstance(other, SchurSum):
            return lr_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def render(self) -> str:
        """``s[3,1] + 2*s[2,2] - s[2,1,1]`` in decreasing-lex order; ``0`` when empty."""
        if not self._t:
            return "0"
        pieces = []
        for idx, (lam, c) in enumerate(self.items()):
            body = "s[" + ",".join(map(str, lam)) + "]"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if idx == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def render_short(self) -> str:
        """Like :meth:`render` but with exponent shorthand, e.g. ``s[3^2,2^3]``."""
        if not self._t:
            return "0"
        pieces = []
        for idx, (lam, c) in enumerate(self.items()):
            body = f"s[{format_partition(lam) if lam else ''}]"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if idx == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def to_records(self) -> list[dict]:
        return [{"partition": list(lam), "coefficient": c} for lam, c in self.items()]

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(r, separators=(",", ":")) for r in self.to_records())

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> SchurSum:
        return cls((Partition(r["partition"]), r["coefficient"]) for r in records)

    def __repr__(self) -> str:
        return f"SchurSum({self.render()})"

    __str__ = render


def s(lam: Iterable[int] | str = ()) -> SchurSum:
    """The basis element s_lambda; accepts a partition or its text form."""
    if isinstance(lam, str):
        lam = parse_partition(lam)
    return SchurSum.basis(lam)


def s2(a: int, b: int = 0) -> SchurSum:
    """s_{(2^a, 1^b)}, and the zero function when a < 0 or b < 0."""
    return SchurSum.basis(two_column(a, b))


# --- tableaux and reading words -------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """Filling of a skew shape; ``rows[i]`` lists the entries of row i+1 left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != len(outer):
            raise ValueError("one entry row per row of the outer shape")
        for i, row in enumerate(self.rows):
            if len(row) != outer[i] - inner.part(i):
                raise ValueError(f"row {i + 1} has the wrong number of entries")

    def entry(self, i: int, j: int) -> int | None:
        """Entry at 0-based (i, j), or None for cells of the inner shape / outside."""
        if i >= len(self.rows):
            return None
        off = self.shape.inner.part(i)
        if j < off or j >= off + len(self.rows[i]):
            return None
        return self.rows[i][j - off]

    def is_semistandard(self) -> bool:
        for i, row in enumerate(self.rows):
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            off = self.shape.inner.part(i)
            for k, v in enumerate(row):
                above = self.entry(i - 1, off + k) if i else None
                if above is not None and above >= v:
                    return False
        return True

    def type(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        top = max(counts, default=0)
        return tuple(counts.get(i, 0) for i in range(1, top + 1))

    def render(self) -> str:
        lines = []
        for i, row in enumerate(self.rows):
            lines.append(" ".join(["*"] * self.shape.inner.part(i) + [str(v) for v in row]))
        return "\n".join(lines)


def is_lattice_word(w: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for v in w:
        if v < 1:
            return False
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def reverse_reading_word(t: Tableau) -> tuple[int, ...]:
    return tuple(v for row in t.rows for v in reversed(row))


def _reading_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    return [(i, j) for i in range(len(outer)) for j in range(outer[i] - 1, inner.part(i) - 1, -1)]


def _fill_lr(outer: Partition, inner: Partition, typ: Partition | None) -> Iterator[dict]:
    """Yield LR fillings of outer/inner as {(i, j): value}; ``typ=None`` means any type."""
    cells = _reading_cells(outer, inner)
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (len(cells) + 2)  # counts[v] for v >= 1; counts[0] is a sentinel
    max_label = len(typ) if typ is not None else len(cells)

    def rec(pos: int) -> Iterator[dict]:
        if pos == len(cells):
            yield dict(grid)
            return
        i, j = cells[pos]
        hi = min(max_label, i + 1)
        right = grid.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if i > 0 and j >= inner.part(i - 1):
            lo = grid[(i - 1, j)] + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            if typ is not None and counts[v] + 1 > typ[v - 1]:
                continue
            counts[v] += 1
            grid[(i, j)] = v
            yield from rec(pos + 1)
            del grid[(i, j)]
            counts[v] -= 1

    if typ is not None and outer.size - inner.size != typ.size:
        return
    yield from rec(0)


def lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> list[Tableau]:
    """All LR tableaux of shape lam/mu and type nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not contains(mu, lam) or lam.size != mu.size + nu.size:
        return []
    shape = SkewShape(lam, mu)
    out = []
    for grid in _fill_lr(lam, mu, nu):
        rows = tuple(tuple(grid[(i, j)] for j in range(mu.part(i), lam[i])) for i in range(len(lam)))
        out.append(Tableau(shape, rows))
    return out


@lru_cache(maxsize=None)
def _lr_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    return sum(1 for _ in _fill_lr(lam, mu, nu))


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not contains(mu, lam) or not contains(nu, lam):
        return 0
    if mu.size > nu.size:
        mu, nu = nu, mu
    return _lr_count(lam, mu, nu)


# --- products ---------------------------------------------------------------------


def _horizontal_strips(shape: tuple[int, ...], size: int, prev_counts: tuple[int, ...] | None):
    """Ways to add a horizontal strip of ``size`` cells labelled i to ``shape``.

    ``prev_counts[r]`` is the number of (i-1)-labels in row r, or None for i = 1
    (no lattice constraint).  Yields (new_shape, per-row counts of label i).
    """
    rows = len(shape)
    limit_rows = rows + 1

    def rec(r: int, left: int, cum_prev: int, cum_cur: int, new: list, added: list):
        if r == limit_rows or left == 0:
            if left == 0:
                ns = tuple(new) + shape[r:]
                yield tuple(x for x in ns if x), tuple(added) + (0,) * (limit_rows - r)
            return
        cur = shape[r] if r < rows else 0
        cap = left if r == 0 else min(left, shape[r - 1] - cur)
        if prev_counts is not None:
            # the i's in rows <= r must not outnumber the (i-1)'s in rows < r
            cap = min(cap, cum_prev - cum_cur)
        for k in range(cap, -1, -1):
            new.append(cur + k)
            added.append(k)
            nxt_prev = cum_prev + (prev_counts[r] if prev_counts is not None and r < len(prev_counts) else 0)
            yield from rec(r + 1, left - k, nxt_prev, cum_cur + k, new, added)
            new.pop()
            added.pop()

    yield from rec(0, size, 0, 0, [], [])


@lru_cache(maxsize=None)
def _product_basis(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    states: dict[tuple, int] = {(tuple(mu), None): 1}
    for part in nu:
        nxt: dict[tuple, int] = {}
        for (shape, prev), mult in states.items():
            for new_shape, added in _horizontal_strips(shape, part, prev):
                key = (new_shape, added)
                nxt[key] = nxt.get(key, 0) + mult
        states = nxt
    out: dict[Partition, int] = {}
    for (shape, _), mult in states.items():
        lam = Partition(shape)
        out[lam] = out.get(lam, 0) + mult
    return tuple(sorted(out.items(), reverse=True))


def _basis_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    # add strips for the factor with fewer rows
    if (len(nu), nu) > (len(mu), mu):
        mu, nu = nu, mu
    return _product_basis(mu, nu)


def lr_product(f: SchurSum, g: SchurSum) -> SchurSum:
    out: dict[Partition, int] = {}
    for mu, a in f.items():
        for nu, b in g.items():
            for lam, c in _basis_product(mu, nu):
                out[lam] = out.get(lam, 0) + a * b * c
    return SchurSum(out)


def _strips(mu: Partition, n: int, vertical: bool) -> SchurSum:
    mu = Partition(mu)
    base = mu.conjugate() if vertical else mu
    out = {}
    for shape, _ in _horizontal_strips(tuple(base), n, None):
        lam = Partition(shape)
        out[lam.conjugate() if vertical else lam] = 1
    return SchurSum(out)


def pieri_row(mu: Partition, n: int) -> SchurSum:
    """s_mu * s_(n) via horizontal strips."""
    return _strips(mu, n, vertical=False)


def pieri_col(mu: Partition, n: int) -> SchurSum:
    """s_mu * s_(1^n) via vertical strips."""
    return _strips(mu, n, vertical=True)


@lru_cache(maxsize=None)
def _skew_expansion(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    out: dict[Partition, int] = {}
    for grid in _fill_lr(outer, inner, None):
        counts: dict[int, int] = {}
        for v in grid.values():
            counts[v] = counts.get(v, 0) + 1
        nu = Partition(counts[i] for i in range(1, len(counts) + 1))
        out[nu] = out.get(nu, 0) + 1
    return tuple(out.items())


def skew_to_schur(shape: SkewShape) -> SchurSum:
    """Schur expansion of s_{outer/inner}: sum of c^outer_{inner, nu} s_nu."""
    return SchurSum(_skew_expansion(shape.outer, shape.inner))


def delta(mu: Partition, f: SchurSum) -> SchurSum:
    mu = Partition(mu)
    return SchurSum((union(lam, mu), c) for lam, c in f.items())


def tilde_delta(lam: Partition, mu: Partition, f1: SchurSum, f2: SchurSum) -> SchurSum:
    """Coefficientwise max of delta(lam, f1) and delta(mu, f2), absent terms read as 0."""
    a, b = delta(lam, f1), delta(mu, f2)
    keys = a.support() | b.support()
    return SchurSum({nu: max(a.coefficient(nu), b.coefficient(nu)) for nu in keys})


# --- semistandard tableau oracle -----------------------------------------------------


@lru_cache(maxsize=None)
def _ssyt_sum(outer: Partition, inner: Partition, n: int) -> LaurentPoly:
    if outer == inner:
        return ONE
    if n == 0:
        return ZERO
    # cells holding the largest entry n form a horizontal strip outer/mid
    total = ZERO
    for mid in _horizontal_strip_removals(outer, inner):
        k = outer.size - mid.size
        total = total + _ssyt_sum(mid, inner, n - 1).shift((n - 1) * k)
    return total


def _horizontal_strip_removals(outer: Partition, inner: Partition) -> Iterator[Partition]:
    """Partitions mid with inner <= mid <= outer and outer/mid a horizontal strip."""
    rows = len(outer)

    def rec(i: int, acc: list):
        if i == rows:
            yield Partition(acc)
            return
        lo = max(inner.part(i), outer.part(i + 1))
        hi = outer[i]
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def ssyt_weight_sum(shape: SkewShape | Partition, n: int) -> LaurentPoly:
    """Sum over SSYT with entries <= n of q^(sum of (entry - 1))."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(Partition(shape), EMPTY)
    return _ssyt_sum(shape.outer, shape.inner, n)


def iter_ssyt(shape: SkewShape, n: int) -> Iterator[Tableau]:
    """Plain cell-by-cell enumeration of SSYT with entries <= n (small shapes only)."""
    outer, inner = shape.outer, shape.inner
    cells = [(i, j) for i in range(len(outer)) for j in range(inner.part(i), outer[i])]
    grid: dict[tuple[int, int], int] = {}

    def rec(pos):
        if pos == len(cells):
            rows = tuple(tuple(grid[(i, j)] for j in range(inner.part(i), outer[i])) for i in range(len(outer)))
            yield Tableau(shape, rows)
            return
        i, j = cells[pos]
        lo = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for v in range(lo, n + 1):
            grid[(i, j)] = v
            yield from rec(pos + 1)
            del grid[(i, j)]

    yield from rec(0)
