"""Exact Laurent polynomials in q with unbounded integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "NonExactDivision",
    "q",
    "ZERO",
    "ONE",
    "exact_div",
    "substitute_q_inverse",
    "is_nonnegative",
    "coefficient",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_pochhammer",
]


class NonExactDivision(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class LaurentPoly:
    """Sparse map exponent -> nonzero int.  Immutable; hashable."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            v = int(v)
            if v:
                c[int(e)] = c.get(int(e), 0) + v
        self._c = {e: v for e, v in sorted(c.items()) if v}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        """Dense coefficient list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, exponents ascending."""
        return list(self._c.items())

    def coefficient(self, r: int) -> int:
        return self._c.get(r, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def min_degree(self) -> int | None:
        return next(iter(self._c), None)

    @property
    def max_degree(self) -> int | None:
        return next(reversed(self._c), None) if self._c else None

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def at_one(self) -> int:
        return sum(self._c.values())

    def evaluate(self, x):
        """Evaluate at a number; ``Fraction`` keeps negative exponents exact."""
        if isinstance(x, int):
            x = Fraction(x)
        return sum(v * x**e for e, v in self._c.items())

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return _raw({e + k: v for e, v in self._c.items()})

    def substitute_q_inverse(self) -> LaurentPoly:
        return _raw({-e: v for e, v in reversed(self._c.items())})

    def derivative(self) -> LaurentPoly:
        return LaurentPoly({e - 1: e * v for e, v in self._c.items() if e})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return _raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __floordiv__(self, other: LaurentPoly) -> LaurentPoly:
        return exact_div(self, other)

    def render(self) -> str:
        """``-2*q^-2 + 1 + 3*q^3``: exponents ascending, explicit coefficients."""
        if not self._c:
            return "0"
        pieces = []
        for idx, (e, v) in enumerate(self._c.items()):
            mag = abs(v)
            body = str(mag) if e == 0 else f"{mag}*q^{e}"
            if idx == 0:
                pieces.append(body if v > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if v > 0 else '-'} {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()})"


def _raw(c: dict[int, int]) -> LaurentPoly:
    # c is already free of zeros; only the ordering needs fixing
    p = LaurentPoly.__new__(LaurentPoly)
    p._c = dict(sorted(c.items()))
    p._hash = None
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
q = LaurentPoly.monomial(1)


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient of an exact division; raises NonExactDivision on any remainder."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return ZERO
    d_terms = den.terms()
    d_lead_e, d_lead = d_terms[-1]
    d_low = d_terms[0][0]
    rem = dict(num.terms())
    quot: dict[int, int] = {}
    num_low = num.min_degree
    # Long division from the top; a Laurent quotient must stop at num_low - d_low.
    while rem:
        top = max(rem)
        if top - d_lead_e < num_low - d_low:
            raise NonExactDivision(f"{num.render()} is not divisible by {den.render()}")
        qv, r = divmod(rem[top], d_lead)
        if r:
            raise NonExactDivision(f"{num.render()} is not divisible by {den.render()}")
        shift = top - d_lead_e
        quot[shift] = qv
        for e, v in d_terms:
            key = e + shift
            nv = rem.get(key, 0) - qv * v
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
    return LaurentPoly(quot)


def substitute_q_inverse(p: LaurentPoly) -> LaurentPoly:
    return p.substitute_q_inverse()


def is_nonnegative(p: LaurentPoly) -> bool:
    return p.is_nonnegative()


def coefficient(p: LaurentPoly, r: int) -> int:
    return p.coefficient(r)


@lru_cache(maxsize=None)
def q_int(k: int) -> LaurentPoly:
    """[k] = 1 + q + ... + q^(k-1); [0] = 0."""
    if k < 0:
        raise ValueError("q_int is defined here for k >= 0")
    return LaurentPoly({i: 1 for i in range(k)})


@lru_cache(maxsize=None)
def q_factorial(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("q_factorial needs k >= 0")
    out = ONE
    for i in range(2, k + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, j: int) -> LaurentPoly:
    if n < 0 or j < 0:
        raise ValueError("q_binomial needs n, j >= 0")
    if j > n:
        return ZERO
    return exact_div(q_factorial(n), q_factorial(j) * q_factorial(n - j))


def q_pochhammer(a: LaurentPoly, r: int) -> LaurentPoly:
    """(a; q)_r = (1 - a)(1 - a q) ... (1 - a q^(r-1))."""
    out = ONE
    for i in range(r):
        out = out * (ONE - a.shift(i))
    return out
