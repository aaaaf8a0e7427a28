"""Slow, library-independent reference computations used to freeze test values.

Nothing here imports schurpos: Schur polynomials come from raw tableau
enumeration, LR coefficients from the bialternant a_{mu+delta} s_nu, and
Narayana numbers from walking every up/down word.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb


def ssyt_fillings(lam, n):
    """Yield every SSYT of straight shape lam with entries in 1..n as a list of rows."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    grid = {}

    def rec(pos):
        if pos == len(cells):
            yield [[grid[(i, j)] for j in range(row)] for i, row in enumerate(lam)]
            return
        i, j = cells[pos]
        lo = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for v in range(lo, n + 1):
            grid[(i, j)] = v
            yield from rec(pos + 1)
        grid.pop((i, j), None)

    yield from rec(0)


def schur_monomials(lam, n) -> Counter:
    out = Counter()
    for t in ssyt_fillings(lam, n):
        exps = [0] * n
        for row in t:
            for v in row:
                exps[v - 1] += 1
        out[tuple(exps)] += 1
    return out


def ps_coefficients(lam, n) -> dict[int, int]:
    """s_lam(1, q, ..., q^(n-1)) as {exponent: coefficient}."""
    out = Counter()
    for t in ssyt_fillings(lam, n):
        out[sum(v - 1 for row in t for v in row)] += 1
    return dict(out)


def lr_bialternant(mu, nu) -> dict[tuple, int]:
    """c^lam_{mu nu} for all lam, read off a_{mu+delta} * s_nu in l(mu)+l(nu) variables."""
    n = max(len(mu) + len(nu), 1)
    delta = list(range(n - 1, -1, -1))
    shifted = [(mu[i] if i < len(mu) else 0) + delta[i] for i in range(n)]
    snu = schur_monomials(nu, n)
    out = Counter()
    for perm in itertools.permutations(range(n)):
        sign = 1
        for a, b in itertools.combinations(range(n), 2):
            if perm[a] > perm[b]:
                sign = -sign
        alt = [0] * n
        for i, p in enumerate(perm):
            alt[p] = shifted[i]
        for exps, c in snu.items():
            tot = tuple(alt[i] + exps[i] for i in range(n))
            if all(tot[i] > tot[i + 1] for i in range(n - 1)):
                lam = tuple(v for v in (tot[i] - delta[i] for i in range(n)) if v)
                out[lam] += sign * c
    return {k: v for k, v in out.items() if v}


def dyck_peaks(n) -> Counter:
    """Peak counts over all Dyck words of semilength n, by walking every +-1 word."""
    out = Counter()
    for w in itertools.product((1, -1), repeat=2 * n):
        h, ok = 0, True
        for step in w:
            h += step
            if h < 0:
                ok = False
                break
        if ok and h == 0:
            out[sum(1 for a, b in zip(w, w[1:]) if a == 1 and b == -1)] += 1
    return out


def binom_narayana(n, k) -> int:
    return comb(n, k) * comb(n, k + 1) // n if n else int(k == 0)
