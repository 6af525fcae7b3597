"""Exact linear algebra over the rationals.

Row reduction is fraction-free (Bareiss) on integer rows obtained by clearing
denominators, followed by a single pass that normalizes to reduced row echelon
form with unit pivots. Matrices are plain lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Row = Sequence[Fraction]


def _integer_row(row: Row) -> list[int]:
    den = 1
    for a in row:
        if a:
            den = lcm(den, Fraction(a).denominator)
    return [int(Fraction(a) * den) for a in row]


def bareiss_echelon(rows: Sequence[Row], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero integer echelon rows and their pivot columns. Every
    division performed is exact.
    """
    m = [_integer_row(r) for r in rows if any(r)]
    pivots: list[int] = []
    prev = 1
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        pr = m[r]
        for i in range(r + 1, nrows):
            ri = m[i]
            a = ri[c]
            if a == 0:
                if piv != prev:
                    m[i] = [(piv * x) // prev for x in ri]
                continue
            m[i] = [(piv * ri[j] - a * pr[j]) // prev for j in range(ncols)]
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(rows: Sequence[Row], ncols: int) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form with leading entries 1.

    The result is canonical for the row space: equal spans give identical output.
    """
    ech, pivots = bareiss_echelon(rows, ncols)
    out = [[Fraction(x, row[p]) for x in row] for row, p in zip(ech, pivots)]
    for k in range(len(out) - 1, -1, -1):
        pk = pivots[k]
        rk = out[k]
        for i in range(k):
            a = out[i][pk]
            if a:
                ri = out[i]
                out[i] = [x - a * y for x, y in zip(ri, rk)]
    return tuple(tuple(r) for r in out), tuple(pivots)


def rank(rows: Sequence[Row], ncols: int) -> int:
    return len(bareiss_echelon(rows, ncols)[1])


MODULAR_PRIME = (1 << 61) - 1


def rank_mod_p(rows: Sequence[Row], ncols: int, p: int = MODULAR_PRIME) -> int | None:
    """Rank of the reduction mod ``p``, or ``None`` if some denominator vanishes mod ``p``.

    It never exceeds the rank over Q, so a full-rank answer is exact.
    """
    mat = []
    for row in rows:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                return None
            r.append(x.numerator * pow(x.denominator, -1, p) % p)
        mat.append(r)
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        inv = pow(mat[rk][col], -1, p)
        top = [v * inv % p for v in mat[rk]]
        mat[rk] = top
        for i in range(rk + 1, len(mat)):
            c = mat[i][col]
            if c:
                mat[i] = [(a - c * b) % p for a, b in zip(mat[i], top)]
        rk += 1
        if rk == len(mat):
            break
    return rk


def nullspace(rows: Sequence[Row], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def determinant(matrix: Sequence[Row]) -> Fraction:
    """Exact determinant of a square matrix via Bareiss elimination."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    den = 1
    for r in matrix:
        for a in r:
            den = lcm(den, Fraction(a).denominator)
    m = [[int(Fraction(a) * den) for a in r] for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], den**n)


def inverse(matrix: Sequence[Row]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(matrix)]
    red, pivots = rref(aug, 2 * n)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return [list(r[n:]) for r in red]


def matmul(a: Sequence[Row], b: Sequence[Row]) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in bt] for r in a]


def transpose(a: Sequence[Row]) -> list[list[Fraction]]:
    return [list(c) for c in zip(*a)]
