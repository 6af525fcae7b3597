"""Exact feasibility LP over the rationals (phase-one simplex, Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def nonnegative_solution(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Some ``x >= 0`` with ``A x = b``, or ``None`` if there is none."""
    m = len(A)
    k = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        sgn = -1 if b[i] < 0 else 1
        rows.append([Fraction(sgn * a) for a in A[i]] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(sgn * b[i])])
    ncols = k + m
    basis = [k + i for i in range(m)]
    # reduced costs of "minimize sum of artificials"
    cost = [Fraction(0)] * (ncols + 1)
    for r in rows:
        for j in range(k):
            cost[j] -= r[j]
        cost[ncols] -= r[ncols]
    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[ncols] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction cannot occur in phase one; objective is bounded below by 0
            raise AssertionError("phase-one LP reported unbounded")
        piv = rows[leave][enter]
        prow = [x / piv for x in rows[leave]]
        rows[leave] = prow
        for i, r in enumerate(rows):
            if i != leave and r[enter]:
                a = r[enter]
                rows[i] = [x - a * y for x, y in zip(r, prow)]
        a = cost[enter]
        cost = [x - a * y for x, y in zip(cost, prow)]
        basis[leave] = enter
    if cost[ncols] != 0:
        return None
    x = [Fraction(0)] * k
    for i, j in enumerate(basis):
        if j < k:
            x[j] = rows[i][ncols]
    return x


def convex_combination(points: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """Weights ``mu >= 0``, ``sum mu = 1``, with ``sum mu_j p_j = target``; ``None`` if outside the hull."""
    if not points:
        return None
    dim = len(target)
    A = [[Fraction(p[i]) for p in points] for i in range(dim)]
    A.append([Fraction(1)] * len(points))
    b = [Fraction(t) for t in target] + [Fraction(1)]
    return nonnegative_solution(A, b)
