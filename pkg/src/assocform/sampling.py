"""Seeded random inputs for the property and acceptance suites.

Every sampler takes an explicit ``random.Random`` so runs are reproducible
and independent draws can be sharded without shared state.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .apolarity import Functional
from .artinian import is_regular_sequence
from .geometry import is_smooth
from .git_stability import OneParamSubgroup
from .poly_core import S, GradedSubspace, HomogeneousForm, LinearChange, monomials, piece_dim


def rational(rng: random.Random, num: int = 9, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def nonzero_int(rng: random.Random, bound: int = 5) -> int:
    while True:
        c = rng.randint(-bound, bound)
        if c:
            return c


def random_form(
    rng: random.Random,
    n: int,
    m: int,
    ring: str = S,
    density: float = 1.0,
    bound: int = 5,
    rational_coeffs: bool = False,
) -> HomogeneousForm:
    """Nonzero form whose support is a random subset of the monomials of degree ``m``."""
    mons = monomials(n, m)
    while True:
        terms = {}
        for a in mons:
            if rng.random() < density:
                terms[a] = rational(rng) if rational_coeffs else rng.randint(-bound, bound)
        f = HomogeneousForm(ring, n, m, terms)
        if not f.is_zero():
            return f


def sparse_form(rng: random.Random, n: int, m: int, max_terms: int = 4, ring: str = S) -> HomogeneousForm:
    mons = monomials(n, m)
    k = rng.randint(1, min(max_terms, len(mons)))
    return HomogeneousForm(ring, n, m, {a: nonzero_int(rng) for a in rng.sample(mons, k)})


def random_regular_sequence(rng: random.Random, n: int, d: int, bound: int = 3) -> list[HomogeneousForm]:
    while True:
        gens = [random_form(rng, n, d, bound=bound) for _ in range(n)]
        if is_regular_sequence(gens).is_regular:
            return gens


def random_smooth_form(rng: random.Random, n: int, m: int, bound: int = 3) -> HomogeneousForm:
    while True:
        f = random_form(rng, n, m, bound=bound)
        if is_smooth(f):
            return f


def random_unimodular(rng: random.Random, n: int) -> LinearChange:
    """Determinant-one rational matrix: unit lower times unit upper, then a signed permutation."""
    lower = [[rational(rng, 3, 3) if j < i else Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    upper = [[rational(rng, 3, 3) if j > i else Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    g = LinearChange(linalg.matmul(lower, upper))
    perm = list(range(n))
    rng.shuffle(perm)
    p = LinearChange.permutation(perm)
    if p.determinant < 0:
        rows = [list(r) for r in p.matrix]
        rows[0] = [-x for x in rows[0]]
        p = LinearChange(rows)
    return g @ p


def random_invertible(rng: random.Random, n: int) -> LinearChange:
    while True:
        rows = [[rational(rng, 4, 3) for _ in range(n)] for _ in range(n)]
        if linalg.determinant(rows) != 0:
            return LinearChange(rows)


def random_subspace(rng: random.Random, ring: str, n: int, m: int, dim: int | None = None) -> GradedSubspace:
    size = piece_dim(n, m)
    k = rng.randint(0, size) if dim is None else dim
    vecs = [[rational(rng) if rng.random() < 0.6 else Fraction(0) for _ in range(size)] for _ in range(k)]
    return GradedSubspace.from_vectors(ring, n, m, vecs)


def random_functional(rng: random.Random, n: int, m: int) -> Functional:
    return Functional(n, m, tuple(rational(rng) for _ in range(piece_dim(n, m))))


def random_point(rng: random.Random, n: int, nonzero: bool = True) -> list[Fraction]:
    while True:
        a = [rational(rng, 5, 3) for _ in range(n)]
        if any(a) or not nonzero:
            return a


def random_lambda(rng: random.Random, n: int, bound: int = 3, allow_trivial: bool = True) -> OneParamSubgroup:
    while True:
        w = [rng.randint(-bound, bound) for _ in range(n - 1)]
        w.append(-sum(w))
        lam = OneParamSubgroup(w)
        if allow_trivial or not lam.trivial:
            return lam
