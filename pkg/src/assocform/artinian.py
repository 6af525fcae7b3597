"""Graded ideals, Hilbert functions and Macaulay inverse systems.

An ideal is always given by a finite list of homogeneous generators in S;
its degree-t piece is the span of all monomial multiples landing in degree t.
Inverse systems and associated forms are returned in a canonical projective
normalization (primitive integer coefficients, positive grevlex-leading
coefficient) so that projective equality is plain ``==``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from . import linalg
from .apolarity import perp, perp_dual, polar_apply
from .errors import (
    DegenerateFormError,
    NonRegularSequenceError,
    NotGorensteinError,
    NotInWndError,
    PreconditionError,
    StructuralError,
)
from .poly_core import (
    D,
    S,
    GradedSubspace,
    HomogeneousForm,
    format_form,
    monomial_index,
    monomials,
    piece_dim,
    span,
)


@dataclass(frozen=True)
class IdealSlice:
    generators: tuple[HomogeneousForm, ...]
    t: int
    piece: GradedSubspace
    quotient_dim: int


@dataclass(frozen=True)
class CompleteIntersectionCheck:
    generators: tuple[HomogeneousForm, ...]
    socle_degree: int
    is_regular: bool
    socle_dim: int
    overflow_dim: int


def _resolve_n(gens: Sequence[HomogeneousForm], n: int | None) -> int:
    if gens:
        n0 = gens[0].n
        if n is not None and n != n0:
            raise StructuralError(f"generators have n={n0}, expected {n}")
        for g in gens:
            if g.ring != S:
                raise StructuralError("ideal generators must lie in S")
            if g.n != n0:
                raise StructuralError("generators have different variable counts")
        return n0
    if n is None:
        raise StructuralError("an empty generator list needs an explicit n")
    return n


def _multiples(g: HomogeneousForm, t: int) -> list[list[Fraction]]:
    """Coordinate vectors of ``mu * g`` for every monomial ``mu`` of degree ``t - deg g``."""
    n = g.n
    idx = monomial_index(n, t)
    size = len(idx)
    terms = list(g.terms.items())
    rows = []
    for mu in monomials(n, t - g.degree):
        v = [Fraction(0)] * size
        for a, c in terms:
            v[idx[tuple(x + y for x, y in zip(a, mu))]] = c
        rows.append(v)
    return rows


def ideal_piece(gens: Sequence[HomogeneousForm], t: int, n: int | None = None) -> IdealSlice:
    """Degree-``t`` piece of the ideal generated by ``gens``."""
    gens = tuple(gens)
    n = _resolve_n(gens, n)
    rows: list[list[Fraction]] = []
    for g in gens:
        if g.degree <= t and not g.is_zero():
            rows.extend(_multiples(g, t))
    piece = GradedSubspace.from_vectors(S, n, t, rows)
    return IdealSlice(gens, t, piece, piece_dim(n, t) - piece.dim)


def quotient_dim(gens: Sequence[HomogeneousForm], t: int, n: int | None = None, expected: int | None = None) -> int:
    """``dim (S/I)_t``; tries a rank computation mod a prime before exact elimination.

    The modular rank bounds the rational rank from below, so it settles the
    value when it reaches ``dim S_t``, or ``dim S_t - expected`` when the
    caller already knows the quotient is at most ``expected``.
    """
    gens = tuple(gens)
    n = _resolve_n(gens, n)
    size = piece_dim(n, t)
    rows: list[list[Fraction]] = []
    for g in gens:
        if g.degree <= t and not g.is_zero():
            rows.extend(_multiples(g, t))
    rk = linalg.rank_mod_p(rows, size)
    if rk == size or (expected is not None and rk == size - expected):
        return size - rk
    return size - linalg.rank(rows, size)


def hilbert_function(gens: Sequence[HomogeneousForm], t_max: int, n: int | None = None) -> list[int]:
    """``[dim (S/I)_t for t in 0..t_max]``."""
    return [ideal_piece(gens, t, n).quotient_dim for t in range(t_max + 1)]


class GradedIdeal:
    """Ideal given by generators, memoizing its graded pieces on the instance."""

    def __init__(self, gens: Sequence[HomogeneousForm], n: int | None = None):
        self.generators = tuple(gens)
        self.n = _resolve_n(self.generators, n)
        self._pieces: dict[int, IdealSlice] = {}

    def piece(self, t: int) -> IdealSlice:
        if t not in self._pieces:
            self._pieces[t] = ideal_piece(self.generators, t, self.n)
        return self._pieces[t]

    def hilbert_function(self, t_max: int) -> list[int]:
        return [self.piece(t).quotient_dim for t in range(t_max + 1)]

    def inverse_system(self, nu: int) -> HomogeneousForm:
        sl = self.piece(nu)
        if sl.quotient_dim != 1:
            raise NotGorensteinError(f"not a Gorenstein certificate: socle dimension {sl.quotient_dim} at degree {nu}")
        (F,) = perp_dual(sl.piece).forms()
        return normalize(F)


def _check_balanced(gens: Sequence[HomogeneousForm]) -> tuple[int, int]:
    if not gens:
        raise StructuralError("need n forms, got none")
    n = _resolve_n(gens, None)
    if len(gens) != n:
        raise StructuralError(f"need exactly n={n} forms, got {len(gens)}")
    d = gens[0].degree
    if any(g.degree != d for g in gens):
        raise StructuralError("all forms must have the same degree")
    if d < 1:
        raise StructuralError("forms must have positive degree")
    return n, d


def is_regular_sequence(gens: Sequence[HomogeneousForm]) -> CompleteIntersectionCheck:
    """Regular-sequence test for ``n`` forms of equal degree ``d`` in ``n`` variables.

    The forms are regular exactly when the quotient vanishes one degree past
    the socle degree ``n(d-1)``.
    """
    gens = tuple(gens)
    n, d = _check_balanced(gens)
    nu = n * (d - 1)
    overflow = quotient_dim(gens, nu + 1)
    regular = overflow == 0
    # a complete intersection has a one-dimensional socle, so only the lower bound needs checking
    socle = quotient_dim(gens, nu, expected=1 if regular else None)
    if regular and socle != 1:
        raise AssertionError(f"complete intersection with socle dimension {socle}")
    return CompleteIntersectionCheck(gens, nu, regular, socle, overflow)


def normalize(F: HomogeneousForm) -> HomogeneousForm:
    """Primitive integer representative with positive grevlex-leading coefficient."""
    if F.is_zero():
        return F
    den = 1
    for c in F.terms.values():
        den = lcm(den, c.denominator)
    ints = {a: int(c * den) for a, c in F.terms.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = F.sorted_terms()[0][0]
    if ints[lead] < 0:
        g = -g
    return HomogeneousForm(F.ring, F.n, F.degree, {a: Fraction(v, g) for a, v in ints.items()})


def projectively_equal(F: HomogeneousForm, G: HomogeneousForm) -> bool:
    if F.is_zero() or G.is_zero():
        return F == G
    return normalize(F) == normalize(G)


def macaulay_inverse_system(gens: Sequence[HomogeneousForm], nu: int, n: int | None = None) -> HomogeneousForm:
    """Normalized generator of ``(I_nu)^perp`` in ``D_nu``.

    The only Gorenstein certificate checked is ``dim (S/I)_nu == 1``.
    """
    return GradedIdeal(gens, n).inverse_system(nu)


def associated_form_sequence(gens: Sequence[HomogeneousForm]) -> HomogeneousForm:
    """Associated form of a balanced complete intersection ``g1..gn``."""
    check = is_regular_sequence(gens)
    if not check.is_regular:
        raise NonRegularSequenceError()
    return macaulay_inverse_system(check.generators, check.socle_degree)


def associated_form(f: HomogeneousForm) -> HomogeneousForm:
    """Associated form ``A(f)`` of a nondegenerate ``f`` in ``S_{d+1}``."""
    if f.ring != S:
        raise StructuralError("associated_form expects a form in S")
    if f.degree < 2:
        raise StructuralError("associated_form needs degree at least 2")
    try:
        return associated_form_sequence(f.gradient())
    except NonRegularSequenceError:
        raise DegenerateFormError() from None


def associated_form_json(f_or_gens: HomogeneousForm | Sequence[HomogeneousForm]) -> dict:
    if isinstance(f_or_gens, HomogeneousForm):
        F = associated_form(f_or_gens)
    else:
        F = associated_form_sequence(f_or_gens)
    return {
        "schema": "assocform/1",
        "associated_form": format_form(F),
        "normalized": True,
        "socle_degree": F.degree,
    }


def gradient_point(F: HomogeneousForm, p: int) -> GradedSubspace:
    """Span of all order-``p`` partial derivatives of ``F``."""
    if not 0 <= p <= F.degree:
        raise PreconditionError(f"order {p} outside 0..{F.degree}")
    ring = F.ring
    Fd = F.with_ring(D)
    outs = [polar_apply(HomogeneousForm.monomial(S, a), Fd).with_ring(ring) for a in monomials(F.n, p)]
    return span(outs, ring, F.n, F.degree - p)


def hilbert_point(gens: Sequence[HomogeneousForm], t: int, n: int | None = None) -> GradedSubspace:
    """Kernel ``I_t`` of the projection ``S_t -> (S/I)_t``."""
    return ideal_piece(gens, t, n).piece


def apolar_ideal_generators(F: HomogeneousForm) -> list[HomogeneousForm]:
    """Generators of ``F^perp``: bases of ``(F^perp)_t`` for ``t = 1..deg F + 1``."""
    if F.ring != D:
        raise StructuralError("apolar ideal of a form in D")
    nu = F.degree
    gens: list[HomogeneousForm] = []
    for t in range(1, nu + 1):
        gens.extend(perp(gradient_point(F, nu - t)).forms())
    gens.extend(GradedSubspace.full(S, F.n, nu + 1).forms())
    return gens


def _check_grass_point(U: GradedSubspace) -> tuple[int, int]:
    if U.ring != S:
        raise StructuralError("expected a subspace of S")
    if U.dim != U.n:
        raise PreconditionError(f"expected an {U.n}-dimensional subspace, got dimension {U.dim}")
    return U.n, U.degree


def wnd_quotient_dim(U: GradedSubspace) -> int:
    """``dim (S/I_U)_{n(d-1)-1}``."""
    n, d = _check_grass_point(U)
    return ideal_piece(U.forms(), n * (d - 1) - 1, n).quotient_dim


def in_w_nd(U: GradedSubspace) -> bool:
    return wnd_quotient_dim(U) == U.n


def a_gr(U: GradedSubspace) -> GradedSubspace:
    """``(I_U)_{n(d-1)-1}^perp`` inside ``D_{n(d-1)-1}``, defined on ``W_{n,d}``."""
    n, d = _check_grass_point(U)
    t = n * (d - 1) - 1
    sl = ideal_piece(U.forms(), t, n)
    if sl.quotient_dim != n:
        raise NotInWndError(sl.quotient_dim, n, t)
    return perp_dual(sl.piece)


def spans_regular_sequence(W: GradedSubspace) -> bool:
    """Whether a basis of the ``n``-dimensional ``W`` is a regular sequence (read in S)."""
    if W.dim != W.n or W.degree < 1:
        return False
    return is_regular_sequence([F.with_ring(S) for F in W.forms()]).is_regular


def subspace_json(W: GradedSubspace) -> dict:
    return {
        "schema": "assocform/1",
        "ring": W.ring,
        "n": W.n,
        "degree": W.degree,
        "dim": W.dim,
        "basis": [format_form(F) for F in W.forms()],
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True)
