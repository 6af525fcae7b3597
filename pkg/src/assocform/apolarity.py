"""Polar pairing between S and its graded dual D.

In monomial coordinates the pairing ``S_m x D_m -> Q`` is diagonal:
``x^a o z^b = a!`` when ``a == b`` and 0 otherwise. Perps are therefore null
spaces of a basis matrix with columns rescaled by exact factorials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import linalg
from .errors import PreconditionError, StructuralError
from .poly_core import (
    D,
    S,
    GradedSubspace,
    HomogeneousForm,
    Scalar,
    exp_factorial,
    monomials,
    piece_dim,
)


def polar_apply(g: HomogeneousForm, F: HomogeneousForm) -> HomogeneousForm:
    """``g o F = g(d/dz1, ..., d/dzn) F`` for ``g`` in S and ``F`` in D.

    When ``deg g > deg F`` the result is the zero form of degree 0.
    """
    if g.ring != S or F.ring != D:
        raise StructuralError(f"polar pairing needs S o D, got {g.ring} o {F.ring}")
    if g.n != F.n:
        raise StructuralError(f"variable count mismatch: {g.n} vs {F.n}")
    m = F.degree - g.degree
    if m < 0:
        return HomogeneousForm.zero(D, F.n, 0)
    out: dict[tuple[int, ...], Fraction] = {}
    for a, c in g.terms.items():
        for b, e in F.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                k = tuple(y - x for x, y in zip(a, b))
                mult = 1
                for x, y in zip(a, b):
                    for t in range(y - x + 1, y + 1):
                        mult *= t
                out[k] = out.get(k, 0) + c * e * mult
    return HomogeneousForm(D, F.n, m, out)


def pairing(f: HomogeneousForm, F: HomogeneousForm) -> Fraction:
    """Scalar pairing of equal-degree ``f`` in S and ``F`` in D."""
    if f.degree != F.degree:
        raise StructuralError("pairing needs equal degrees")
    return polar_apply(f, F).coefficient((0,) * f.n)


def _perp_rows(W: GradedSubspace) -> list[list[Fraction]]:
    facts = [exp_factorial(a) for a in monomials(W.n, W.degree)]
    return [[x * f for x, f in zip(row, facts)] for row in W.basis]


def perp(W: GradedSubspace) -> GradedSubspace:
    """``W^perp`` inside ``S_m`` for ``W`` a subspace of ``D_m``."""
    if W.ring != D:
        raise StructuralError("perp expects a subspace of D; use perp_dual for S")
    null = linalg.nullspace(_perp_rows(W), W.ambient_dim)
    return GradedSubspace.from_vectors(S, W.n, W.degree, null)


def perp_dual(U: GradedSubspace) -> GradedSubspace:
    """``U^perp`` inside ``D_m`` for ``U`` a subspace of ``S_m``."""
    if U.ring != S:
        raise StructuralError("perp_dual expects a subspace of S; use perp for D")
    null = linalg.nullspace(_perp_rows(U), U.ambient_dim)
    return GradedSubspace.from_vectors(D, U.n, U.degree, null)


@dataclass(frozen=True)
class Functional:
    """A linear functional on ``S_m`` given by its values on the monomial basis."""

    n: int
    m: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != piece_dim(self.n, self.m):
            raise StructuralError(f"functional on S_{self.m} needs {piece_dim(self.n, self.m)} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    def __call__(self, f: HomogeneousForm) -> Fraction:
        if f.ring != S or f.n != self.n or f.degree != self.m:
            raise StructuralError("functional applied outside its graded piece")
        return sum((v * c for v, c in zip(self.values, f.vector())), Fraction(0))

    @classmethod
    def dual_basis(cls, n: int, alpha: Sequence[int]) -> Functional:
        """Coordinate functional picking out the coefficient of ``x^alpha``."""
        alpha = tuple(alpha)
        mons = monomials(n, sum(alpha))
        return cls(n, sum(alpha), tuple(int(a == alpha) for a in mons))

    @classmethod
    def of_form(cls, g: HomogeneousForm) -> Functional:
        """The functional ``f -> f o g``; it pairs to 1 with ``g`` in the dual sense."""
        if g.ring != D:
            raise StructuralError("functional_of needs a form in D")
        vals = tuple(c * exp_factorial(a) for a, c in zip(monomials(g.n, g.degree), g.vector()))
        return cls(g.n, g.degree, vals)

    def kernel(self) -> GradedSubspace:
        return GradedSubspace.from_vectors(S, self.n, self.m, linalg.nullspace([list(self.values)], len(self.values)))

    def to_json(self) -> str:
        return json.dumps([str(v) for v in self.values])

    @classmethod
    def from_json(cls, n: int, m: int, text: str) -> Functional:
        try:
            raw = json.loads(text)
            return cls(n, m, tuple(Fraction(v) for v in raw))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise StructuralError(f"bad functional JSON: {exc}") from exc


def inverse_system_from_functional(omega: Functional) -> HomogeneousForm:
    """The element of ``D_m`` with ``f o F = omega(f)`` for all ``f`` in ``S_m``."""
    mons = monomials(omega.n, omega.m)
    return HomogeneousForm(D, omega.n, omega.m, {a: v / exp_factorial(a) for a, v in zip(mons, omega.values)})


def evaluate(F: HomogeneousForm, a: Sequence[Scalar]) -> Fraction:
    return F.evaluate(a)


def linear_power(a: Sequence[Scalar], m: int) -> HomogeneousForm:
    """``(a1 x1 + ... + an xn)^m`` in S."""
    return HomogeneousForm.linear(S, list(a)) ** m


def vanishing_criterion(W: GradedSubspace, a: Sequence[Scalar]) -> bool:
    """Whether every form in ``W`` (a subspace of ``D_m``) vanishes at ``a``.

    Decided by membership of ``(sum a_i x_i)^m`` in ``W^perp`` and cross-checked
    against direct evaluation of a basis.
    """
    if W.ring != D:
        raise StructuralError("vanishing_criterion expects a subspace of D")
    if len(a) != W.n:
        raise StructuralError(f"point has {len(a)} coordinates, expected {W.n}")
    if not any(a):
        raise PreconditionError("the zero point is not a point of projective space")
    via_perp = perp(W).contains(linear_power(a, W.degree))
    direct = all(F.evaluate(a) == 0 for F in W.forms())
    if via_perp != direct:
        raise AssertionError("vanishing test disagrees with direct evaluation")
    return via_perp


def factorial_power_identity(omega: Functional, a: Sequence[Scalar]) -> Fraction:
    """Right-hand side ``omega((a . x)^m / m!)`` of the evaluation identity."""
    return omega(linear_power(a, omega.m)) / factorial(omega.m)
