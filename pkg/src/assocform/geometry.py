"""Pointwise singularity analysis and the explicit example forms.

Multiplicity convention: 0 for a point off the hypersurface, 1 for a smooth
point of it, and ``l + 1`` when all partials of order ``<= l`` vanish but some
partial of order ``l + 1`` does not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .apolarity import polar_apply
from .artinian import (
    GradedIdeal,
    hilbert_function,
    is_regular_sequence,
    projectively_equal,
)
from .errors import PreconditionError, StructuralError
from .poly_core import (
    D,
    S,
    GradedSubspace,
    HomogeneousForm,
    Scalar,
    monomials,
)


@dataclass(frozen=True)
class ProjectivePoint:
    """Rational point of P^{n-1}, scaled so the first nonzero coordinate is 1."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Sequence[Scalar]):
        c = [Fraction(x) for x in coords]
        lead = next((x for x in c if x), None)
        if lead is None:
            raise PreconditionError("all coordinates are zero")
        object.__setattr__(self, "coords", tuple(x / lead for x in c))

    @property
    def n(self) -> int:
        return len(self.coords)

    def dual_linear_form(self, ring: str = S) -> HomogeneousForm:
        """``a1 x1 + ... + an xn`` (or the z-version)."""
        return HomogeneousForm.linear(ring, self.coords)

    @classmethod
    def coordinate(cls, n: int, i: int) -> ProjectivePoint:
        return cls([int(j == i) for j in range(n)])

    @classmethod
    def parse(cls, text: str) -> ProjectivePoint:
        try:
            return cls([Fraction(x) for x in text.split(",")])
        except (ValueError, ZeroDivisionError) as exc:
            raise StructuralError(f"bad point {text!r}") from exc

    def to_json(self) -> list[str]:
        return [str(x) for x in self.coords]

    @classmethod
    def from_json(cls, text: str) -> ProjectivePoint:
        try:
            return cls([Fraction(x) for x in json.loads(text)])
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise StructuralError(f"bad point JSON: {exc}") from exc


def _coords(p: ProjectivePoint | Sequence[Scalar]) -> tuple[Fraction, ...]:
    return p.coords if isinstance(p, ProjectivePoint) else tuple(Fraction(x) for x in p)


def partials_of_order(f: HomogeneousForm, k: int) -> list[HomogeneousForm]:
    Fd = f.with_ring(D)
    return [polar_apply(HomogeneousForm.monomial(S, a), Fd).with_ring(f.ring) for a in monomials(f.n, k)]


def multiplicity_at(f: HomogeneousForm, p: ProjectivePoint | Sequence[Scalar]) -> int:
    if f.is_zero():
        raise PreconditionError("multiplicity of the zero form")
    a = _coords(p)
    if len(a) != f.n:
        raise StructuralError(f"point has {len(a)} coordinates, expected {f.n}")
    for mu in range(f.degree + 1):
        if any(g.evaluate(a) for g in partials_of_order(f, mu)):
            return mu
    raise AssertionError("a nonzero form has a nonvanishing top-order partial")


def hessian_at(f: HomogeneousForm, p: ProjectivePoint | Sequence[Scalar]) -> list[list[Fraction]]:
    a = _coords(p)
    firsts = f.gradient()
    return [[firsts[i].partial(j).evaluate(a) for j in range(f.n)] for i in range(f.n)]


def is_ordinary_double_point(f: HomogeneousForm, p: ProjectivePoint | Sequence[Scalar]) -> bool:
    if multiplicity_at(f, p) != 2:
        return False
    return linalg.rank(hessian_at(f, p), f.n) == f.n - 1


@dataclass(frozen=True)
class VeroneseCheck:
    power_in_ideal: bool
    lower_power_in_ideal: bool

    @property
    def exact_multiplicity(self) -> bool:
        """Pattern ``(True, False)``: multiplicity exactly ``l + 1`` at the point."""
        return self.power_in_ideal and not self.lower_power_in_ideal


def veronese_multiplicity_check(
    gens: Sequence[HomogeneousForm] | GradedIdeal,
    nu: int,
    p: ProjectivePoint | Sequence[Scalar],
    ell: int,
    cross_check: bool = False,
) -> VeroneseCheck:
    """Test ``L^{nu-l} in I_{nu-l}`` and ``L^{nu-l-1} in I_{nu-l-1}`` for ``L`` dual to ``p``.

    With ``cross_check`` the inverse system is computed and its multiplicity at
    ``p`` compared against the membership pattern.
    """
    if not 0 <= ell <= nu - 1:
        raise PreconditionError(f"order {ell} outside 0..{nu - 1}")
    a = _coords(p)
    ideal = gens if isinstance(gens, GradedIdeal) else GradedIdeal(gens, len(a))
    if ideal.piece(nu).quotient_dim != 1:
        raise PreconditionError(f"socle dimension at degree {nu} is not 1")
    L = HomogeneousForm.linear(S, a)
    hi = ideal.piece(nu - ell).piece.contains(L ** (nu - ell))
    lo = ideal.piece(nu - ell - 1).piece.contains(L ** (nu - ell - 1))
    result = VeroneseCheck(hi, lo)
    if cross_check:
        F = ideal.inverse_system(nu)
        mult = multiplicity_at(F, a)
        if hi != (mult >= ell + 1) or lo != (mult >= ell + 2):
            raise AssertionError(f"membership pattern {(hi, lo)} contradicts multiplicity {mult}")
    return result


def general_linear_position(points: Sequence[ProjectivePoint]) -> bool:
    if not points:
        raise StructuralError("empty point list")
    if len(set(points)) != len(points):
        raise StructuralError("duplicate points")
    n = points[0].n
    if any(p.n != n for p in points):
        raise StructuralError("points of different dimensions")
    k = len(points)
    if k > n:
        return False
    return linalg.rank([list(p.coords) for p in points], n) == k


# --- binary forms ------------------------------------------------------------


def _univariate(f: HomogeneousForm) -> list[Fraction]:
    """Coefficients (low to high in x1) of ``f(x1, 1)``."""
    out = [Fraction(0)] * (f.degree + 1)
    for a, c in f.terms.items():
        out[a[0]] += c
    return out


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, x in enumerate(b):
            a[shift + i] -= c * x
        a.pop()
        _trim(a)
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    if not a:
        return a
    return [x / a[-1] for x in a]


def binary_gcd(f: HomogeneousForm, g: HomogeneousForm) -> HomogeneousForm:
    """Monic-normalized gcd of two nonzero binary forms (leading x1 coefficient 1 when present)."""
    if f.n != 2 or g.n != 2:
        raise StructuralError("binary_gcd needs binary forms")
    if f.is_zero() or g.is_zero():
        raise PreconditionError("gcd with the zero form")
    # the power of x2 dividing both is read off the lowest x2-exponents; the rest is dehomogenized at x2 = 1
    e = min(min(a[1] for a in f.terms), min(a[1] for a in g.terms))
    u = _poly_gcd(_univariate(f), _univariate(g))
    deg_u = len(u) - 1
    terms = {(i, deg_u - i + e): c for i, c in enumerate(u) if c}
    return HomogeneousForm(f.ring, 2, deg_u + e, terms)


# --- Z_k membership -----------------------------------------------------------


@dataclass(frozen=True)
class ZkCertificate:
    ok: bool
    status: str  # "EXACT" or "HEURISTIC"
    checks: tuple[tuple[str, bool], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "ok": self.ok,
            "checks": [{"name": name, "passed": passed} for name, passed in self.checks],
        }


def _point_form(p: ProjectivePoint) -> HomogeneousForm:
    """Binary linear form vanishing at ``p = (a, b)``: ``b x1 - a x2``."""
    a, b = p.coords
    return HomogeneousForm.linear(S, [b, -a])


def verify_zk_membership(U: GradedSubspace, points: Sequence[ProjectivePoint]) -> ZkCertificate:
    """Check that the base locus of ``U`` is exactly ``points``, reduced and in general position.

    For ``n = 2`` the check is complete (gcd of a basis); for ``n >= 3`` the
    scheme-theoretic part is replaced by Hilbert-function values and the
    certificate is marked HEURISTIC.
    """
    if U.ring != S:
        raise StructuralError("expected a subspace of S")
    n, d = U.n, U.degree
    if U.dim != n:
        raise PreconditionError(f"expected an {n}-dimensional subspace, got dimension {U.dim}")
    if not points:
        raise StructuralError("empty point list")
    basis = U.forms()
    k = len(points)
    checks: list[tuple[str, bool]] = []

    vanish = all(g.evaluate(p.coords) == 0 for g in basis for p in points)
    checks.append(("vanishing", vanish))

    jac_ok = True
    for p in points:
        jac = [[g.partial(j).evaluate(p.coords) for j in range(n)] for g in basis]
        if linalg.rank(jac, n) != n - 1:
            jac_ok = False
    checks.append(("jacobian_rank", jac_ok))

    try:
        glp = general_linear_position(list(points))
    except StructuralError:
        glp = False
    checks.append(("general_linear_position", glp))

    if n == 2:
        g = binary_gcd(basis[0], basis[1])
        expected = HomogeneousForm.constant(S, 2, 1)
        for p in points:
            expected = expected * _point_form(p)
        checks.append(("gcd_equals_point_product", g.degree == expected.degree and projectively_equal(g, expected)))
        status = "EXACT"
    else:
        nu = n * (d - 1)
        hf = hilbert_function(basis, nu)
        checks.append(("hilbert_function_saturation", hf[nu - 1] == k and hf[nu] == k))
        status = "HEURISTIC"
    return ZkCertificate(all(ok for _, ok in checks), status, tuple(checks))


def is_smooth(f: HomogeneousForm) -> bool:
    """Partials of ``f`` form a regular sequence."""
    if f.is_zero():
        raise PreconditionError("zero form")
    if f.degree < 2:
        raise PreconditionError("smoothness test needs degree at least 2")
    return is_regular_sequence(f.gradient()).is_regular


# --- example forms --------------------------------------------------------------


def fermat(n: int, m: int, ring: str = S) -> HomogeneousForm:
    f = HomogeneousForm.zero(ring, n, m)
    for i in range(n):
        f = f + HomogeneousForm.variable(ring, n, i) ** m
    return f


def partial_fermat(k: int, g: HomogeneousForm) -> HomogeneousForm:
    """``x1^m + ... + xk^m + g`` where ``g`` does not involve the first ``k`` variables."""
    if not 0 <= k <= g.n:
        raise PreconditionError(f"k={k} outside 0..{g.n}")
    if g.support_variables() & set(range(k)):
        raise PreconditionError("g involves one of the first k variables")
    f = g
    for i in range(k):
        f = f + HomogeneousForm.variable(g.ring, g.n, i) ** g.degree
    return f


def nodal(n: int, d: int) -> HomogeneousForm:
    """Degree ``d+1`` form with ordinary double points at the coordinate points."""
    if n < 2 or d < 2 or (n, d) == (2, 2):
        raise PreconditionError(f"nodal example needs n >= 2, d >= 2, (n, d) != (2, 2); got ({n}, {d})")
    xs = [HomogeneousForm.variable(S, n, i) for i in range(n)]
    lin = HomogeneousForm.linear(S, [1] * n)
    sq = HomogeneousForm.zero(S, n, 2)
    top = HomogeneousForm.zero(S, n, d + 1)
    for x in xs:
        sq = sq + x**2
        top = top + x ** (d + 1)
    return (d - 1) * lin ** (d + 1) - (d + 1) * (lin ** (d - 1) * sq) + 2 * top


def make_example(kind: str, n: int, d: int | None = None, m: int | None = None, k: int | None = None, g: HomogeneousForm | None = None) -> HomogeneousForm:
    if kind == "fermat":
        if m is None:
            if d is None:
                raise PreconditionError("fermat needs a degree")
            m = d + 1
        return fermat(n, m)
    if kind in ("partial_fermat", "partial-fermat"):
        if g is None or k is None:
            raise PreconditionError("partial_fermat needs k and g")
        return partial_fermat(k, g)
    if kind == "nodal":
        if d is None:
            raise PreconditionError("nodal needs d")
        return nodal(n, d)
    raise StructuralError(f"unknown example kind {kind!r}")

