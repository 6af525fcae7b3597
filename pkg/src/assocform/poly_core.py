"""Sparse homogeneous forms with rational coefficients.

Forms live either in ``S = Q[x1..xn]`` (ring tag ``"S"``) or in the dual ring
``D = Q[z1..zn]`` (ring tag ``"D"``) on which ``S`` acts by differentiation.
A form is an immutable map from exponent tuples to nonzero ``Fraction``
coefficients together with an explicit degree, so the zero form still knows
which graded piece it belongs to.

Canonical monomial order everywhere is graded reverse lexicographic with
``x1 > x2 > ... > xn``. Variables are addressed by 0-based index in the API
and printed 1-based (``x1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial, prod
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from . import linalg
from .errors import DegreeMismatchError, ParseError, StructuralError

S = "S"
D = "D"
RING_LETTER = {S: "x", D: "z"}
LETTER_RING = {"x": S, "z": D}

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


def grevlex_key(alpha: Exponent) -> tuple:
    """Sort key putting larger monomials first (within and across degrees)."""
    return (-sum(alpha), tuple(reversed(alpha)))


@lru_cache(maxsize=None)
def monomials(n: int, m: int) -> tuple[Exponent, ...]:
    """All exponent vectors of degree ``m`` in ``n`` variables, grevlex descending."""
    if m < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), m):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        out.append(tuple(alpha))
    out.sort(key=grevlex_key)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, m: int) -> Mapping[Exponent, int]:
    return MappingProxyType({a: i for i, a in enumerate(monomials(n, m))})


def piece_dim(n: int, m: int) -> int:
    return comb(m + n - 1, n - 1) if m >= 0 else 0


def exp_factorial(alpha: Exponent) -> int:
    return prod(factorial(a) for a in alpha)


class HomogeneousForm:
    """Immutable homogeneous polynomial in ``S`` or ``D``."""

    __slots__ = ("ring", "n", "degree", "_terms", "_hash")

    def __init__(self, ring: str, n: int, degree: int, terms: Mapping[Exponent, Scalar] | None = None):
        if ring not in (S, D):
            raise StructuralError(f"unknown ring tag {ring!r}")
        if n < 1:
            raise StructuralError("variable count must be positive")
        if degree < 0:
            raise StructuralError("degree must be non-negative")
        clean: dict[Exponent, Fraction] = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n or any(a < 0 for a in alpha):
                raise StructuralError(f"bad exponent vector {alpha} for n={n}")
            if sum(alpha) != degree:
                raise StructuralError(f"exponent {alpha} does not have degree {degree}")
            c = Fraction(c)
            if c:
                clean[alpha] = c
        self.ring = ring
        self.n = n
        self.degree = degree
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, ring: str, n: int, degree: int) -> HomogeneousForm:
        return cls(ring, n, degree)

    @classmethod
    def monomial(cls, ring: str, alpha: Sequence[int], coeff: Scalar = 1) -> HomogeneousForm:
        alpha = tuple(alpha)
        return cls(ring, len(alpha), sum(alpha), {alpha: coeff})

    @classmethod
    def variable(cls, ring: str, n: int, i: int) -> HomogeneousForm:
        alpha = [0] * n
        alpha[i] = 1
        return cls.monomial(ring, alpha)

    @classmethod
    def constant(cls, ring: str, n: int, c: Scalar) -> HomogeneousForm:
        return cls(ring, n, 0, {(0,) * n: c})

    @classmethod
    def linear(cls, ring: str, coeffs: Sequence[Scalar]) -> HomogeneousForm:
        n = len(coeffs)
        return cls(ring, n, 1, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_vector(cls, ring: str, n: int, degree: int, vec: Sequence[Scalar]) -> HomogeneousForm:
        mons = monomials(n, degree)
        if len(vec) != len(mons):
            raise StructuralError("vector length does not match the graded piece")
        return cls(ring, n, degree, dict(zip(mons, vec)))

    # accessors

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]))

    def vector(self) -> list[Fraction]:
        """Dense coefficients over ``monomials(n, degree)``."""
        return [self._terms.get(a, Fraction(0)) for a in monomials(self.n, self.degree)]

    def support_variables(self) -> frozenset[int]:
        return frozenset(i for alpha in self._terms for i, a in enumerate(alpha) if a)

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    # arithmetic

    def _check_compatible(self, other: HomogeneousForm, same_degree: bool) -> None:
        if not isinstance(other, HomogeneousForm):
            raise StructuralError(f"expected a HomogeneousForm, got {type(other).__name__}")
        if self.ring != other.ring:
            raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.n != other.n:
            raise StructuralError(f"variable count mismatch: {self.n} vs {other.n}")
        if same_degree and self.degree != other.degree:
            raise StructuralError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: HomogeneousForm) -> HomogeneousForm:
        self._check_compatible(other, same_degree=True)
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return HomogeneousForm(self.ring, self.n, self.degree, out)

    def __neg__(self) -> HomogeneousForm:
        return HomogeneousForm(self.ring, self.n, self.degree, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: HomogeneousForm) -> HomogeneousForm:
        return self + (-other)

    def scale(self, c: Scalar) -> HomogeneousForm:
        c = Fraction(c)
        return HomogeneousForm(self.ring, self.n, self.degree, {a: c * v for a, v in self._terms.items()})

    def __mul__(self, other: HomogeneousForm | Scalar) -> HomogeneousForm:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other, same_degree=False)
        out: dict[Exponent, Fraction] = {}
        for a, c in self._terms.items():
            for b, e in other._terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, 0) + c * e
        return HomogeneousForm(self.ring, self.n, self.degree + other.degree, out)

    def __rmul__(self, other: Scalar) -> HomogeneousForm:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> HomogeneousForm:
        if k < 0:
            raise StructuralError("negative power")
        result = HomogeneousForm.constant(self.ring, self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def partial(self, i: int) -> HomogeneousForm:
        """Partial derivative with respect to variable ``i`` (0-based)."""
        if not 0 <= i < self.n:
            raise StructuralError(f"variable index {i} out of range for n={self.n}")
        if self.degree == 0:
            return HomogeneousForm(self.ring, self.n, 0)
        out = {}
        for a, c in self._terms.items():
            if a[i]:
                b = list(a)
                b[i] -= 1
                out[tuple(b)] = c * a[i]
        return HomogeneousForm(self.ring, self.n, self.degree - 1, out)

    def gradient(self) -> list[HomogeneousForm]:
        return [self.partial(i) for i in range(self.n)]

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.n:
            raise StructuralError(f"point has {len(point)} coordinates, expected {self.n}")
        pt = [Fraction(p) for p in point]
        total = Fraction(0)
        for a, c in self._terms.items():
            term = c
            for p, e in zip(pt, a):
                if e:
                    term *= p**e
            total += term
        return total

    __call__ = evaluate

    def with_ring(self, ring: str) -> HomogeneousForm:
        """Same coefficients read in the other ring (``x_i <-> z_i``)."""
        return HomogeneousForm(ring, self.n, self.degree, self._terms)

    def embed(self, n: int, positions: Sequence[int]) -> HomogeneousForm:
        """Re-index into ``n`` variables, sending variable ``i`` to ``positions[i]``."""
        if len(positions) != self.n or len(set(positions)) != self.n:
            raise StructuralError("positions must be distinct, one per variable")
        out = {}
        for a, c in self._terms.items():
            b = [0] * n
            for i, e in enumerate(a):
                b[positions[i]] = e
            out[tuple(b)] = c
        return HomogeneousForm(self.ring, n, self.degree, out)

    def permute(self, perm: Sequence[int]) -> HomogeneousForm:
        """Rename variable ``i`` to ``perm[i]``."""
        return self.embed(self.n, perm)

    # comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        return (self.ring, self.n, self.degree, self._terms) == (other.ring, other.n, other.degree, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.n, self.degree, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"HomogeneousForm({self.ring!r}, n={self.n}, degree={self.degree}, {format_form(self)!r})"

    def __str__(self) -> str:
        return format_form(self)


def x_var(n: int, i: int) -> HomogeneousForm:
    return HomogeneousForm.variable(S, n, i)


def z_var(n: int, i: int) -> HomogeneousForm:
    return HomogeneousForm.variable(D, n, i)


# --- linear changes of variables -------------------------------------------


@dataclass(frozen=True)
class LinearChange:
    """Invertible ``n x n`` rational matrix acting by ``x_i -> sum_j g_ij x_j``."""

    matrix: tuple[tuple[Fraction, ...], ...]
    determinant: Fraction = field(init=False)

    def __init__(self, matrix: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(Fraction(a) for a in r) for r in matrix)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise StructuralError("linear change needs a square matrix")
        det = linalg.determinant(rows)
        if det == 0:
            raise StructuralError("singular matrix")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "determinant", det)

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> LinearChange:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> LinearChange:
        """The substitution ``x_i -> x_perm[i]``."""
        n = len(perm)
        return cls([[int(perm[i] == j) for j in range(n)] for i in range(n)])

    def compose(self, other: LinearChange) -> LinearChange:
        """Matrix product; ``apply(apply(f, g), h) == apply(f, g.compose(h))``."""
        return LinearChange(linalg.matmul(self.matrix, other.matrix))

    __matmul__ = compose

    def inverse(self) -> LinearChange:
        return LinearChange(linalg.inverse(self.matrix))

    def transpose(self) -> LinearChange:
        return LinearChange(linalg.transpose(self.matrix))

    def contragredient(self) -> LinearChange:
        return self.inverse().transpose()


def apply_linear_change(f: HomogeneousForm, g: LinearChange) -> HomogeneousForm:
    """Substitute ``x_i -> sum_j g[i][j] x_j`` into ``f``."""
    if f.n != g.n:
        raise StructuralError(f"matrix size {g.n} does not match n={f.n}")
    n = f.n
    images = [HomogeneousForm.linear(f.ring, g.matrix[i]) for i in range(n)]
    powers: dict[tuple[int, int], HomogeneousForm] = {}

    def power(i: int, k: int) -> HomogeneousForm:
        key = (i, k)
        if key not in powers:
            powers[key] = images[i] ** k
        return powers[key]

    acc: dict[Exponent, Fraction] = {}
    for alpha, c in f.terms.items():
        term = HomogeneousForm.constant(f.ring, n, c)
        for i, e in enumerate(alpha):
            if e:
                term = term * power(i, e)
        for a, v in term.terms.items():
            acc[a] = acc.get(a, 0) + v
    return HomogeneousForm(f.ring, n, f.degree, acc)


# --- graded subspaces ---------------------------------------------------------


@dataclass(frozen=True)
class GradedSubspace:
    """Subspace of one graded piece, stored as a reduced row echelon basis.

    Coordinates are over ``monomials(n, degree)``; equal subspaces have
    identical ``basis`` tuples.
    """

    ring: str
    n: int
    degree: int
    basis: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...] = field(compare=False, repr=False, default=())

    def __post_init__(self):
        if len(self.pivots) != len(self.basis):
            piv = tuple(next(j for j, a in enumerate(r) if a) for r in self.basis)
            object.__setattr__(self, "pivots", piv)

    @classmethod
    def from_vectors(cls, ring: str, n: int, degree: int, vectors: Iterable[Sequence[Scalar]]) -> GradedSubspace:
        ncols = piece_dim(n, degree)
        rows = []
        for v in vectors:
            if len(v) != ncols:
                raise StructuralError("vector length does not match the graded piece")
            rows.append([Fraction(a) for a in v])
        basis, pivots = linalg.rref(rows, ncols)
        return cls(ring, n, degree, basis, pivots)

    @classmethod
    def zero(cls, ring: str, n: int, degree: int) -> GradedSubspace:
        return cls(ring, n, degree, (), ())

    @classmethod
    def full(cls, ring: str, n: int, degree: int) -> GradedSubspace:
        k = piece_dim(n, degree)
        return cls.from_vectors(ring, n, degree, [[int(i == j) for j in range(k)] for i in range(k)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return piece_dim(self.n, self.degree)

    def forms(self) -> list[HomogeneousForm]:
        return [HomogeneousForm.from_vector(self.ring, self.n, self.degree, r) for r in self.basis]

    def _check_form(self, f: HomogeneousForm) -> None:
        if (f.ring, f.n, f.degree) != (self.ring, self.n, self.degree):
            raise StructuralError(
                f"form in {f.ring}_{f.degree} (n={f.n}) is not in {self.ring}_{self.degree} (n={self.n})"
            )

    def _check_space(self, other: GradedSubspace) -> None:
        if (other.ring, other.n, other.degree) != (self.ring, self.n, self.degree):
            raise StructuralError("subspaces live in different graded pieces")

    def reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        """Remainder of ``vec`` after eliminating the pivot coordinates."""
        v = list(vec)
        for row, p in zip(self.basis, self.pivots):
            a = v[p]
            if a:
                v = [x - a * y for x, y in zip(v, row)]
        return v

    def contains(self, f: HomogeneousForm) -> bool:
        self._check_form(f)
        return not any(self.reduce(f.vector()))

    __contains__ = contains

    def issubspace(self, other: GradedSubspace) -> bool:
        """``self <= other``."""
        self._check_space(other)
        return all(not any(other.reduce(r)) for r in self.basis)

    def __le__(self, other: GradedSubspace) -> bool:
        return self.issubspace(other)

    def __add__(self, other: GradedSubspace) -> GradedSubspace:
        self._check_space(other)
        return GradedSubspace.from_vectors(self.ring, self.n, self.degree, self.basis + other.basis)

    def intersection(self, other: GradedSubspace) -> GradedSubspace:
        self._check_space(other)
        if not self.basis or not other.basis:
            return GradedSubspace.zero(self.ring, self.n, self.degree)
        k = self.dim
        cols = list(self.basis) + [[-x for x in r] for r in other.basis]
        # columns of the system are the spanning vectors
        system = linalg.transpose(cols)
        null = linalg.nullspace(system, len(cols))
        vecs = []
        for coeffs in null:
            v = [Fraction(0)] * self.ambient_dim
            for a, row in zip(coeffs[:k], self.basis):
                if a:
                    v = [x + a * y for x, y in zip(v, row)]
            vecs.append(v)
        return GradedSubspace.from_vectors(self.ring, self.n, self.degree, vecs)

    __and__ = intersection


def span(
    forms: Iterable[HomogeneousForm],
    ring: str | None = None,
    n: int | None = None,
    degree: int | None = None,
) -> GradedSubspace:
    """Echelonized span. The graded piece must be given when ``forms`` is empty."""
    forms = list(forms)
    if forms:
        f0 = forms[0]
        ring = f0.ring if ring is None else ring
        n = f0.n if n is None else n
        degree = f0.degree if degree is None else degree
    if ring is None or n is None or degree is None:
        raise StructuralError("span of no forms needs ring, n and degree")
    for f in forms:
        if (f.ring, f.n, f.degree) != (ring, n, degree):
            raise StructuralError("spanning forms lie in different graded pieces")
    return GradedSubspace.from_vectors(ring, n, degree, [f.vector() for f in forms])


# --- text format ----------------------------------------------------------------

_COEF_RE = re.compile(r"\d+(?:/\d+)?")
_FACTOR_RE = re.compile(r"([A-Za-z]+)(\d+)(?:\^(\d+))?")
_TERM_SPLIT_RE = re.compile(r"([+-])")


def _parse_term(text: str, n: int, ring_box: list) -> tuple[Exponent, Fraction]:
    if not text:
        raise ParseError("empty term")
    coef = Fraction(1)
    rest = text
    m = _COEF_RE.match(text)
    if m:
        num = m.group()
        if "/" in num and int(num.split("/")[1]) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        coef = Fraction(num)
        rest = text[m.end():]
        if rest.startswith("*"):
            rest = rest[1:]
            if not rest:
                raise ParseError(f"dangling '*' in term {text!r}")
        if not rest:
            return (0,) * n, coef
    alpha = [0] * n
    for factor in rest.split("*"):
        fm = _FACTOR_RE.fullmatch(factor)
        if fm is None:
            raise ParseError(f"cannot parse factor {factor!r} in term {text!r}")
        letter, idx, exp = fm.group(1), int(fm.group(2)), fm.group(3)
        if letter not in LETTER_RING:
            raise ParseError(f"unknown variable {letter}{idx}")
        ring = LETTER_RING[letter]
        if ring_box[0] is None:
            ring_box[0] = ring
        elif ring_box[0] != ring:
            raise ParseError(f"mixed x and z variables in {text!r}")
        if not 1 <= idx <= n:
            raise ParseError(f"unknown variable {letter}{idx} for n={n}")
        alpha[idx - 1] += 1 if exp is None else int(exp)
    return tuple(alpha), coef


def parse_form(text: str, n: int, ring: str | None = None, degree: int | None = None) -> HomogeneousForm:
    """Parse ``x1^2*x2 - 1/2*x3^3`` style text into a form in ``n`` variables.

    The ring is read off the variable letter (``x`` for S, ``z`` for D) unless
    given; a constant with no variables defaults to S.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial")
    pieces = _TERM_SPLIT_RE.split(s)
    # pieces alternate: [first, sign, term, sign, term, ...]
    signed = []
    first = pieces[0]
    if first:
        signed.append(("+", first))
    elif len(pieces) < 3:
        raise ParseError(f"cannot parse {text!r}")
    for k in range(1, len(pieces), 2):
        sign, term = pieces[k], pieces[k + 1]
        if not term:
            raise ParseError(f"missing term after {sign!r} in {text!r}")
        signed.append((sign, term))
    ring_box: list = [ring]
    terms: dict[Exponent, Fraction] = {}
    deg = degree
    for sign, term in signed:
        alpha, c = _parse_term(term, n, ring_box)
        if c == 0 and not any(alpha) and len(signed) == 1 and degree is not None:
            # bare "0" is the zero form of whatever degree the caller expects
            return HomogeneousForm(ring_box[0] or S, n, degree)
        if deg is None:
            deg = sum(alpha)
        elif sum(alpha) != deg:
            raise DegreeMismatchError(f"inhomogeneous: term {sign}{term} has degree {sum(alpha)}, expected {deg}")
        if sign == "-":
            c = -c
        terms[alpha] = terms.get(alpha, 0) + c
    return HomogeneousForm(ring_box[0] or S, n, deg, terms)


def format_monomial(alpha: Exponent, ring: str) -> str:
    letter = RING_LETTER[ring]
    parts = []
    for i, e in enumerate(alpha):
        if e == 1:
            parts.append(f"{letter}{i + 1}")
        elif e > 1:
            parts.append(f"{letter}{i + 1}^{e}")
    return "*".join(parts)


def format_form(f: HomogeneousForm) -> str:
    """Canonical text: grevlex order, unit coefficients elided."""
    if f.is_zero():
        return "0"
    out = []
    for k, (alpha, c) in enumerate(f.sorted_terms()):
        mono = format_monomial(alpha, f.ring)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
