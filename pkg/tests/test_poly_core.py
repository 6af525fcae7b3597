from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assocform.errors import DegreeMismatchError, ParseError, StructuralError
from assocform.poly_core import (
    D,
    S,
    GradedSubspace,
    HomogeneousForm,
    LinearChange,
    apply_linear_change,
    format_form,
    parse_form,
    span,
)

from conftest import P
from strategies import forms, invertible, rationals


def test_ring_arithmetic_examples():
    assert P("x1^2") + P("x2^2") == P("x1^2 + x2^2")
    x1 = P("x1")
    assert x1 * x1 == P("x1^2")
    z = P("x1^2 + x2^2").scale(0)
    assert z.is_zero() and dict(z.terms) == {}


def test_arithmetic_rejects_mismatches():
    with pytest.raises(StructuralError):
        P("x1^2") + P("x1^3")
    with pytest.raises(StructuralError):
        P("x1^2") + parse_form("x1^2", 3)
    with pytest.raises(StructuralError):
        P("x1^2") + P("z1^2")


def test_partial_derivative_examples():
    f = P("x1^3")
    assert f.partial(0) == P("3*x1^2")
    assert f.partial(1).is_zero()
    assert P("x1^2*x2").partial(0) == P("2*x1*x2")
    assert HomogeneousForm.constant(S, 2, 5).partial(0).is_zero()
    with pytest.raises(StructuralError):
        f.partial(2)


def test_linear_change_examples():
    f = P("x1^2*x2")
    assert apply_linear_change(f, LinearChange.identity(2)) == f
    assert apply_linear_change(f, LinearChange.permutation([1, 0])) == P("x1*x2^2")
    g = LinearChange([[1, 1], [0, 1]])
    assert apply_linear_change(P("x1^2"), g) == P("x1^2 + 2*x1*x2 + x2^2")


def test_singular_change_rejected():
    with pytest.raises(StructuralError):
        LinearChange([[1, 2], [2, 4]])


def test_subspace_examples():
    assert span([P("x1^2"), P("2*x1^2")]).dim == 1
    assert P("x1^2 - x2^2") in span([P("x1^2"), P("x2^2")])
    a = span([P("x1^2"), P("x1*x2")])
    b = span([P("x1*x2"), P("x2^2")])
    assert a & b == span([P("x1*x2")])
    with pytest.raises(StructuralError):
        span([P("x1^2"), P("x1^3")])


def test_parse_examples():
    f = parse_form("x1^2*x2 - 1/2*x3^3", 3)
    assert dict(f.terms) == {(2, 1, 0): 1, (0, 0, 3): Fraction(-1, 2)}
    with pytest.raises(DegreeMismatchError, match="inhomogeneous"):
        parse_form("x1 + x2^2", 2)
    assert format_form(P("2*x1*x2")) == "2*x1*x2"


@pytest.mark.parametrize("text", ["x4^2", "y1", "x1^2 +", "x1 ** 2", "x0", "", "x1 + z2"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_form(text, 3)


def test_format_conventions():
    assert format_form(P("x1^3*x2 + x1^2*x2^2 - x2^4")) == "x1^3*x2 + x1^2*x2^2 - x2^4"
    assert format_form(HomogeneousForm.zero(D, 2, 3)) == "0"
    assert format_form(P("-1/3*z1*z2")) == "-1/3*z1*z2"
    assert parse_form("-z1^3 + 1/3*z2^3", 2).ring == D


@given(forms(3, 3))
def test_round_trip(f):
    assert parse_form(format_form(f), 3, degree=3) == f
    if not f.is_zero():
        assert format_form(parse_form(format_form(f), 3)) == format_form(f)


@given(invertible(3), invertible(3), forms(3, 2))
def test_right_action(g, h, f):
    assert apply_linear_change(f, LinearChange.identity(3)) == f
    assert apply_linear_change(apply_linear_change(f, g), h) == apply_linear_change(f, g @ h)


def test_right_action_fifty_pairs_n4(rng):
    from assocform.sampling import random_form, random_invertible

    for _ in range(50):
        n = rng.randint(2, 4)
        g, h = random_invertible(rng, n), random_invertible(rng, n)
        f = random_form(rng, n, 2, density=0.6)
        assert apply_linear_change(apply_linear_change(f, g), h) == apply_linear_change(f, g @ h)


@given(forms(2, 3), forms(2, 3), forms(2, 2), st.integers(0, 1))
def test_derivation_rules(f, g, h, i):
    assert (f + g).partial(i) == f.partial(i) + g.partial(i)
    assert (f * h).partial(i) == f.partial(i) * h + f * h.partial(i)


@given(forms(3, 5), forms(3, 4))
def test_leibniz_degree_five(f, h):
    prod = f * h
    for i in range(3):
        assert prod.partial(i) == f.partial(i) * h + f * h.partial(i)


@given(st.lists(forms(2, 3), min_size=1, max_size=4), st.randoms(use_true_random=False), rationals)
def test_span_is_canonical(gens, rnd, c):
    W = span(gens, S, 2, 3)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    scaled = [g.scale(c) if c else g for g in shuffled] + [gens[0]]
    W2 = span(scaled, S, 2, 3)
    assert W2.basis == W.basis and W2.pivots == W.pivots


def test_subspace_lattice_ops():
    full = GradedSubspace.full(S, 2, 2)
    zero = GradedSubspace.zero(S, 2, 2)
    a = span([P("x1^2")])
    assert zero <= a <= full
    assert (a + span([P("x1*x2"), P("x2^2")])) == full
    assert (a & zero) == zero
