from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assocform.apolarity import (
    Functional,
    factorial_power_identity,
    inverse_system_from_functional,
    linear_power,
    pairing,
    perp,
    perp_dual,
    polar_apply,
    vanishing_criterion,
)
from assocform.artinian import a_gr, ideal_piece
from assocform.errors import PreconditionError, StructuralError
from assocform.geometry import nodal
from assocform.poly_core import D, S, GradedSubspace, HomogeneousForm, exp_factorial, monomials, span
from assocform.sampling import random_functional, random_point

from conftest import P
from strategies import forms, rationals, subspaces


def test_polar_apply_examples():
    assert polar_apply(P("x1"), P("z1^3")) == P("3*z1^2")
    assert polar_apply(P("x2"), P("z1^3")).is_zero()
    c = polar_apply(P("x1^2*x2"), P("z1^2*z2"))
    assert c.degree == 0 and c.coefficient((0, 0)) == 2


def test_polar_apply_ring_check():
    with pytest.raises(StructuralError):
        polar_apply(P("z1"), P("z1^3"))
    with pytest.raises(StructuralError):
        polar_apply(P("x1"), P("x1^3"))


def test_polar_apply_is_iterated_differentiation():
    F = P("z1^3*z2 - 2*z1*z2^3 + 1/2*z2^4")
    g = P("x1*x2")
    assert polar_apply(g, F) == F.partial(0).partial(1)


def test_perp_examples():
    assert perp(GradedSubspace.full(D, 2, 3)).dim == 0
    full_s3 = span([P("x1^3"), P("x1^2*x2"), P("x1*x2^2"), P("x2^3")])
    assert perp_dual(full_s3).dim == 0
    piece = ideal_piece([P("x1^3"), P("x2^3")], 4).piece
    assert piece == span([P("x1^4"), P("x1^3*x2"), P("x1*x2^3"), P("x2^4")])
    assert perp_dual(piece) == span([P("z1^2*z2^2")])


def test_inverse_system_examples():
    omega = Functional.dual_basis(2, (2, 1))
    assert inverse_system_from_functional(omega) == P("1/2*z1^2*z2")
    assert inverse_system_from_functional(Functional(2, 3, (0, 0, 0, 0))).is_zero()
    coefficient_sum = Functional(2, 2, (1, 1, 1))
    assert inverse_system_from_functional(coefficient_sum) == P("1/2*z1^2 + z1*z2 + 1/2*z2^2")


def test_evaluate_examples():
    assert P("z1^2*z2").evaluate([1, 1]) == 1
    assert P("z1^2*z2 - 3*z2^3").evaluate([0, 0]) == 0


def test_vanishing_examples():
    W = span([P("z1*z2")])
    assert vanishing_criterion(W, [1, 0])
    assert P("x1^2") in perp(W)
    assert not vanishing_criterion(span([P("z1^2")]), [1, 0])
    # nodal pipeline: the forms of (I_U)_t vanish at the node (1, 0), so z1^t lies in A_Gr(U)
    U = span(nodal(2, 3).gradient())
    piece = ideal_piece(U.forms(), 3).piece
    as_dual = span([g.with_ring(D) for g in piece.forms()], D, 2, 3)
    assert vanishing_criterion(as_dual, [1, 0])
    assert P("z1^3") in a_gr(U)
    assert not vanishing_criterion(a_gr(U), [1, 0])
    with pytest.raises(PreconditionError):
        vanishing_criterion(W, [0, 0])


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (3, 3), (2, 5)])
def test_pairing_diagonality(n, m):
    for a in monomials(n, m):
        for b in monomials(n, m):
            val = pairing(HomogeneousForm.monomial(S, a), HomogeneousForm.monomial(D, b))
            assert val == (exp_factorial(a) if a == b else 0)


@given(st.sampled_from([(2, 1), (2, 4), (3, 2), (3, 3), (2, 6), (3, 4)]), st.data())
def test_perp_involution_and_dimension(nm, data):
    n, m = nm
    W = data.draw(subspaces(D, n, m))
    P_ = perp(W)
    assert perp_dual(P_) == W
    assert P_.dim + W.dim == comb(m + n - 1, n - 1)
    U = data.draw(subspaces(S, n, m))
    assert perp(perp_dual(U)) == U


def test_perp_hundred_random(rng):
    from assocform.sampling import random_subspace

    for _ in range(100):
        n, m = rng.choice([2, 3]), rng.randint(1, 6)
        W = random_subspace(rng, D, n, m)
        assert perp_dual(perp(W)) == W
        assert perp(W).dim + W.dim == comb(m + n - 1, n - 1)


def test_explicit_formula_hundred(rng):
    from assocform.sampling import random_form

    for _ in range(100):
        n, m = rng.choice([(2, 3), (2, 4), (3, 2), (3, 3)])
        omega = random_functional(rng, n, m)
        f = random_form(rng, n, m, rational_coeffs=True)
        assert pairing(f, inverse_system_from_functional(omega)) == omega(f)


@given(forms(3, 3, ring=D, allow_zero=False))
def test_functional_of_form_reconstructs(g):
    omega = Functional.of_form(g)
    assert inverse_system_from_functional(omega) == g
    assert omega.kernel() == perp(span([g]))
    # a form pairing to 1 with g is sent to 1
    a, c = g.sorted_terms()[0]
    f = HomogeneousForm.monomial(S, a, Fraction(1, exp_factorial(a)) / c)
    assert omega(f) == 1


@pytest.mark.parametrize("n,m", [(2, 1), (2, 4), (2, 5), (3, 3), (3, 5)])
def test_evaluation_identity(rng, n, m):
    for _ in range(40):
        omega = random_functional(rng, n, m)
        a = random_point(rng, n, nonzero=False)
        lhs = inverse_system_from_functional(omega).evaluate(a)
        assert lhs == factorial_power_identity(omega, a)
        assert lhs == omega(linear_power(a, m)) / factorial(m)


@given(st.sampled_from([(2, 2), (2, 3), (3, 2)]), st.data())
def test_vanishing_agrees_with_evaluation(nm, data):
    n, m = nm
    W = data.draw(subspaces(D, n, m))
    a = data.draw(st.lists(rationals, min_size=n, max_size=n).filter(any))
    expected = all(F.evaluate(a) == 0 for F in W.forms())
    assert vanishing_criterion(W, a) == expected


def test_functional_json_round_trip():
    omega = Functional(2, 2, (Fraction(1, 2), -3, 0))
    assert Functional.from_json(2, 2, omega.to_json()) == omega
    with pytest.raises(StructuralError):
        Functional.from_json(2, 2, "[1, 2]")
    with pytest.raises(StructuralError):
        Functional.from_json(2, 2, "nope")
