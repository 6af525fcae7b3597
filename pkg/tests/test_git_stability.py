import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assocform.errors import DegenerateFormError, PreconditionError, StructuralError
from assocform.geometry import fermat, nodal
from assocform.git_stability import (
    OneParamSubgroup,
    ds_kernel,
    is_k_partial_fermat_in_coords,
    lambda_limit,
    limit_subspace,
    one_ps_ds_certificate,
    split_is_valid,
    torus_destabilizes,
    torus_semistable,
    weight_and_init,
)
from assocform.poly_core import D, S, HomogeneousForm, apply_linear_change, span
from assocform.sampling import random_form, random_invertible, random_lambda, random_smooth_form, sparse_form
from assocform.suites import brute_force_destabilizer, ds_kernel_by_coefficients

from conftest import P
from strategies import forms

L = OneParamSubgroup


def test_subgroup_validation():
    assert L.parse("1,-1,0").weights == (1, -1, 0)
    with pytest.raises(StructuralError):
        L([1, 1])
    with pytest.raises(StructuralError):
        L.parse("1,a")
    assert L([0, 0]).trivial and (-L([2, -2])).weights == (-2, 2)


def test_weight_and_init_examples():
    assert weight_and_init(P("x1^2*x2^2 + x1^3*x2"), L([1, -1])) == (0, P("x1^2*x2^2"))
    for m in (1, 3, 5):
        f = P(f"x1^{m}")
        assert weight_and_init(f, L([1, -1])) == (m, f)
    with pytest.raises(PreconditionError):
        weight_and_init(HomogeneousForm.zero(S, 2, 3), L([1, -1]))


def test_lambda_limit_examples():
    assert lambda_limit(P("x1^2*x2^2 + x1^3*x2"), L([1, -1])) == P("x1^2*x2^2")
    assert lambda_limit(P("x1^3*x2"), L([-1, 1])) is None
    assert lambda_limit(P("x1^4 + x2^4"), L([1, -1])) is None
    assert lambda_limit(P("x1^3*x2"), L([1, -1])).is_zero()


def test_limit_subspace_examples():
    U = span([P("z1^3 + z2^3"), P("z2^3")])
    assert limit_subspace(U, L([1, -1])) == span([P("z2^3"), P("z1^3")])
    V = span([P("x1^2 + x1*x2"), P("x2^2 + x1*x2")])
    assert limit_subspace(V, L([0, 0])) == V
    # weights: x1^2 -> 2, x1x2 -> 0, x2^2 -> -2
    assert limit_subspace(V, L([1, -1])) == span([P("x1*x2"), P("x2^2")])


def test_torus_destabilizes_examples():
    assert torus_destabilizes(P("x1^3"), L([1, -1]))
    for lam in ([1, -1], [-3, 3], [2, -1, -1], [0, 1, -1]):
        assert not torus_destabilizes(fermat(len(lam), 4), L(lam))
    assert torus_destabilizes(P("x1^2*x2"), L([1, -1]))
    with pytest.raises(PreconditionError):
        torus_destabilizes(P("x1^2*x2"), L([0, 0]))


def test_torus_semistable_examples():
    for n, m in [(2, 3), (3, 4), (4, 2)]:
        assert torus_semistable(fermat(n, m))
        assert not torus_semistable(HomogeneousForm.variable(S, n, 0) ** m)
    assert torus_semistable(nodal(2, 3))


def test_torus_semistable_brute_force(rng):
    for _ in range(100):
        n, m = rng.choice([2, 3]), rng.randint(1, 5)
        f = sparse_form(rng, n, m) if rng.random() < 0.8 else random_form(rng, n, m)
        assert torus_semistable(f) == (brute_force_destabilizer(f) is None)


def test_ds_kernel_examples():
    rep = ds_kernel(fermat(3, 4))
    assert rep.k == 3 and rep.torus_dim == 2 and rep.is_direct_sum
    assert rep.kernel == span([P("x1^4", 3), P("x2^4", 3), P("x3^4", 3)])
    g = P("x1^4 + x1*x2^3")
    assert ds_kernel_by_coefficients(g).dim == 1
    assert ds_kernel(g).k == 1
    f = g.embed(3, [0, 1]) + P("x3^4", 3)
    rep = ds_kernel(f)
    assert rep.k == 2 and rep.kernel == span([g.embed(3, [0, 1]), P("x3^4", 3)])
    with pytest.raises(DegenerateFormError):
        ds_kernel(P("x1^4"))


def test_ds_kernel_matches_oracle(rng):
    for _ in range(10):
        n = rng.choice([2, 3])
        f = random_smooth_form(rng, n, 4 if n == 2 else 3)
        assert ds_kernel(f).kernel == ds_kernel_by_coefficients(f)


def test_ds_kernel_permutation_invariant(rng):
    for _ in range(5):
        f = random_smooth_form(rng, 2, 4).embed(3, [0, 1]) + P("x3^4", 3)
        k = ds_kernel(f).k
        for perm in itertools.permutations(range(3)):
            assert ds_kernel(f.permute(perm)).k == k


def test_ds_kernel_contains_transformed_blocks(rng):
    for _ in range(3):
        b1 = random_smooth_form(rng, 2, 4).embed(4, [0, 1])
        b2 = random_smooth_form(rng, 2, 4).embed(4, [2, 3])
        t = random_invertible(rng, 4)
        b1, b2 = apply_linear_change(b1, t), apply_linear_change(b2, t)
        rep = ds_kernel(b1 + b2)
        assert b1 in rep.kernel and b2 in rep.kernel and rep.k >= 2


def test_one_ps_certificate_examples():
    assert one_ps_ds_certificate(P("x1^4 + x2^4"), L([1, -1])) == ((1,), (0,))
    full = P("x1^4 + x1^3*x2 + x1^2*x2^2 + x1*x2^3 + x2^4")
    for lam in ([1, -1], [-1, 1], [2, -2]):
        assert one_ps_ds_certificate(full, L(lam)) is None
    with pytest.raises(PreconditionError):
        one_ps_ds_certificate(full, L([0, 0]))


def test_one_ps_certificate_split_valid(rng):
    for _ in range(30):
        n = rng.choice([2, 3])
        f = sparse_form(rng, n, rng.choice([3, 4]))
        if any(p.is_zero() for p in f.gradient()):
            continue
        lam = random_lambda(rng, n, allow_trivial=False)
        split = one_ps_ds_certificate(f, lam)
        if split is not None:
            assert split_is_valid(f, *split)


def test_partial_fermat_in_coords_examples():
    k, g, idx = is_k_partial_fermat_in_coords(fermat(3, 4))
    assert k == 3 and g.is_zero() and idx == (0, 1, 2)
    F = P("z1^4 + z2^3*z3 + z2*z3^3", 3)
    k, g, idx = is_k_partial_fermat_in_coords(F)
    assert k == 1 and g == P("z2^3*z3 + z2*z3^3", 3)
    assert is_k_partial_fermat_in_coords(P("x1*x2*x3 + x1^2*x2 + x3^2*x1", 3))[0] == 0


@given(forms(2, 3, allow_zero=False), forms(2, 2, allow_zero=False), st.integers(-3, 3))
def test_weight_multiplicative(f, g, a):
    lam = L([a, -a])
    wf, inf = weight_and_init(f, lam)
    wg, ing = weight_and_init(g, lam)
    assert weight_and_init(f * g, lam) == (wf + wg, inf * ing)


@given(forms(3, 3, allow_zero=False), st.integers(-2, 2), st.integers(-2, 2))
def test_limit_idempotent(f, a, b):
    lam = L([a, b, -a - b])
    lim = lambda_limit(f, lam)
    if lim is not None and not lim.is_zero():
        assert lambda_limit(lim, lam) == lim
        assert all(lam.weight(alpha) == 0 for alpha in lim.terms)


def test_limit_subspace_properties(rng):
    from assocform.sampling import random_subspace

    for _ in range(50):
        n, m = rng.choice([2, 3]), rng.randint(1, 4)
        U = random_subspace(rng, rng.choice([S, D]), n, m)
        if U.dim == 0:
            continue
        lam = random_lambda(rng, n)
        V = limit_subspace(U, lam)
        assert V.dim == U.dim and limit_subspace(V, lam) == V
