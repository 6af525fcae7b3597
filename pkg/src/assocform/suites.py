"""Batch acceptance and property suites.

Each check is a function of a seeded ``random.Random`` returning
``(passed, detail)``. ``run_suite`` derives one generator per check from the
suite seed, so reports are reproducible and checks are independent.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import linalg
from .apolarity import (
    Functional,
    inverse_system_from_functional,
    linear_power,
    pairing,
    perp,
    perp_dual,
    polar_apply,
    vanishing_criterion,
)
from .artinian import (
    GradedIdeal,
    a_gr,
    apolar_ideal_generators,
    associated_form,
    associated_form_sequence,
    gradient_point,
    in_w_nd,
    projectively_equal,
    wnd_quotient_dim,
)
from .geometry import (
    ProjectivePoint,
    fermat,
    is_ordinary_double_point,
    is_smooth,
    multiplicity_at,
    nodal,
    veronese_multiplicity_check,
    verify_zk_membership,
)
from .git_stability import (
    OneParamSubgroup,
    ds_kernel,
    lambda_limit,
    limit_subspace,
    one_ps_ds_certificate,
    split_is_valid,
    torus_semistable,
    weight_and_init,
)
from .poly_core import (
    D,
    S,
    GradedSubspace,
    HomogeneousForm,
    apply_linear_change,
    format_form,
    monomials,
    parse_form,
    piece_dim,
    span,
)
from .sampling import (
    random_form,
    random_functional,
    random_invertible,
    random_lambda,
    random_point,
    random_regular_sequence,
    random_smooth_form,
    random_subspace,
    random_unimodular,
    sparse_form,
)

DEFAULT_SEED = 1729

Check = Callable[[random.Random], "tuple[bool, str]"]


@dataclass(frozen=True)
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.key} {self.title}: {self.detail}"


# --- independent oracles ---------------------------------------------------------


def brute_force_destabilizer(f: HomogeneousForm, bound: int | None = None) -> tuple[int, ...] | None:
    """Search integer weights with zero sum and ``|w_i| <= bound`` making every term positive."""
    n, m = f.n, f.degree
    bound = m * n if bound is None else bound
    support = list(f.terms)
    for head in itertools.product(range(-bound, bound + 1), repeat=n - 1):
        last = -sum(head)
        if abs(last) > bound:
            continue
        lam = head + (last,)
        if not any(lam):
            continue
        if all(sum(l * a for l, a in zip(lam, alpha)) > 0 for alpha in support):
            return lam
    return None


def ds_kernel_by_coefficients(f: HomogeneousForm) -> GradedSubspace:
    """Direct-sum kernel from the system ``dg/dx_i = sum_j C_ij df/dx_j`` in unknowns ``(g, C)``."""
    n, m = f.n, f.degree
    high = monomials(n, m)
    low = monomials(n, m - 1)
    low_idx = {b: j for j, b in enumerate(low)}
    grads = [p.vector() for p in f.gradient()]
    nvars = len(high) + n * n
    rows = []
    for i in range(n):
        for j_low in range(len(low)):
            row = [Fraction(0)] * nvars
            for col, a in enumerate(high):
                if a[i]:
                    b = list(a)
                    b[i] -= 1
                    if low_idx[tuple(b)] == j_low:
                        row[col] = Fraction(a[i])
            for j in range(n):
                row[len(high) + i * n + j] = -grads[j][j_low]
            rows.append(row)
    null = linalg.nullspace(rows, nvars)
    return GradedSubspace.from_vectors(S, n, m, [v[: len(high)] for v in null])


def gcd_is_constant_binary(p: HomogeneousForm, q: HomogeneousForm) -> bool:
    """Sylvester-resultant test: two binary forms share no projective root."""
    if p.is_zero() or q.is_zero():
        return False
    a, b = p.degree, q.degree
    if a == 0 or b == 0:
        return True
    pc = [p.coefficient((a - i, i)) for i in range(a + 1)]
    qc = [q.coefficient((b - i, i)) for i in range(b + 1)]
    size = a + b
    mat = []
    for r in range(b):
        mat.append([Fraction(0)] * r + pc + [Fraction(0)] * (size - r - a - 1))
    for r in range(a):
        mat.append([Fraction(0)] * r + qc + [Fraction(0)] * (size - r - b - 1))
    return linalg.determinant(mat) != 0


# --- acceptance criteria -------------------------------------------------------


def ac1_fermat(rng: random.Random) -> tuple[bool, str]:
    cases = [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)]
    slow = []
    for n, d in cases:
        start = time.perf_counter()
        A = associated_form(fermat(n, d + 1))
        expected = HomogeneousForm.monomial(D, [d - 1] * n)
        elapsed = time.perf_counter() - start
        if not projectively_equal(A, expected):
            return False, f"(n,d)=({n},{d}) gave {format_form(A)}"
        if elapsed >= 5.0:
            slow.append((n, d))
    if slow:
        return False, f"cases over 5 s: {slow}"
    return True, f"{len(cases)} cases, each under 5 s"


def ac2_evaluation(rng: random.Random) -> tuple[bool, str]:
    count = 0
    for n, m in [(2, 4), (3, 3)]:
        for _ in range(100):
            omega = random_functional(rng, n, m)
            a = random_point(rng, n, nonzero=False)
            lhs = inverse_system_from_functional(omega).evaluate(a)
            rhs = omega(linear_power(a, m)) / factorial(m)
            if lhs != rhs:
                return False, f"mismatch for n={n}, m={m}, a={a}"
            count += 1
    return True, f"{count} exact identities"


def ac3_gradient_hilbert(rng: random.Random) -> tuple[bool, str]:
    shapes = [(2, 3), (2, 4), (3, 2), (3, 3)]
    for k in range(50):
        n, d = shapes[k % len(shapes)]
        gens = random_regular_sequence(rng, n, d)
        F = associated_form_sequence(gens)
        nu = n * (d - 1)
        ideal = GradedIdeal(gens)
        for p in (1, 2):
            if perp(gradient_point(F, p)) != ideal.piece(nu - p).piece:
                return False, f"duality fails at p={p} for {[format_form(g) for g in gens]}"
    return True, "50 regular sequences, p in {1,2}"


def ac4_perp(rng: random.Random) -> tuple[bool, str]:
    for _ in range(100):
        n = rng.choice([2, 3])
        m = rng.randint(1, 6)
        W = random_subspace(rng, D, n, m)
        P = perp(W)
        if perp_dual(P) != W or P.dim + W.dim != piece_dim(n, m):
            return False, f"failure at n={n}, m={m}, dim={W.dim}"
        U = random_subspace(rng, S, n, m)
        Q = perp_dual(U)
        if perp(Q) != U or Q.dim + U.dim != piece_dim(n, m):
            return False, f"dual failure at n={n}, m={m}, dim={U.dim}"
    return True, "100 random subspaces on each side"


def ac5_nodal(rng: random.Random) -> tuple[bool, str]:
    for n, d in [(2, 3), (2, 4), (3, 2), (3, 3)]:
        f = nodal(n, d)
        U = span(f.gradient())
        qd = wnd_quotient_dim(U)
        if qd != n or not in_w_nd(U):
            return False, f"(n,d)=({n},{d}) quotient dimension {qd}"
        t = n * (d - 1) - 1
        expected = span([HomogeneousForm.variable(D, n, i) ** t for i in range(n)])
        if a_gr(U) != expected:
            return False, f"(n,d)=({n},{d}) a_gr mismatch"
    return True, "4 nodal forms"


def gorenstein_instances(rng: random.Random) -> list[tuple[str, GradedIdeal, int]]:
    out = []
    for n, d in [(2, 3), (2, 4), (3, 2), (3, 3)]:
        F = nodal(n, d).with_ring(D)
        out.append((f"nodal({n},{d})", GradedIdeal(apolar_ideal_generators(F)), F.degree))
    X = lambda n, i, e: HomogeneousForm.variable(S, n, i) ** e
    monomial_cis = [
        [X(2, 0, 3), X(2, 1, 3)],
        [X(3, 0, 2), X(3, 1, 2), X(3, 2, 2)],
        [X(3, 0, 3), X(3, 1, 3), X(3, 2, 3)],
        [X(2, 0, 2), X(2, 1, 4)],
    ]
    for gens in monomial_cis:
        nu = sum(g.degree - 1 for g in gens)
        out.append(("monomial CI " + ",".join(format_form(g) for g in gens), GradedIdeal(gens), nu))
    shapes = [(2, 3), (2, 4), (3, 2)]
    for k in range(20):
        n, d = shapes[k % len(shapes)]
        gens = random_regular_sequence(rng, n, d)
        out.append((f"random CI #{k}", GradedIdeal(gens), n * (d - 1)))
    return out


def ac6_multiplicity(rng: random.Random) -> tuple[bool, str]:
    checks = 0
    instances = gorenstein_instances(rng)
    for name, ideal, nu in instances:
        n = ideal.n
        F = ideal.inverse_system(nu)
        points = [ProjectivePoint.coordinate(n, i) for i in range(n)]
        points += [ProjectivePoint(random_point(rng, n)) for _ in range(20)]
        for p in points:
            mult = multiplicity_at(F, p)
            for ell in range(nu):
                res = veronese_multiplicity_check(ideal, nu, p, ell)
                if res.power_in_ideal != (mult >= ell + 1) or res.lower_power_in_ideal != (mult >= ell + 2):
                    return False, f"{name}: point {p.coords}, l={ell}, multiplicity {mult}"
                if res.exact_multiplicity != (mult == ell + 1):
                    return False, f"{name}: exact pattern mismatch"
                checks += 1
    return True, f"{len(instances)} Gorenstein instances, {checks} witness checks"


def _non_direct_sum(rng: random.Random, n: int, m: int) -> HomogeneousForm:
    while True:
        g = random_smooth_form(rng, n, m)
        if ds_kernel_by_coefficients(g).dim == 1:
            return g


def ac7_direct_sums(rng: random.Random) -> tuple[bool, str]:
    rep = ds_kernel(fermat(3, 4))
    X = [HomogeneousForm.variable(S, 3, i) ** 4 for i in range(3)]
    if rep.k != 3 or rep.kernel != span(X) or rep.torus_dim != 2:
        return False, "Fermat kernel wrong"
    for k in range(10):
        if k % 2 == 0:
            g = _non_direct_sum(rng, 2, 4)
            b1 = g.embed(3, [0, 1])
            b2 = HomogeneousForm.variable(S, 3, 2) ** 4
            n = 3
        else:
            b1 = _non_direct_sum(rng, 2, 4).embed(4, [0, 1])
            b2 = _non_direct_sum(rng, 2, 4).embed(4, [2, 3])
            n = 4
        if k % 4 in (2, 3):
            t = random_invertible(rng, n)
            b1, b2 = apply_linear_change(b1, t), apply_linear_change(b2, t)
        rep = ds_kernel(b1 + b2)
        if rep.k != 2 or b1 not in rep.kernel or b2 not in rep.kernel or not rep.is_direct_sum:
            return False, f"two-block case {k}: k={rep.k}"
    for k in range(10):
        f = random_smooth_form(rng, 3, 4)
        if ds_kernel_by_coefficients(f).dim != 1:
            continue
        rep = ds_kernel(f)
        if rep.k != 1 or rep.is_direct_sum:
            return False, f"non-direct-sum {format_form(f)} gave k={rep.k}"
    return True, "Fermat k=3, 10 two-block sums k=2, 10 non-direct sums k=1"


def ac8_equivariance(rng: random.Random) -> tuple[bool, str]:
    count = 0
    for n, d in [(2, 3), (3, 2)]:
        for _ in range(20):
            f = random_smooth_form(rng, n, d + 1)
            g = random_unimodular(rng, n)
            lhs = associated_form(apply_linear_change(f, g))
            rhs = apply_linear_change(associated_form(f), g.contragredient())
            if not projectively_equal(lhs, rhs):
                return False, f"equivariance fails for {format_form(f)}"
            count += 1
    return True, f"{count} random unimodular changes"


def ac9_generic_smoothness(rng: random.Random) -> tuple[bool, str]:
    smooth = 0
    failures = []
    for _ in range(100):
        f = random_smooth_form(rng, 2, 4)
        A = associated_form(f)
        ok = is_smooth(A.with_ring(S))
        p, q = A.with_ring(S).gradient()
        if ok != gcd_is_constant_binary(p, q):
            return False, f"smoothness test disagrees with the resultant on A({format_form(f)})"
        if ok:
            smooth += 1
        else:
            failures.append(f"{format_form(f)} -> {format_form(A)} (resultant of the partials is 0)")
    detail = f"{smooth}/100 smooth associated forms"
    if failures:
        detail += "; singular: " + "; ".join(failures)
    return smooth >= 95, detail


def ac10_torus(rng: random.Random) -> tuple[bool, str]:
    unstable = 0
    for _ in range(100):
        n = rng.choice([2, 3])
        m = rng.randint(1, 5)
        f = sparse_form(rng, n, m) if rng.random() < 0.8 else random_form(rng, n, m)
        lp = torus_semistable(f)
        bf = brute_force_destabilizer(f) is None
        if lp != bf:
            return False, f"LP={lp}, brute force={bf} on {format_form(f)}"
        unstable += not lp
    for n, m in [(2, 4), (3, 3), (3, 5)]:
        if not torus_semistable(fermat(n, m)):
            return False, f"Fermat ({n},{m}) reported unstable"
        if torus_semistable(HomogeneousForm.variable(S, n, 0) ** m):
            return False, f"x1^{m} reported semistable"
    return True, f"100 forms agree ({unstable} unstable)"


def _handcrafted_limits() -> list[tuple[HomogeneousForm, OneParamSubgroup, HomogeneousForm | None]]:
    P = lambda s, n=2: parse_form(s, n)
    L = OneParamSubgroup
    return [
        (P("x1^2*x2^2 + x1^3*x2"), L([1, -1]), P("x1^2*x2^2")),
        (P("x1^3*x2"), L([-1, 1]), None),
        (P("x1^4 + x2^4"), L([1, -1]), None),
        (P("x1^3*x2"), L([1, -1]), HomogeneousForm.zero(S, 2, 4)),
        (P("x1*x2*x3 + x1^2*x3 + x2^3", 3), L([1, 0, -1]), P("x2^3 + x1*x2*x3", 3)),
        (P("x1^3 + x1^2*x3", 3), L([2, -1, -1]), HomogeneousForm.zero(S, 3, 3)),
        (P("x1*x3^2 + x2^3", 3), L([2, -1, -1]), None),
        (P("x1*x2*x3 + x1^3", 3), L([0, 0, 0]), P("x1*x2*x3 + x1^3", 3)),
    ]


def ac11_limits(rng: random.Random) -> tuple[bool, str]:
    for _ in range(50):
        n = rng.choice([2, 3])
        m = rng.randint(1, 4)
        U = GradedSubspace.zero(S, n, m)
        while U.dim == 0:
            U = random_subspace(rng, rng.choice([S, D]), n, m, dim=rng.randint(1, piece_dim(n, m)))
        lam = random_lambda(rng, n)
        V = limit_subspace(U, lam)
        if V.dim != U.dim or limit_subspace(V, lam) != V:
            return False, f"limit_subspace failed for n={n}, m={m}, lambda={lam.weights}"
        if lam.trivial and V != U:
            return False, "trivial subgroup moved the subspace"
    for f, lam, expected in _handcrafted_limits():
        if lambda_limit(f, lam) != expected:
            return False, f"lambda_limit({format_form(f)}, {lam.weights})"
    return True, f"50 random subspaces, {len(_handcrafted_limits())} handcrafted limits"


def example_corpus() -> list[tuple[str, int]]:
    texts = [
        ("x1^2*x2 - 1/2*x3^3", 3), ("2*x1*x2", 2), ("x1^4 + x2^4", 2), ("z1^2*z2^2", 2),
        ("x1^3", 2), ("x1^2*x2", 2), ("3", 2), ("-z1^3 + 1/3*z2^3", 2), ("x1*x2*x3", 3),
        ("x1^3*x2 + x1^2*x2^2", 2), ("z1^4 + z2^4", 2), ("x1^4 + x1*x2^3", 2), ("0", 2),
    ]
    for n, d in [(2, 3), (2, 4), (3, 2), (3, 3)]:
        texts.append((format_form(nodal(n, d)), n))
    for n, m in [(2, 4), (3, 3), (4, 3)]:
        texts.append((format_form(fermat(n, m)), n))
    rng = random.Random(0)
    for _ in range(20):
        n = rng.choice([2, 3, 4])
        texts.append((format_form(random_form(rng, n, rng.randint(1, 5), rational_coeffs=True, density=0.5)), n))
    return texts


def ac12_cli(rng: random.Random) -> tuple[bool, str]:
    from .cli import run

    corpus = example_corpus()
    for text, n in corpus:
        f = parse_form(text, n)
        if format_form(f) != text or parse_form(format_form(f), n) != f:
            return False, f"round-trip fails on {text!r}"
    commands = [
        ["assoc", "--n", "2", "x1^4+x2^4"],
        ["assoc", "--n", "2", "--output", "json", "x1^4+x2^4"],
        ["agr", "--n", "3", "--gradient", format_form(nodal(3, 2))],
        ["hilb", "--n", "2", "--tmax", "5", "x1^3", "x2^3"],
        ["ds-detect", "--n", "3", "--output", "json", format_form(fermat(3, 4))],
        ["stab", "--n", "2", "x1^3*x2"],
        ["assoc", "--n", "2", "x1^4"],
    ]
    for argv in commands:
        first = run(argv)
        second = run(argv)
        if first != second:
            return False, f"non-deterministic output for {argv}"
    return True, f"{len(corpus)} corpus forms round-trip, {len(commands)} commands byte-identical"


ACCEPTANCE: list[tuple[str, str, Check]] = [
    ("AC1", "Fermat associated forms", ac1_fermat),
    ("AC2", "evaluation identity", ac2_evaluation),
    ("AC3", "gradient-Hilbert duality", ac3_gradient_hilbert),
    ("AC4", "perp involution and dimension law", ac4_perp),
    ("AC5", "nodal pipeline", ac5_nodal),
    ("AC6", "multiplicity equivalence", ac6_multiplicity),
    ("AC7", "direct-sum detection", ac7_direct_sums),
    ("AC8", "SL(n)-equivariance", ac8_equivariance),
    ("AC9", "generic smoothness", ac9_generic_smoothness),
    ("AC10", "torus semistability", ac10_torus),
    ("AC11", "lambda-limit machinery", ac11_limits),
    ("AC12", "CLI determinism and round-trip", ac12_cli),
]


# --- property suite (lighter draws of the module invariants) ----------------------------


def pr_pairing_diagonal(rng: random.Random) -> tuple[bool, str]:
    for n, m in [(2, 3), (3, 2), (3, 3)]:
        for a in monomials(n, m):
            for b in monomials(n, m):
                val = pairing(HomogeneousForm.monomial(S, a), HomogeneousForm.monomial(D, b))
                want = Fraction(1)
                for e in a:
                    want *= factorial(e)
                if val != (want if a == b else 0):
                    return False, f"pairing x^{a} o z^{b} = {val}"
    return True, "all monomial pairs for three pieces"


def pr_claim_explicit(rng: random.Random) -> tuple[bool, str]:
    for _ in range(30):
        n, m = rng.choice([(2, 3), (2, 4), (3, 2), (3, 3)])
        omega = random_functional(rng, n, m)
        Dw = inverse_system_from_functional(omega)
        f = random_form(rng, n, m, rational_coeffs=True)
        if polar_apply(f, Dw).coefficient((0,) * n) != omega(f):
            return False, "f o D_omega != omega(f)"
        g = random_form(rng, n, m, ring=D, rational_coeffs=True)
        back = Functional.of_form(g)
        if inverse_system_from_functional(back) != g or back.kernel() != perp(span([g])):
            return False, "functional of g does not reconstruct g"
    return True, "30 random functionals both directions"


def pr_vanishing(rng: random.Random) -> tuple[bool, str]:
    for _ in range(30):
        n, m = rng.choice([(2, 3), (3, 2), (3, 3)])
        W = random_subspace(rng, D, n, m, dim=rng.randint(1, 3))
        a = random_point(rng, n) if rng.random() < 0.5 else [int(i == 0) for i in range(n)]
        vanishing_criterion(W, a)
    return True, "30 random subspaces agree with direct evaluation"


def pr_gorenstein_symmetry(rng: random.Random) -> tuple[bool, str]:
    for n, d in [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3)]:
        for _ in range(2):
            gens = random_regular_sequence(rng, n, d)
            nu = n * (d - 1)
            h = GradedIdeal(gens).hilbert_function(nu + 1)
            if h[nu] != 1 or h[nu + 1] != 0 or any(h[t] != h[nu - t] for t in range(nu + 1)):
                return False, f"Hilbert function {h} not symmetric"
    return True, "10 regular sequences"


def pr_macaulay_duality(rng: random.Random) -> tuple[bool, str]:
    for n, m in [(2, 4), (3, 3)]:
        for _ in range(3):
            f = random_smooth_form(rng, n, m)
            A = associated_form(f)
            nu = A.degree
            ideal = GradedIdeal(f.gradient())
            for t in range(nu + 1):
                if perp(gradient_point(A, nu - t)) != ideal.piece(t).piece:
                    return False, f"apolar ideal differs from Jacobian ideal in degree {t}"
    return True, "6 smooth forms"


def pr_span_invariance(rng: random.Random) -> tuple[bool, str]:
    for n, d in [(2, 3), (3, 2)]:
        for _ in range(3):
            gens = random_regular_sequence(rng, n, d)
            mix = random_invertible(rng, n).matrix
            other = []
            for row in mix:
                h = HomogeneousForm.zero(S, n, d)
                for c, g in zip(row, gens):
                    h = h + g.scale(c)
                other.append(h)
            if associated_form_sequence(gens) != associated_form_sequence(other):
                return False, "associated form depends on the basis"
    return True, "6 changes of basis"


def pr_direct_sum_product(rng: random.Random) -> tuple[bool, str]:
    for _ in range(3):
        f1 = random_smooth_form(rng, 2, 4)
        f2 = random_smooth_form(rng, 2, 4)
        f = f1.embed(4, [0, 1]) + f2.embed(4, [2, 3])
        prod_ = associated_form(f1).embed(4, [0, 1]) * associated_form(f2).embed(4, [2, 3])
        if not projectively_equal(associated_form(f), prod_):
            return False, "A(f1 + f2) != A(f1) A(f2)"
    return True, "3 two-block quaternary quartics"


def pr_weights(rng: random.Random) -> tuple[bool, str]:
    for _ in range(30):
        n = rng.choice([2, 3])
        f = sparse_form(rng, n, rng.randint(1, 3))
        g = sparse_form(rng, n, rng.randint(1, 3))
        lam = random_lambda(rng, n)
        wf, inf = weight_and_init(f, lam)
        wg, ing = weight_and_init(g, lam)
        wfg, infg = weight_and_init(f * g, lam)
        if wfg != wf + wg or infg != inf * ing:
            return False, "weights are not multiplicative"
        lim = lambda_limit(f, lam)
        if lim is not None and not lim.is_zero() and lambda_limit(lim, lam) != lim:
            return False, "lambda_limit is not idempotent"
    return True, "30 random pairs"


def pr_singular_nodal(rng: random.Random) -> tuple[bool, str]:
    for n, d in [(2, 3), (2, 4), (3, 2), (3, 3)]:
        f = nodal(n, d)
        for i in range(n):
            p = ProjectivePoint.coordinate(n, i)
            if multiplicity_at(f, p) != 2 or not is_ordinary_double_point(f, p):
                return False, f"nodal({n},{d}) at e{i + 1}"
        if is_smooth(f) or not torus_semistable(f):
            return False, f"nodal({n},{d}) smooth/semistability"
        cert = verify_zk_membership(span(f.gradient()), [ProjectivePoint.coordinate(n, i) for i in range(n)])
        if not cert.ok:
            return False, f"nodal({n},{d}) Z_n certificate {cert.checks}"
        if cert.status == "EXACT" and not in_w_nd(span(f.gradient())):
            return False, "exact Z_k certificate outside W_(n,d)"
    return True, "4 nodal forms"


def pr_smooth_binary(rng: random.Random) -> tuple[bool, str]:
    for _ in range(30):
        f = random_form(rng, 2, rng.randint(2, 5), density=0.6, bound=2)
        fx, fy = f.gradient()
        if is_smooth(f) != gcd_is_constant_binary(fx, fy):
            return False, f"smoothness disagrees with the resultant on {format_form(f)}"
    return True, "30 binary forms"


def pr_ds_certificate(rng: random.Random) -> tuple[bool, str]:
    for _ in range(20):
        n = rng.choice([2, 3])
        f = random_smooth_form(rng, n, rng.choice([3, 4]))
        if rng.random() < 0.5:
            f = fermat(n, f.degree)
        lam = random_lambda(rng, n, allow_trivial=False)
        split = one_ps_ds_certificate(f, lam)
        if split is not None and not split_is_valid(f, *split):
            return False, "certificate split mixes groups"
    return True, "20 forms"


PROPERTIES: list[tuple[str, str, Check]] = [
    ("P1", "pairing diagonality", pr_pairing_diagonal),
    ("P2", "perp involution", ac4_perp),
    ("P3", "explicit inverse system both directions", pr_claim_explicit),
    ("P4", "vanishing criterion", pr_vanishing),
    ("P5", "Gorenstein symmetry", pr_gorenstein_symmetry),
    ("P6", "Macaulay duality with the Jacobian ideal", pr_macaulay_duality),
    ("P7", "span invariance", pr_span_invariance),
    ("P8", "direct-sum factorization", pr_direct_sum_product),
    ("P9", "weight multiplicativity and limit idempotence", pr_weights),
    ("P10", "nodal certification", pr_singular_nodal),
    ("P11", "binary smoothness vs resultant", pr_smooth_binary),
    ("P12", "1-PS direct-sum certificate", pr_ds_certificate),
]

SUITES = {"acceptance": ACCEPTANCE, "properties": PROPERTIES}


def run_check(key: str, title: str, fn: Check, seed: int) -> CheckResult:
    rng = random.Random(f"{seed}:{key}")
    start = time.perf_counter()
    try:
        passed, detail = fn(rng)
    except Exception as exc:  # a crash is a failed criterion, not a crashed suite
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(key, title, passed, detail, time.perf_counter() - start)


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(name)
    return [run_check(key, title, fn, seed) for key, title, fn in SUITES[name]]
