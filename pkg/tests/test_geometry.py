import pytest
import sympy

from assocform.artinian import GradedIdeal, apolar_ideal_generators, in_w_nd
from assocform.errors import PreconditionError, StructuralError
from assocform.geometry import (
    ProjectivePoint,
    VeroneseCheck,
    binary_gcd,
    fermat,
    general_linear_position,
    hessian_at,
    is_ordinary_double_point,
    is_smooth,
    make_example,
    multiplicity_at,
    nodal,
    partial_fermat,
    veronese_multiplicity_check,
    verify_zk_membership,
)
from assocform.git_stability import torus_semistable
from assocform import linalg
from assocform.poly_core import format_form, span
from assocform.sampling import random_form, random_point, random_regular_sequence
from assocform.suites import gcd_is_constant_binary

from conftest import P

E = ProjectivePoint.coordinate


def test_projective_point():
    p = ProjectivePoint([0, 2, -4])
    assert p.coords == (0, 1, -2)
    assert ProjectivePoint.parse("0,2,-4") == p
    assert ProjectivePoint.from_json('["0", "1", "-2"]') == p
    with pytest.raises(PreconditionError):
        ProjectivePoint([0, 0])
    with pytest.raises(StructuralError):
        ProjectivePoint.parse("1,x")


def test_multiplicity_examples():
    assert multiplicity_at(P("x1^4 + x2^4"), E(2, 0)) == 0
    assert multiplicity_at(P("x1^2*x2"), E(2, 1)) == 2
    assert multiplicity_at(nodal(2, 3), E(2, 0)) == 2
    assert multiplicity_at(P("x1^2*x2"), [1, 0]) == 1


def test_veronese_example():
    res = veronese_multiplicity_check([P("x1^3"), P("x2^3")], 4, E(2, 0), 1, cross_check=True)
    assert (res.power_in_ideal, res.lower_power_in_ideal) == (True, False)
    assert res.exact_multiplicity
    assert multiplicity_at(P("z1^2*z2^2"), E(2, 0)) == 2


def test_veronese_smooth_inverse_system(rng):
    # smooth inverse system: at a generic point the pattern is (False, False) for l >= 1
    F = P("z1^4 + z2^4")
    ideal = GradedIdeal(apolar_ideal_generators(F))
    p = random_point(rng, 2)
    assert multiplicity_at(F, p) == 0
    assert veronese_multiplicity_check(ideal, 4, p, 1, cross_check=True) == VeroneseCheck(False, False)


def test_veronese_preconditions():
    with pytest.raises(PreconditionError):
        veronese_multiplicity_check([P("x1^3"), P("x2^3")], 4, E(2, 0), 4)
    with pytest.raises(PreconditionError):
        veronese_multiplicity_check([P("x1^3"), P("x2^3")], 3, E(2, 0), 1)


def test_veronese_equivalence_random(rng):
    for n, d in [(2, 3), (2, 4), (3, 2)]:
        for _ in range(3):
            gens = random_regular_sequence(rng, n, d)
            ideal = GradedIdeal(gens)
            nu = n * (d - 1)
            F = ideal.inverse_system(nu)
            pts = [E(n, i) for i in range(n)] + [ProjectivePoint(random_point(rng, n)) for _ in range(5)]
            for p in pts:
                mult = multiplicity_at(F, p)
                for ell in range(nu):
                    res = veronese_multiplicity_check(ideal, nu, p, ell, cross_check=True)
                    assert res.power_in_ideal == (mult >= ell + 1)
                    assert res.exact_multiplicity == (mult == ell + 1)


def test_ordinary_double_point_examples():
    assert is_ordinary_double_point(nodal(2, 3), E(2, 0))
    assert not is_ordinary_double_point(P("x1^3"), E(2, 1))
    assert not is_ordinary_double_point(P("x1^2*x2"), [1, 0])


def test_general_linear_position_examples():
    assert general_linear_position([E(3, 0), E(3, 1), E(3, 2)])
    assert general_linear_position([E(3, 0), E(3, 2)])
    collinear = [ProjectivePoint(p) for p in ([1, 0, 0], [0, 1, 0], [1, 1, 0])]
    assert not general_linear_position(collinear)
    assert not general_linear_position([E(2, 0), E(2, 1), ProjectivePoint([1, 1])])
    with pytest.raises(StructuralError):
        general_linear_position([E(2, 0), ProjectivePoint([3, 0])])


def test_zk_examples():
    cert = verify_zk_membership(span(nodal(2, 3).gradient()), [E(2, 0), E(2, 1)])
    assert cert.ok and cert.status == "EXACT"
    cert = verify_zk_membership(span(fermat(2, 4).gradient()), [E(2, 0)])
    assert not cert.ok
    cert = verify_zk_membership(span(nodal(3, 2).gradient()), [E(3, i) for i in range(3)])
    assert cert.ok and cert.status == "HEURISTIC"
    assert cert.to_json()["checks"][0] == {"name": "vanishing", "passed": True}


def test_zk_exact_implies_wnd():
    for d in (3, 4, 5):
        U = span(nodal(2, d).gradient())
        cert = verify_zk_membership(U, [E(2, 0), E(2, 1)])
        assert cert.ok and cert.status == "EXACT" and in_w_nd(U)
    # wrong point list: the base locus is {e1, e2}
    assert not verify_zk_membership(span(nodal(2, 3).gradient()), [E(2, 0)]).ok


@pytest.mark.parametrize("n,d", [(2, 3), (2, 4), (3, 2), (3, 3)])
def test_nodal_certification(n, d):
    f = nodal(n, d)
    for i in range(n):
        assert multiplicity_at(f, E(n, i)) == 2
        assert linalg.rank(hessian_at(f, E(n, i)), n) == n - 1
    assert not is_smooth(f)
    assert torus_semistable(f)


def test_smooth_examples():
    assert is_smooth(fermat(3, 3))
    assert not is_smooth(P("x1^4"))


def test_smooth_binary_against_sympy(rng):
    x, y = sympy.symbols("x y")
    for _ in range(100):
        f = random_form(rng, 2, rng.randint(2, 6), density=0.6, bound=3)
        expr = sympy.sympify(format_form(f).replace("^", "**").replace("x1", "x").replace("x2", "y"))
        fx, fy = sympy.diff(expr, x), sympy.diff(expr, y)
        g = sympy.gcd(sympy.Poly(fx, x, y), sympy.Poly(fy, x, y)) if fx != 0 and fy != 0 else None
        expected = g is not None and g.total_degree() == 0
        assert is_smooth(f) == expected
        p, q = f.gradient()
        assert gcd_is_constant_binary(p, q) == expected


def test_binary_gcd():
    g = binary_gcd(P("x1^2*x2 - x2^3"), P("x1^3 - x1*x2^2"))
    assert g == P("x1^2 - x2^2")
    assert binary_gcd(P("x1^3"), P("x2^3")).degree == 0


def test_examples():
    assert make_example("fermat", 2, m=4) == P("x1^4 + x2^4")
    x, y = P("x1"), P("x2")
    expected = 2 * (x + y) ** 4 - 4 * ((x + y) ** 2 * (x**2 + y**2)) + 2 * (x**4 + y**4)
    assert nodal(2, 3) == expected == P("4*x1^2*x2^2")
    g = P("x2^3*x3 + x2*x3^3", 3)
    assert partial_fermat(1, g) == P("x1^4", 3) + g
    with pytest.raises(PreconditionError):
        nodal(2, 2)
    with pytest.raises(PreconditionError):
        partial_fermat(2, g)
