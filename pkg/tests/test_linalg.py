from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from assocform import linalg

from strategies import rationals

matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=1, max_size=5)
)


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])


@given(matrices)
def test_rref_matches_sympy(rows):
    ncols = len(rows[0])
    red, pivots = linalg.rref(rows, ncols)
    ref, ref_piv = to_sympy(rows).rref()
    assert pivots == tuple(ref_piv)
    assert [[Fraction(int(x.p), int(x.q)) for x in ref.row(i)] for i in range(len(pivots))] == [list(r) for r in red]
    assert linalg.rank(rows, ncols) == len(pivots)


@given(matrices)
def test_nullspace(rows):
    ncols = len(rows[0])
    null = linalg.nullspace(rows, ncols)
    assert len(null) == ncols - linalg.rank(rows, ncols)
    for v in null:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices)
def test_modular_rank_is_a_lower_bound(rows):
    ncols = len(rows[0])
    rk = linalg.rank_mod_p(rows, ncols)
    assert rk <= linalg.rank(rows, ncols)
    assert linalg.rank_mod_p([[Fraction(3)]], 1, p=3) == 0
    assert linalg.rank_mod_p([[Fraction(1, 3)]], 1, p=3) is None


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_and_inverse(rows):
    det = linalg.determinant(rows)
    ref = to_sympy(rows).det()
    assert det == Fraction(int(ref.p), int(ref.q))
    if det:
        inv = linalg.inverse(rows)
        n = len(rows)
        assert linalg.matmul(rows, inv) == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
