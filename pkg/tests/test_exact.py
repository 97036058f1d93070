from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from crkit.exact import (
    DimensionError,
    ExactMatrix,
    I,
    NotHermitianError,
    ONE,
    Scalar,
    Subspace,
    ZERO,
    hermitian_inertia,
    intersect,
    kernel,
    member,
    rref,
    subspace_sum,
)
from crkit.exact import poly
from crkit.exact.subspace import inverse

from conftest import gauss, gauss_rational, matrices, square


def M(rows):
    return ExactMatrix.from_rows(rows)


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.re) + sympy.I * sympy.Rational(x.im) for x in m.entries])


def from_sympy(s):
    return ExactMatrix(s.rows, s.cols, [Scalar(Fraction(str(sympy.re(x))), Fraction(str(sympy.im(x)))) for x in s])


def e(n, *idx):
    return {i: ONE for i in idx}


# --- scalars -------------------------------------------------------------------------------

def test_scalar_canonical_form():
    a = Scalar(Fraction(2, 4), Fraction(-6, 8))
    assert a.triple == (2, -3, 4)
    assert a == Scalar.parse("1/2-3/4*i")
    assert hash(a) == hash(Scalar.parse("2/4-6/8*i"))


@pytest.mark.parametrize("text,re_,im_", [
    ("3", 3, 0), ("-i", 0, -1), ("1/2*i", 0, Fraction(1, 2)), ("1/2+3/4*i", Fraction(1, 2), Fraction(3, 4)),
    ("-2-i", -2, -1), ("0+0*i", 0, 0),
])
def test_scalar_parse(text, re_, im_):
    s = Scalar.parse(text)
    assert (s.re, s.im) == (re_, im_)


@pytest.mark.parametrize("bad", ["", "x", "1+", "1//2", "i*"])
def test_scalar_parse_rejects(bad):
    with pytest.raises(ValueError):
        Scalar.parse(bad)


@given(gauss_rational)
def test_scalar_string_round_trip(s):
    assert Scalar.parse(str(s)) == s


@given(gauss_rational, gauss_rational, gauss_rational)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a
    assert (a * a.conjugate()).im == 0


def test_scalar_zero_division():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


# --- matrices --------------------------------------------------------------------------------

def test_matrix_json_round_trip():
    m = M([[1, I], [Scalar(Fraction(1, 2), -1), 0]])
    assert m.to_json() == [["1+0*i", "0+1*i"], ["1/2-1*i", "0+0*i"]]
    assert ExactMatrix.from_json(m.to_json()) == m


def test_matrix_shape_errors():
    with pytest.raises(DimensionError):
        M([[1, 2]]) @ M([[1, 2]])
    with pytest.raises(DimensionError):
        M([[1, 2], [3]])


@given(square(n=3), square(n=3), square(n=3))
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert (a @ b).dagger() == b.dagger() @ a.dagger()


# --- rref / kernel / subspaces ---------------------------------------------------------------

def test_rref_examples():
    assert rref(ExactMatrix.identity(3)) == ExactMatrix.identity(3)
    assert rref(M([[2, 4], [1, 2]])) == M([[1, 2], [0, 0]])
    assert rref(M([[0, I], [1, 0]])) == ExactMatrix.identity(2)


@given(matrices())
def test_rref_matches_sympy(m):
    ours = rref(m)
    theirs = from_sympy(to_sympy(m).rref()[0])
    assert ours == theirs
    assert rref(ours) == ours


def test_kernel_examples():
    assert kernel(ExactMatrix.zeros(2)).dim == 2
    assert kernel(ExactMatrix.identity(3)).dim == 0
    k = kernel(M([[1, 1]]))
    assert k == Subspace(2, [[1, -1]])


@given(matrices())
def test_kernel_dimension_and_annihilation(m):
    k = kernel(m)
    assert k.dim == m.cols - to_sympy(m).rank()
    for v in k.basis():
        col = ExactMatrix(m.cols, 1, [v.get(i, ZERO) for i in range(m.cols)])
        assert (m @ col).is_zero()


def test_intersection_examples():
    e1, e2, e3 = {0: ONE}, {1: ONE}, {2: ONE}
    assert intersect(Subspace(3, [e1]), Subspace(3, [e2])).dim == 0
    v = Subspace(3, [e1, e2])
    assert intersect(v, v) == v
    assert intersect(v, Subspace(3, [e2, e3])) == Subspace(3, [e2])
    with pytest.raises(DimensionError):
        intersect(v, Subspace(2, [e1]))


def test_sum_and_member_examples():
    e1, e2, e3 = {0: ONE}, {1: ONE}, {2: ONE}
    assert subspace_sum(Subspace(3, [e1]), Subspace(3, [e2])) == Subspace(3, [e1, e2])
    assert member({0: ONE, 1: ONE}, Subspace(3, [e1, e2]))
    assert not member(e3, Subspace(3, [e1, e2]))


subspaces = st.builds(lambda m: Subspace(m.cols, [m.row(i) for i in range(m.rows)]), matrices(cols=4))


@given(subspaces, subspaces)
def test_modular_dimension_law(a, b):
    assert (a + b).dim + (a & b).dim == a.dim + b.dim
    assert (a & b) <= a and (a & b) <= b


@given(matrices(cols=4), st.randoms(use_true_random=False))
def test_canonical_form_is_basis_independent(m, rnd):
    rows = [m.row(i) for i in range(m.rows)]
    a = Subspace(4, rows)
    # recombine the rows by a random invertible (unitriangular) transform
    mixed = []
    for i, r in enumerate(rows):
        acc = list(r)
        for j in range(i + 1, len(rows)):
            c = Scalar(rnd.randint(-2, 2), rnd.randint(-2, 2))
            acc = [x + c * y for x, y in zip(acc, rows[j])]
        mixed.append(acc)
    rnd.shuffle(mixed)
    b = Subspace(4, mixed)
    assert a == b and hash(a) == hash(b)


@given(subspaces, st.lists(gauss, min_size=4, max_size=4))
def test_residual_is_linear_and_detects_membership(s, v):
    vec = {i: x for i, x in enumerate(v) if x}
    r = s.residual(vec)
    assert s.contains({k: vec.get(k, ZERO) - r.get(k, ZERO) for k in range(4)})
    assert (not r) == s.contains(vec)


@given(square(entries=gauss_rational))
def test_inverse(m):
    if to_sympy(m).det() == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(m)
    else:
        assert inverse(m) @ m == ExactMatrix.identity(m.rows)


# --- inertia -----------------------------------------------------------------------------------

def test_inertia_examples():
    assert hermitian_inertia(ExactMatrix.diag([1, -1])) == (1, 1, 0)
    assert hermitian_inertia(ExactMatrix.zeros(3)) == (0, 0, 3)
    assert hermitian_inertia(M([[0, 1], [1, 0]])) == (1, 1, 0)
    assert hermitian_inertia(M([[0, I], [-I, 0]])) == (1, 1, 0)
    with pytest.raises(NotHermitianError):
        hermitian_inertia(M([[0, 1], [0, 0]]))


@given(square(max_dim=4))
def test_inertia_matches_numeric_eigenvalues(a):
    import numpy as np

    h = a + a.dagger()
    plus, minus, zero = hermitian_inertia(h)
    ev = np.linalg.eigvalsh(np.array([[complex(h[i, j]) for j in range(h.cols)] for i in range(h.rows)]))
    rank = to_sympy(h).rank()
    assert plus + minus == rank
    # eigenvalues of small integer matrices are well separated from 0 unless exactly 0
    assert plus == sum(1 for x in ev if x > 1e-9)
    assert minus == sum(1 for x in ev if x < -1e-9)


# --- polynomials --------------------------------------------------------------------------------

@given(square(max_dim=4))
def test_charpoly_matches_sympy(m):
    t = sympy.Symbol("t")
    theirs = sympy.Poly(to_sympy(m).charpoly(t).as_expr(), t).all_coeffs()[::-1]
    ours = poly.charpoly(m)
    assert len(ours) == len(theirs)
    for a, b in zip(ours, theirs):
        assert complex(a) == pytest.approx(complex(sympy.N(b)))
    # Cayley-Hamilton, exactly
    assert poly.evaluate_matrix(ours, m).is_zero()


@given(square(max_dim=4))
def test_minpoly_divides_charpoly(m):
    mp = poly.minpoly(m)
    assert poly.evaluate_matrix(mp, m).is_zero()
    assert not poly.divmod_(poly.charpoly(m), mp)[1]
