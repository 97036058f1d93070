import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from crkit.exact import ExactMatrix, I, ONE, Scalar, Subspace, ZERO, linear_relations
from crkit.exact import poly
from crkit.exact.matrix import DimensionError
from crkit.liealg import (
    JCPair,
    LieSubalgebra,
    NotClosedError,
    NotSubalgebraError,
    bracket,
    close_under_bracket,
    is_killing_negative_semidefinite,
    is_nilpotent_matrix,
    jordan_chevalley,
    killing_form,
    nilradical,
    normalizer_of_subspace,
    radical,
    sl,
    splittable_decomposition,
)

from conftest import gauss, square

E = ExactMatrix.unit(2, 0, 1)
F = ExactMatrix.unit(2, 1, 0)
H = ExactMatrix.diag([1, -1])


def alg(n, mats):
    return LieSubalgebra.from_matrices(n, mats)


def random_matrix(rng, n, lo=-2, hi=2):
    return ExactMatrix(n, n, [Scalar(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(n * n)])


# --- bracket / closure ------------------------------------------------------------------------

def test_bracket_examples():
    assert bracket(E, F) == H
    assert bracket(H, H).is_zero()
    assert bracket(H, E) == E.scale(2)
    with pytest.raises(DimensionError):
        bracket(E, ExactMatrix.identity(3))


def test_jacobi_identity_on_random_triples():
    rng = random.Random(7)
    for _ in range(1000):
        x, y, z = (random_matrix(rng, 3) for _ in range(3))
        total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert total.is_zero()


def test_close_under_bracket_examples():
    assert close_under_bracket([E], 2).dim == 1
    g = close_under_bracket([E, F], 2)
    assert g.dim == 3 and g.space == sl(2).space and g.verified_closed
    assert close_under_bracket([H], 2).dim == 1


@given(st.lists(square(n=3), min_size=1, max_size=2))
def test_closure_monotone_and_idempotent(seed):
    g = close_under_bracket(seed, 3)
    assert all(g.contains(x) for x in seed)
    assert close_under_bracket(g.space, 3).space == g.space
    bigger = close_under_bracket(list(seed) + [ExactMatrix.unit(3, 0, 2)], 3)
    assert g.space <= bigger.space


def test_from_matrices_rejects_non_closed():
    with pytest.raises(NotSubalgebraError):
        alg(2, [E, F])


def test_json_round_trip():
    b = alg(2, [H, E])
    assert LieSubalgebra.from_json(b.to_json()).space == b.space


# --- Killing form ------------------------------------------------------------------------------

def test_killing_examples():
    assert killing_form(alg(3, [ExactMatrix.diag([1, -1, 0]), ExactMatrix.diag([0, 1, -1])])).is_zero()
    g = alg(2, [H, E, F])
    k = killing_form(g)
    idx = {name: g.coordinates(m).index(ONE) for name, m in (("H", H), ("E", E), ("F", F))}
    assert k[idx["H"], idx["H"]] == 8
    assert k[idx["E"], idx["F"]] == 4
    assert k[idx["E"], idx["E"]] == 0 and k[idx["F"], idx["F"]] == 0


def test_killing_requires_closed():
    with pytest.raises(NotClosedError):
        killing_form(LieSubalgebra(2, Subspace(4, [E.to_sparse()]), False))


SU2 = [ExactMatrix.diag([I, -I]), ExactMatrix.from_rows([[0, 1], [-1, 0]]), ExactMatrix.from_rows([[0, I], [I, 0]])]


def test_killing_definiteness_examples():
    assert is_killing_negative_semidefinite(sl(2), SU2)
    assert not is_killing_negative_semidefinite(sl(2), [H, E, F])
    assert is_killing_negative_semidefinite(alg(2, [H]))


def test_killing_su2_is_negative_definite():
    from crkit.exact import hermitian_inertia

    g = sl(2)
    k = killing_form(g)
    coords = [g.coordinates(x) for x in SU2]
    gram = [[sum((a * k[i, j] * b for i, a in enumerate(ca) for j, b in enumerate(cb)), ZERO) for cb in coords] for ca in coords]
    assert hermitian_inertia(ExactMatrix.from_rows(gram)) == (0, 3, 0)


@pytest.mark.parametrize("g", [sl(2), sl(3), alg(3, [ExactMatrix.diag([1, -1, 0]), ExactMatrix.unit(3, 0, 1), ExactMatrix.unit(3, 0, 2)])],
                         ids=["sl2", "sl3", "solvable"])
def test_killing_invariance(g):
    k = killing_form(g)
    b = g.basis_matrices()
    d = g.dim

    def B(x, y):
        cx, cy = g.coordinates(x), g.coordinates(y)
        return sum((cx[i] * k[i, j] * cy[j] for i in range(d) for j in range(d) if cx[i] and cy[j]), ZERO)

    for z in b:
        for x in b:
            for y in b:
                assert B(bracket(z, x), y) + B(x, bracket(z, y)) == 0


# --- radical and nilradical -------------------------------------------------------------------

def killing_radical(g):
    """Independent route: the Killing-orthogonal of [g, g]."""
    k = killing_form(g)
    d = g.dim
    b = g.basis()
    derived = close_under_bracket([bracket(x, y) for x in g.basis_matrices() for y in g.basis_matrices()], g.ambient_n).space
    if derived.dim == 0:
        return g.space
    dc = [g.coordinates(x) for x in derived.basis()]
    images = [{j: sum((k[i, l] * c[l] for l in range(d)), ZERO) for j, c in enumerate(dc)} for i in range(d)]
    rel = linear_relations(images, len(dc))
    return Subspace(g.ambient_n ** 2, [g.space.combine([c.get(t, ZERO) for t in range(d)]) for c in rel.basis()])


Z3 = ExactMatrix.diag([1, 1, -2])
H3 = ExactMatrix.diag([1, -1, 0])
E12, E21, E13, E23 = (ExactMatrix.unit(3, i, j) for i, j in ((0, 1), (1, 0), (0, 2), (1, 2)))

CASES = {
    "borel": (alg(2, [H, E]), 2, 1),
    "sl2": (sl(2), 0, 0),
    "sl2+center": (alg(3, [H3, E12, E21, Z3]), 1, 0),
    "borel+center": (alg(3, [H3, E12, Z3]), 3, 1),
    "heisenberg+torus": (alg(3, [E12, E23, E13, Z3]), 4, 3),
    "parabolic": (alg(3, [H3, E12, E21, Z3, E13, E23]), 3, 2),
    "torus": (alg(3, [H3, Z3]), 2, 0),
    "strict-upper": (alg(3, [E12, E23, E13]), 3, 3),
}


@pytest.mark.parametrize("name", list(CASES))
def test_radical_and_nilradical(name):
    g, rad_dim, nil_dim = CASES[name]
    rad = radical(g)
    nil = nilradical(g)
    assert rad.dim == rad_dim
    assert nil.dim == nil_dim
    assert rad.space == killing_radical(g)
    assert nil.space <= rad.space


def test_nilradical_examples():
    assert nilradical(alg(2, [H, E])).space == Subspace(4, [E.to_sparse()])
    assert nilradical(alg(3, [H3, Z3])).dim == 0
    up = alg(3, [E12, E23, E13])
    assert nilradical(up).space == up.space


@given(st.lists(st.sampled_from([H3, Z3, E12, E13, E23, E21]), min_size=1, max_size=4))
def test_nilradical_properties(seed):
    g = close_under_bracket(seed, 3)
    rad = radical(g)
    nil = nilradical(g)
    for x in nil.basis_matrices():
        assert is_nilpotent_matrix(x)
        for y in g.basis_matrices():
            assert nil.contains(bracket(x, y))
    # every nilpotent matrix of the radical lies in it (probe with basis elements and pair sums)
    rb = rad.basis_matrices()
    probes = rb + [x + y for x in rb for y in rb]
    for x in probes:
        if is_nilpotent_matrix(x):
            assert nil.contains(x)


def test_splittable_examples():
    b = alg(2, [H, E])
    assert splittable_decomposition(b, alg(2, [H]))
    assert splittable_decomposition(sl(2), sl(2))
    assert not splittable_decomposition(b, LieSubalgebra.zero(2))
    with pytest.raises(NotSubalgebraError):
        splittable_decomposition(b, alg(2, [F]))


def test_normalizer_examples():
    g = sl(2)
    assert normalizer_of_subspace(g, Subspace(4, [E.to_sparse()])).space == alg(2, [H, E]).space
    assert normalizer_of_subspace(g, g.space).space == g.space
    assert normalizer_of_subspace(g, Subspace(4)).space == g.space


# --- Jordan-Chevalley -------------------------------------------------------------------------

def test_jc_examples():
    d = ExactMatrix.diag([1, 2, 2])
    assert jordan_chevalley(d) == JCPair(d, ExactMatrix.zeros(3))
    n = ExactMatrix.from_rows([[0, 1, 3], [0, 0, 2], [0, 0, 0]])
    assert jordan_chevalley(n) == JCPair(ExactMatrix.zeros(3), n)
    x = ExactMatrix.from_rows([[1, 1], [0, -1]])
    assert jordan_chevalley(x) == JCPair(x, ExactMatrix.zeros(2))


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.re) + sympy.I * sympy.Rational(x.im) for x in m.entries])


def splits_over_gaussian_rationals(m) -> bool:
    t = sympy.Symbol("t")
    p = sympy.Poly(to_sympy(m).charpoly(t).as_expr(), t, extension=sympy.I)
    _, factors = p.factor_list()
    return all(f.degree() == 1 for f, _ in factors)


def oracle_semisimple(m):
    """X_s from the Jordan form: keep the diagonal of J, conjugate back."""
    p, j = to_sympy(m).jordan_form()
    d = sympy.diag(*[j[i, i] for i in range(j.rows)])
    s = (p * d * p.inv()).applyfunc(sympy.expand)
    return ExactMatrix(m.rows, m.cols, [Scalar(Fraction(str(sympy.re(x))), Fraction(str(sympy.im(x)))) for x in s])


@st.composite
def split_matrices(draw):
    """P (D + N) P^-1 with Gaussian-integer eigenvalues: characteristic polynomial splits by construction."""
    n = draw(st.integers(1, 4))
    ev = [draw(gauss) for _ in range(n)]
    u = ExactMatrix.from_rows([[ONE if i == j else (draw(gauss) if j > i else ZERO) for j in range(n)] for i in range(n)])
    l = ExactMatrix.from_rows([[ONE if i == j else (draw(gauss) if j < i else ZERO) for j in range(n)] for i in range(n)])
    core = [[ev[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        if ev[i] == ev[i + 1] and draw(st.booleans()):
            core[i][i + 1] = ONE
    from crkit.exact.subspace import inverse

    p = u @ l
    return p @ ExactMatrix.from_rows(core) @ inverse(p)


@settings(max_examples=30)
@given(split_matrices())
def test_jc_agrees_with_jordan_form_oracle(x):
    jc = jordan_chevalley(x)
    assert jc.check(x)
    assert jc.semisimple_part == oracle_semisimple(x)


def test_jc_random_matrices():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(1, 4)
        x = random_matrix(rng, n)
        jc = jordan_chevalley(x)
        assert jc.semisimple_part + jc.nilpotent_part == x
        assert bracket(jc.semisimple_part, jc.nilpotent_part).is_zero()
        assert jc.nilpotent_part.power(n).is_zero()
        assert poly.is_squarefree(poly.minpoly(jc.semisimple_part))
