"""Matrix Lie algebras over Q(i): brackets, closure, Killing form, radicals.

A :class:`LieSubalgebra` of gl_N is a :class:`~crkit.exact.Subspace` of
Q(i)^(N*N) (row-major flattening).  Internally elements travel as sparse
dicts ``{i*N + j: Scalar}``.

"Nilpotent" for an element always means nilpotent as a matrix in the
defining representation, so the nilradical computed here is the largest
ideal of ``v`` made of nilpotent matrices.  For an algebra whose centre
acts semisimply this is the ideal the CR theory needs: a diagonal torus has
nilradical {0}, not itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .exact import ExactMatrix, Scalar, Subspace, hermitian_inertia, linear_relations
from .exact import poly
from .exact.matrix import (
    DimensionError,
    sp_bracket,
    sp_identity,
    sp_matmul,
    sp_trace_product,
)
from .exact.scalar import ONE, ZERO
from .exact.subspace import inverse

__all__ = [
    "LieSubalgebra",
    "JCPair",
    "NotSubalgebraError",
    "NotClosedError",
    "InternalCheckError",
    "bracket",
    "close_under_bracket",
    "killing_form",
    "jordan_chevalley",
    "radical",
    "nilradical",
    "splittable_decomposition",
    "normalizer_of_subspace",
    "is_killing_negative_semidefinite",
    "derived_series",
    "lower_central_series",
    "sl",
    "span_of_brackets",
]


class NotSubalgebraError(ValueError):
    """A proposed basis is not closed under the bracket."""


class NotClosedError(ValueError):
    """An operation needs a subalgebra whose closure has been verified."""


class InternalCheckError(AssertionError):
    """A computed object failed its own post-condition; this is a bug, not bad input."""


def _as_matrix_vec(x, n: int) -> dict:
    if isinstance(x, ExactMatrix):
        if (x.rows, x.cols) != (n, n):
            raise DimensionError(f"expected {n}x{n} matrix, got {x.rows}x{x.cols}")
        return x.to_sparse()
    return {k: Scalar.coerce(v) for k, v in x.items() if v}


@dataclass(frozen=True)
class LieSubalgebra:
    ambient_n: int
    space: Subspace
    verified_closed: bool = False

    def __post_init__(self):
        if self.space.ambient_dim != self.ambient_n ** 2:
            raise DimensionError("space must live in Q(i)^(N*N)")

    # --- construction -------------------------------------------------------------
    @classmethod
    def from_matrices(cls, n: int, mats: Iterable, check: bool = True) -> "LieSubalgebra":
        space = Subspace(n * n, [_as_matrix_vec(m, n) for m in mats])
        return cls.checked(n, space) if check else cls(n, space, False)

    @classmethod
    def checked(cls, n: int, space: Subspace) -> "LieSubalgebra":
        """Verify closure and return a flagged subalgebra; raise otherwise."""
        basis = space.basis()
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                if not space.contains(sp_bracket(basis[i], basis[j], n)):
                    raise NotSubalgebraError("not a subalgebra: basis is not closed under the bracket")
        return cls(n, space, True)

    @classmethod
    def zero(cls, n: int) -> "LieSubalgebra":
        return cls(n, Subspace(n * n), True)

    # --- data ---------------------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.space.dim

    def basis(self) -> list[dict]:
        return self.space.basis()

    def basis_matrices(self) -> list[ExactMatrix]:
        return [ExactMatrix.from_sparse(self.ambient_n, b) for b in self.space.basis()]

    def contains(self, x) -> bool:
        return self.space.contains(_as_matrix_vec(x, self.ambient_n))

    __contains__ = contains

    def coordinates(self, x) -> list[Scalar]:
        return self.space.coordinates(_as_matrix_vec(x, self.ambient_n))

    def is_subalgebra_of(self, other: "LieSubalgebra") -> bool:
        return self.ambient_n == other.ambient_n and self.space <= other.space

    @cached_property
    def structure(self) -> list[list[list[Scalar]]]:
        """``structure[i][k]`` = coordinates of [b_i, b_k] in the basis."""
        n = self.ambient_n
        b = self.basis()
        d = len(b)
        out = [[None] * d for _ in range(d)]
        for i in range(d):
            out[i][i] = [ZERO] * d
            for k in range(i + 1, d):
                c = self.space.coordinates(sp_bracket(b[i], b[k], n))
                out[i][k] = c
                out[k][i] = [-x for x in c]
        return out

    def to_json(self) -> dict:
        return {"ambient_n": self.ambient_n, "basis": [m.to_json() for m in self.basis_matrices()]}

    @classmethod
    def from_json(cls, data: dict, check: bool = True) -> "LieSubalgebra":
        n = int(data["ambient_n"])
        mats = [ExactMatrix.from_json(m) for m in data["basis"]]
        return cls.from_matrices(n, mats, check=check)

    def __repr__(self):
        return f"LieSubalgebra(n={self.ambient_n}, dim={self.dim}, closed={self.verified_closed})"


# --- elementary operations ----------------------------------------------------------

def bracket(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    if not (x.is_square() and y.is_square()) or x.rows != y.rows:
        raise DimensionError("bracket needs square matrices of equal size")
    return x @ y - y @ x


def span_of_brackets(a: Sequence[dict], b: Sequence[dict], n: int) -> Subspace:
    out = Subspace(n * n)
    vecs = []
    for x in a:
        for y in b:
            z = sp_bracket(x, y, n)
            if z:
                vecs.append(z)
    return out.extended(vecs)


def close_under_bracket(seed, ambient_n: int) -> LieSubalgebra:
    """Smallest bracket-closed subspace containing ``seed``."""
    n = ambient_n
    if isinstance(seed, Subspace):
        space = seed
    else:
        space = Subspace(n * n, [_as_matrix_vec(m, n) for m in seed])
    basis = space.basis()
    i = 0
    while i < len(basis):
        new = []
        for j in range(i):
            z = sp_bracket(basis[i], basis[j], n)
            if z and not space.contains(z):
                space = space.extended([z])
                new.append(z)
        basis.extend(new)
        i += 1
    return LieSubalgebra(n, space, True)


def _require_closed(g: LieSubalgebra):
    if not g.verified_closed:
        raise NotClosedError("operation requires a verified-closed subalgebra")


def killing_form(g: LieSubalgebra) -> ExactMatrix:
    """Gram matrix of tr(ad X_i ad X_j), ad taken inside ``g``."""
    _require_closed(g)
    d = g.dim
    s = g.structure
    # ad_i[l][k] = s[i][k][l]
    gram = [[ZERO] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            acc = ZERO
            si, sj = s[i], s[j]
            for k in range(d):
                row_i = si[k]
                for l_ in range(d):
                    a = row_i[l_]
                    if a:
                        b = sj[l_][k]
                        if b:
                            acc = acc + a * b
            gram[i][j] = gram[j][i] = acc
    return ExactMatrix.from_rows(gram) if d else ExactMatrix(0, 0, ())


def derived_series(g: LieSubalgebra) -> list[Subspace]:
    n = g.ambient_n
    series = [g.space]
    while series[-1].dim:
        b = series[-1].basis()
        nxt = span_of_brackets(b, b, n)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def lower_central_series(g: LieSubalgebra) -> list[Subspace]:
    n = g.ambient_n
    top = g.basis()
    series = [g.space]
    while series[-1].dim:
        nxt = span_of_brackets(top, series[-1].basis(), n)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_solvable(g: LieSubalgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def is_nilpotent_algebra(g: LieSubalgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def is_ideal(sub: Subspace, g: LieSubalgebra) -> bool:
    n = g.ambient_n
    gb = g.basis()
    return all(sub.contains(sp_bracket(x, y, n)) for x in gb for y in sub.basis())


def _trace_orthogonal(candidates: Sequence[dict], against: Sequence[dict], n: int) -> list[dict]:
    """Combinations X of ``candidates`` with tr(X Y) = 0 for every Y in ``against``."""
    if not candidates:
        return []
    images = [{j: sp_trace_product(x, y, n) for j, y in enumerate(against)} for x in candidates]
    rel = linear_relations(images, len(against))
    out = []
    for coeffs in rel.basis():
        v: dict = {}
        for t, c in coeffs.items():
            for k, x in candidates[t].items():
                w = v.get(k, ZERO) + c * x
                if w:
                    v[k] = w
                else:
                    v.pop(k, None)
        out.append(v)
    return out


def radical(v: LieSubalgebra) -> LieSubalgebra:
    """Maximal solvable ideal: the trace-form orthogonal of [v, v], then verified."""
    _require_closed(v)
    n = v.ambient_n
    b = v.basis()
    derived = span_of_brackets(b, b, n)
    rad = Subspace(n * n, _trace_orthogonal(b, derived.basis(), n))
    out = LieSubalgebra(n, rad, True)
    if not is_ideal(rad, v):
        raise InternalCheckError("radical is not an ideal")
    if not is_solvable(out):
        raise InternalCheckError("radical is not solvable")
    return out


def _unital_algebra(gens: Sequence[dict], n: int) -> list[dict]:
    """Basis of the associative algebra with 1 generated by ``gens``."""
    space = Subspace(n * n, [sp_identity(n)])
    basis = space.basis()
    i = 0
    while i < len(basis):
        for g in gens:
            z = sp_matmul(g, basis[i], n)
            if z and not space.contains(z):
                space = space.extended([z])
                basis.append(z)
        i += 1
    return basis


def nilradical(v: LieSubalgebra) -> LieSubalgebra:
    """Largest ideal of ``v`` consisting of nilpotent matrices.

    Inside the solvable radical r every element is triangular in a common
    basis (Lie).  X in r is nilpotent iff tr(X M) = 0 for all M in the unital
    associative algebra A generated by a complement of [r, r]: the diagonals
    of A interpolate every function on the weights, so the condition kills
    every weight of X.
    """
    r = radical(v)
    n = v.ambient_n
    if r.dim == 0:
        return LieSubalgebra.zero(n)
    rb = r.basis()
    derived = span_of_brackets(rb, rb, n)
    gens = []
    acc = derived
    for x in rb:
        if not acc.contains(x):
            acc = acc.extended([x])
            gens.append(x)
    alg = _unital_algebra(gens, n)
    nil = Subspace(n * n, _trace_orthogonal(rb, alg, n))
    out = LieSubalgebra(n, nil, True)
    if not is_ideal(nil, v):
        raise InternalCheckError("nilradical is not an ideal")
    for x in nil.basis():
        if not _is_nilpotent_matrix(x, n):
            raise InternalCheckError("nilradical contains a non-nilpotent matrix")
    if not is_nilpotent_algebra(out):
        raise InternalCheckError("nilradical is not a nilpotent Lie algebra")
    return out


def _is_nilpotent_matrix(x: dict, n: int) -> bool:
    p = x
    for _ in range(n - 1):
        if not p:
            return True
        p = sp_matmul(p, x, n)
    return not p


def is_nilpotent_matrix(x: ExactMatrix) -> bool:
    return _is_nilpotent_matrix(x.to_sparse(), x.rows)


def splittable_decomposition(v: LieSubalgebra, reductive_candidate: LieSubalgebra) -> bool:
    """True iff v = candidate (+) nilradical(v) and the candidate has no nilpotent ideal in its radical."""
    c = reductive_candidate
    if not c.is_subalgebra_of(v):
        raise NotSubalgebraError("candidate is not a subalgebra of v")
    _require_closed(c)
    nil = nilradical(v)
    if c.dim + nil.dim != v.dim:
        return False
    if (c.space & nil.space).dim:
        return False
    return nilradical(c).dim == 0


def normalizer_of_subspace(g: LieSubalgebra, w: Subspace) -> LieSubalgebra:
    """{Z in g : [Z, w] in w}."""
    n = g.ambient_n
    if not w <= g.space:
        raise ValueError("w must lie inside g")
    gb = g.basis()
    wb = w.basis()
    if not wb:
        return g
    nn = n * n
    images = []
    for z in gb:
        img: dict = {}
        for j, y in enumerate(wb):
            for k, x in w.residual(sp_bracket(z, y, n)).items():
                img[j * nn + k] = x
        images.append(img)
    rel = linear_relations(images, nn * len(wb))
    vecs = [g.space.combine([c.get(t, ZERO) for t in range(len(gb))]) for c in rel.basis()]
    return LieSubalgebra.checked(n, Subspace(nn, vecs))


def is_killing_negative_semidefinite(g: LieSubalgebra, real_basis: Sequence | None = None) -> bool:
    """Decide exactly whether the Killing form is negative semidefinite on a real form.

    ``real_basis`` spans the real form (defaults to the canonical basis of
    ``g``, which then must be a real span).  Inertia is computed by rational
    congruence diagonalisation.
    """
    k = killing_form(g)
    d = g.dim
    if real_basis is None:
        coords = [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]
    else:
        coords = [g.coordinates(x) for x in real_basis]
    m = len(coords)
    gram = [[ZERO] * m for _ in range(m)]
    for a in range(m):
        for b in range(a, m):
            acc = ZERO
            for i in range(d):
                ca = coords[a][i]
                if not ca:
                    continue
                for j in range(d):
                    cb = coords[b][j]
                    if cb:
                        acc = acc + ca * k[i, j] * cb
            if acc.im:
                raise ValueError("basis does not span a real form: Killing values are not real")
            gram[a][b] = gram[b][a] = acc
    if m == 0:
        return True
    plus, _, _ = hermitian_inertia(ExactMatrix.from_rows(gram))
    return plus == 0


# --- Jordan-Chevalley -------------------------------------------------------------------

@dataclass(frozen=True)
class JCPair:
    semisimple_part: ExactMatrix
    nilpotent_part: ExactMatrix

    def check(self, x: ExactMatrix) -> bool:
        s, nil = self.semisimple_part, self.nilpotent_part
        return (
            s + nil == x
            and bracket(s, nil).is_zero()
            and nil.power(x.rows).is_zero()
            and poly.is_squarefree(poly.minpoly(s))
        )


def jordan_chevalley(x: ExactMatrix) -> JCPair:
    """X = X_s + X_n via Newton iteration on the squarefree part of the characteristic polynomial."""
    if not x.is_square():
        raise DimensionError("Jordan-Chevalley needs a square matrix")
    n = x.rows
    f = poly.squarefree_part(poly.charpoly(x))
    df = poly.derivative(f)
    s = x
    for _ in range(n + 2):
        fs = poly.evaluate_matrix(f, s)
        if fs.is_zero():
            break
        s = s - fs @ inverse(poly.evaluate_matrix(df, s))
    else:
        raise InternalCheckError("Newton iteration for the semisimple part did not terminate")
    return JCPair(s, x - s)


# --- standard algebras ------------------------------------------------------------------

def sl(n: int) -> LieSubalgebra:
    """sl_n with its canonical basis (off-diagonal units, then E_ii - E_nn)."""
    vecs = [{i * n + j: ONE} for i in range(n) for j in range(n) if i != j]
    vecs += [{i * n + i: ONE, (n - 1) * n + (n - 1): -ONE} for i in range(n - 1)]
    return LieSubalgebra(n, Subspace(n * n, vecs), True)
