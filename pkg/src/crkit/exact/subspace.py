"""Canonical subspaces of Q(i)^n and the linear algebra built on them."""
from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

from ._backend import Echelon
from .matrix import DimensionError, ExactMatrix
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "Subspace",
    "rref",
    "kernel",
    "intersect",
    "subspace_sum",
    "member",
    "linear_relations",
    "as_sparse",
]


def as_sparse(v, n: int | None = None) -> dict:
    """Coerce a vector (sparse dict, dense sequence, 1-row/1-col matrix) to sparse form."""
    if isinstance(v, dict):
        out = {}
        for k, x in v.items():
            x = Scalar.coerce(x)
            if x:
                if n is not None and not 0 <= k < n:
                    raise DimensionError(f"index {k} outside ambient dimension {n}")
                out[k] = x
        return out
    if isinstance(v, ExactMatrix):
        v = v.entries
    v = list(v)
    if n is not None and len(v) != n:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {n}")
    out = {}
    for k, x in enumerate(v):
        x = Scalar.coerce(x)
        if x:
            out[k] = x
    return out


def _to_gauss(vec: dict) -> dict:
    """Rescale a rational sparse vector to Gaussian-integer entries."""
    if not vec:
        return {}
    den = lcm(*(s._d for s in vec.values()))
    return {c: (s._a * (den // s._d), s._b * (den // s._d)) for c, s in vec.items()}


def _from_gauss(row: dict, offset: int = 0) -> dict:
    """Normalise an echelon row so its pivot is 1."""
    lead = min(row)
    pv = row[lead][0]
    return {c - offset: Scalar._raw(x, y, pv) for c, (x, y) in row.items()}


class Subspace:
    """A subspace of Q(i)^n held by its reduced row-echelon basis.

    The basis is canonical, so two subspaces are equal exactly when their
    stored rows are identical.  Instances are immutable.
    """

    __slots__ = ("ambient_dim", "_rows", "_pivots", "_ech")
    canonical = True

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        ech = Echelon(ambient_dim)
        for v in vectors:
            ech.insert(_to_gauss(as_sparse(v, ambient_dim)))
        self._adopt(ambient_dim, ech)

    def _adopt(self, ambient_dim, ech):
        self.ambient_dim = ambient_dim
        self._ech = ech
        pivots = ech.pivots()
        self._pivots = tuple(pivots)
        self._rows = tuple(tuple(sorted(_from_gauss(ech.rows[p]).items())) for p in pivots)

    @classmethod
    def _from_echelon(cls, ambient_dim: int, ech) -> "Subspace":
        s = object.__new__(cls)
        s._adopt(ambient_dim, ech)
        return s

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, ({i: ONE} for i in range(n)))

    # --- basic data ------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple:
        return self._pivots

    def basis(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    @property
    def basis_matrix(self) -> ExactMatrix:
        n = self.ambient_dim
        entries = []
        for r in self._rows:
            dense = [ZERO] * n
            for c, x in r:
                dense[c] = x
            entries.extend(dense)
        return ExactMatrix(len(self._rows), n, entries)

    def __len__(self):
        return self.dim

    # --- membership -------------------------------------------------------------
    def contains(self, v) -> bool:
        return self._ech.contains(_to_gauss(as_sparse(v, self.ambient_dim)))

    __contains__ = contains

    def residual(self, v) -> dict:
        """``v`` minus its canonical projection; linear in ``v``, zero iff ``v`` is a member."""
        v = as_sparse(v, self.ambient_dim)
        out = dict(v)
        for piv, row in zip(self._pivots, self._rows):
            coeff = v.get(piv)
            if coeff is None:
                continue
            for c, x in row:
                w = out.get(c, ZERO) - coeff * x
                if w:
                    out[c] = w
                else:
                    out.pop(c, None)
        return out

    def coordinates(self, v) -> list[Scalar]:
        """Coefficients of ``v`` in the canonical basis; raises if ``v`` is not a member."""
        v = as_sparse(v, self.ambient_dim)
        if self.residual(v):
            raise ValueError("vector is not in the subspace")
        return [v.get(p, ZERO) for p in self._pivots]

    def combine(self, coeffs: Sequence) -> dict:
        out: dict[int, Scalar] = {}
        for s, row in zip(coeffs, self._rows):
            s = Scalar.coerce(s)
            if not s:
                continue
            for c, x in row:
                w = out.get(c, ZERO) + s * x
                if w:
                    out[c] = w
                else:
                    out.pop(c, None)
        return out

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other._ech.contains(_to_gauss(dict(r))) for r in self._rows)

    __le__ = is_subspace_of

    # --- identity --------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient_dim, self._rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    # --- lattice operations ------------------------------------------------------------
    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def extended(self, vectors: Iterable) -> "Subspace":
        ech = self._ech.copy()
        for v in vectors:
            ech.insert(_to_gauss(as_sparse(v, self.ambient_dim)))
        return Subspace._from_echelon(self.ambient_dim, ech)

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "basis": self.basis_matrix.to_json()}


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if b.dim > a.dim:
        a, b = b, a
    return a.extended(b.basis())


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: reduce rows (a_i | a_i) and (b_j | 0); rows living on the right half span a cap b."""
    _check_ambient(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace(n)
    ech = Echelon(2 * n)
    for r in a._rows:
        g = _to_gauss(dict(r))
        row = dict(g)
        row.update({c + n: v for c, v in g.items()})
        ech.insert(row)
    for r in b._rows:
        ech.insert(_to_gauss(dict(r)))
    out = Echelon(n)
    for p, row in ech.rows.items():
        if p >= n:
            out.insert({c - n: v for c, v in row.items()})
    return Subspace._from_echelon(n, out)


def member(v, s: Subspace) -> bool:
    return s.contains(v)


def linear_relations(vectors: Sequence[dict], ambient_dim: int) -> Subspace:
    """The subspace of coefficient vectors ``x`` in Q(i)^len(vectors) with sum x_t v_t = 0."""
    t = len(vectors)
    ech = Echelon(ambient_dim + t)
    for idx, v in enumerate(vectors):
        row = _to_gauss(as_sparse(v, ambient_dim))
        row[ambient_dim + idx] = (1, 0)
        ech.insert(row)
    out = Echelon(t)
    for p, row in ech.rows.items():
        if p >= ambient_dim:
            out.insert({c - ambient_dim: v for c, v in row.items()})
    return Subspace._from_echelon(t, out)


def _rref_rows(m: ExactMatrix):
    ech = Echelon(m.cols)
    for i in range(m.rows):
        ech.insert(_to_gauss(as_sparse(m.row(i))))
    return ech


def rref(m: ExactMatrix) -> ExactMatrix:
    """Reduced row-echelon form, padded with zero rows to the original shape."""
    ech = _rref_rows(m)
    entries = []
    for p in ech.pivots():
        dense = [ZERO] * m.cols
        for c, x in _from_gauss(ech.rows[p]).items():
            dense[c] = x
        entries.extend(dense)
    entries.extend([ZERO] * (m.cols * (m.rows - ech.rank)))
    return ExactMatrix(m.rows, m.cols, entries)


def kernel(m: ExactMatrix) -> Subspace:
    """Canonical basis of ``{v : m v = 0}``."""
    ech = _rref_rows(m)
    pivots = ech.pivots()
    rows = {p: _from_gauss(ech.rows[p]) for p in pivots}
    pivset = set(pivots)
    vectors = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = {f: ONE}
        for p in pivots:
            x = rows[p].get(f)
            if x is not None:
                v[p] = -x
        vectors.append(v)
    return Subspace(m.cols, vectors)


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse by reducing ``[m | I]``; raises ZeroDivisionError if singular."""
    if not m.is_square():
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    ech = Echelon(2 * n)
    for i in range(n):
        row = as_sparse(m.row(i))
        row[n + i] = ONE
        ech.insert(_to_gauss(row))
    piv = ech.pivots()
    if len(piv) < n or piv[n - 1] >= n:
        raise ZeroDivisionError("matrix is singular")
    entries = []
    for p in piv[:n]:
        r = _from_gauss(ech.rows[p])
        entries.extend(r.get(n + j, ZERO) for j in range(n))
    return ExactMatrix(n, n, entries)
