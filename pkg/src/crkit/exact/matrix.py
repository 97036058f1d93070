"""Immutable dense matrices over Q(i) and sparse helpers for square ones.

Square matrices are also handled in flattened sparse form,
``dict[int, Scalar]`` keyed by ``i*n + j``; that is the form the Lie-algebra
code works in, since almost every matrix it touches is very sparse.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar

__all__ = [
    "ExactMatrix",
    "DimensionError",
    "sp_add",
    "sp_sub",
    "sp_scale",
    "sp_matmul",
    "sp_bracket",
    "sp_trace",
    "sp_trace_product",
    "sp_dagger",
    "sp_identity",
    "sp_matvec",
]


class DimensionError(ValueError):
    """Shapes or ambient dimensions do not match."""


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(Scalar.coerce(e) for e in entries)

    # --- constructors ---------------------------------------------------------
    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "ExactMatrix":
        data = [list(r) for r in data]
        if not data:
            return cls(0, 0, ())
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionError("ragged rows")
        return cls(len(data), width, [x for r in data for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, values: Iterable) -> "ExactMatrix":
        values = [Scalar.coerce(v) for v in values]
        n = len(values)
        return cls(n, n, [values[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "ExactMatrix":
        """Elementary matrix E_ij (0-based)."""
        return cls.from_sparse(n, {i * n + j: ONE})

    @classmethod
    def from_sparse(cls, n: int, vec: dict) -> "ExactMatrix":
        entries = [ZERO] * (n * n)
        for k, v in vec.items():
            entries[k] = v
        return cls(n, n, entries)

    # --- access ---------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_sparse(self) -> dict:
        if self.rows != self.cols:
            raise DimensionError("sparse form is defined for square matrices")
        return {k: v for k, v in enumerate(self.entries) if v}

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    # --- algebra ----------------------------------------------------------------
    def _check_same(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, s) -> "ExactMatrix":
        s = Scalar.coerce(s)
        return ExactMatrix(self.rows, self.cols, [s * a for a in self.entries])

    def __rmul__(self, s):
        return self.scale(s)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = r[k]
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def dagger(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return ExactMatrix(self.cols, self.rows,
                           [self.entries[i * self.cols + j].conjugate()
                            for j in range(self.cols) for i in range(self.rows)])

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [a.conjugate() for a in self.entries])

    def trace(self) -> Scalar:
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i * self.cols + i]
        return acc

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.dagger()

    def power(self, k: int) -> "ExactMatrix":
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # --- identity & text ------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data) -> "ExactMatrix":
        return cls.from_rows([[Scalar.coerce(x) for x in r] for r in data])


# --- sparse square-matrix kernels -------------------------------------------------
def sp_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            s = w + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def sp_scale(a: dict, s: Scalar) -> dict:
    if not s:
        return {}
    return {k: s * v for k, v in a.items()}


def sp_sub(a: dict, b: dict) -> dict:
    return sp_add(a, {k: -v for k, v in b.items()})


def _by_row(a: dict, n: int) -> dict:
    rows: dict[int, list] = {}
    for k, v in a.items():
        rows.setdefault(k // n, []).append((k % n, v))
    return rows


def sp_matmul(a: dict, b: dict, n: int) -> dict:
    brows = _by_row(b, n)
    out: dict[int, Scalar] = {}
    for k, x in a.items():
        i, j = divmod(k, n)
        row = brows.get(j)
        if not row:
            continue
        base = i * n
        for c, y in row:
            idx = base + c
            w = out.get(idx)
            out[idx] = x * y if w is None else w + x * y
    return {k: v for k, v in out.items() if v}


def sp_bracket(a: dict, b: dict, n: int) -> dict:
    return sp_sub(sp_matmul(a, b, n), sp_matmul(b, a, n))


def sp_trace(a: dict, n: int) -> Scalar:
    acc = ZERO
    step = n + 1
    for k, v in a.items():
        if k % step == 0:
            acc = acc + v
    return acc


def sp_trace_product(a: dict, b: dict, n: int) -> Scalar:
    """tr(AB) = sum_{i,j} A_ij B_ji without forming the product."""
    acc = ZERO
    for k, x in a.items():
        i, j = divmod(k, n)
        y = b.get(j * n + i)
        if y is not None:
            acc = acc + x * y
    return acc


def sp_dagger(a: dict, n: int) -> dict:
    out = {}
    for k, v in a.items():
        i, j = divmod(k, n)
        out[j * n + i] = v.conjugate()
    return out


def sp_identity(n: int) -> dict:
    return {i * n + i: ONE for i in range(n)}


def sp_matvec(a: dict, v: dict, n: int) -> dict:
    """Matrix (flattened n x n) times a sparse column vector of length n."""
    out: dict[int, Scalar] = {}
    for k, x in a.items():
        i, j = divmod(k, n)
        y = v.get(j)
        if y is not None:
            w = out.get(i)
            out[i] = x * y if w is None else w + x * y
    return {k: val for k, val in out.items() if val}
