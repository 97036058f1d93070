"""Exact inertia of Hermitian matrices over Q(i) by congruence diagonalisation."""
from __future__ import annotations

from .matrix import DimensionError, ExactMatrix
from .scalar import ZERO, Scalar


class NotHermitianError(ValueError):
    pass


def hermitian_inertia(g: ExactMatrix) -> tuple[int, int, int]:
    """Return ``(plus, minus, zero)`` for a Hermitian matrix.

    Uses congruence ``g -> P* g P`` with symmetric pivoting (Sylvester's law
    of inertia).  When every remaining diagonal entry vanishes but some
    off-diagonal entry ``a_ij`` does not, adding ``a_ij`` times row/column j
    to row/column i produces the diagonal entry ``2|a_ij|^2 > 0``.
    """
    if not g.is_square():
        raise DimensionError("inertia of a non-square matrix")
    if g != g.dagger():
        raise NotHermitianError("matrix is not Hermitian")
    n = g.rows
    a = [list(g.row(i)) for i in range(n)]
    active = list(range(n))
    plus = minus = 0
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            t = a[i][j]
            # row_i += t * row_j ; col_i += conj(t) * col_j
            for k in range(n):
                a[i][k] = a[i][k] + t * a[j][k]
            for k in range(n):
                a[k][i] = a[k][i] + t.conjugate() * a[k][j]
            piv = i
        d = a[piv][piv]
        if d.im:
            raise AssertionError("non-real diagonal during Hermitian reduction")
        if d.re > 0:
            plus += 1
        else:
            minus += 1
        active.remove(piv)
        inv = d.inverse()
        for r in active:
            f = a[r][piv]
            if not f:
                continue
            coef = f * inv
            for k in active:
                # row_r -= coef * row_piv ; keeps Hermitian structure on the active block
                a[r][k] = a[r][k] - coef * a[piv][k]
        for r in active:
            a[r][piv] = ZERO
            a[piv][r] = ZERO
    return plus, minus, n - plus - minus


def symmetric_inertia(rows) -> tuple[int, int, int]:
    """Inertia of a real symmetric matrix given as nested rationals/Scalars."""
    return hermitian_inertia(ExactMatrix.from_rows(rows))


def is_negative_semidefinite(g: ExactMatrix) -> bool:
    plus, _, _ = hermitian_inertia(g)
    return plus == 0


__all__ = ["hermitian_inertia", "symmetric_inertia", "is_negative_semidefinite", "NotHermitianError", "Scalar"]
