"""The compact conjugation X -> -X^dagger on gl_N and real points of subspaces."""
from __future__ import annotations

from .exact import Subspace
from .exact.matrix import sp_dagger
from .exact.scalar import I, ZERO


def conj_vec(x: dict, n: int) -> dict:
    return {k: -v for k, v in sp_dagger(x, n).items()}


def conj_space(s: Subspace, n: int) -> Subspace:
    # antilinear map: the image of a complex span is the span of the images
    return Subspace(n * n, [conj_vec(b, n) for b in s.basis()])


def is_conj_stable(s: Subspace, n: int) -> bool:
    return conj_space(s, n) == s


def _realify(x: dict, nn: int) -> dict:
    out = {}
    for k, v in x.items():
        if v.re:
            out[k] = v.re
        if v.im:
            out[nn + k] = v.im
    return out


def real_points_basis(s: Subspace, n: int) -> list[dict]:
    """An R-basis of the anti-Hermitian matrices in ``s`` (the real points s cap k_0).

    Works through s cap conj(s), which is conjugation stable and has the same
    real points; its complex dimension equals the real dimension returned.
    """
    nn = n * n
    stable = s & conj_space(s, n)
    acc = Subspace(2 * nn)
    out = []
    for b in stable.basis():
        cb = conj_vec(b, n)
        cands = [
            _add(b, cb),
            {k: I * v for k, v in _add(b, {k: -v for k, v in cb.items()}).items()},
        ]
        for c in cands:
            if not c:
                continue
            r = _realify(c, nn)
            if not acc.contains(r):
                acc = acc.extended([r])
                out.append(c)
    if len(out) != stable.dim:
        raise AssertionError("real form dimension mismatch")
    return out


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, ZERO) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def realified_span(vectors, n: int) -> Subspace:
    """Real span of the given matrices, as a subspace of Q^(2 N^2)."""
    nn = n * n
    return Subspace(2 * nn, [_realify(v, nn) for v in vectors])
