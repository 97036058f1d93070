"""Dense univariate polynomials over Q(i); coefficient lists, lowest degree first."""
from __future__ import annotations

from .matrix import ExactMatrix
from .scalar import ONE, ZERO, Scalar


def trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: list) -> int:
    return len(trim(p)) - 1


def add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)])


def sub(p: list, q: list) -> list:
    return add(p, [-c for c in q])


def mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return trim(out)


def scale(p: list, s: Scalar) -> list:
    return trim([s * c for c in p])


def divmod_(p: list, q: list) -> tuple[list, list]:
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = q[-1].inverse()
    quo = [ZERO] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] * inv_lead
        quo[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] = rem[shift + i] - c * b
        rem = trim(rem[:-1]) if not rem[-1] else trim(rem)
    return trim(quo), rem


def monic(p: list) -> list:
    p = trim(p)
    if not p:
        return p
    return scale(p, p[-1].inverse())


def gcd(p: list, q: list) -> list:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def derivative(p: list) -> list:
    return trim([c * Scalar(i) for i, c in enumerate(p)][1:])


def squarefree_part(p: list) -> list:
    """p / gcd(p, p'), made monic: the product of the distinct irreducible factors."""
    p = trim(p)
    if len(p) <= 1:
        return monic(p)
    g = gcd(p, derivative(p))
    return monic(divmod_(p, g)[0])


def is_squarefree(p: list) -> bool:
    p = trim(p)
    return len(p) <= 1 or degree(gcd(p, derivative(p))) == 0


def evaluate(p: list, x: Scalar) -> Scalar:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def evaluate_matrix(p: list, m: ExactMatrix) -> ExactMatrix:
    """Horner evaluation of p at a square matrix."""
    n = m.rows
    acc = ExactMatrix.zeros(n)
    ident = ExactMatrix.identity(n)
    for c in reversed(trim(p)):
        acc = acc @ m + ident.scale(c)
    return acc


def charpoly(m: ExactMatrix) -> list:
    """det(t I - m) by the Faddeev-LeVerrier recursion (exact in characteristic 0)."""
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = ExactMatrix.zeros(n)
    ident = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / Scalar(k)
    return coeffs


def minpoly(m: ExactMatrix) -> list:
    """Monic minimal polynomial from the first linear dependency among I, m, m^2, ..."""
    from .subspace import linear_relations

    n = m.rows
    powers = [ExactMatrix.identity(n).to_sparse()]
    cur = ExactMatrix.identity(n)
    for d in range(1, n + 1):
        cur = cur @ m
        powers.append(cur.to_sparse())
        rel = linear_relations(powers, n * n)
        if rel.dim:
            # relation space is 1-dim at the first dependency
            coeffs = [rel.basis()[0].get(i, ZERO) for i in range(d + 1)]
            return monic(coeffs)
    raise AssertionError("Cayley-Hamilton violated")
