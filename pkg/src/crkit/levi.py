"""Scalar Levi forms of homogeneous CR manifolds and what is read off them.

For a characteristic direction T in m_0 the Levi form on v_n is

    L_T(Z, W) = 1/2 * kappa(T, i [conj(W), Z]),   kappa(X, Y) = -tr(XY),

extended complex-bilinearly; it is Hermitian in (Z, W).  Only its signature
is meaningful, and the signature is what every downstream check uses.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .conj import conj_vec, real_points_basis
from .cralg import CRAlgebra, NotNReductiveError, is_n_reductive
from .exact import ExactMatrix, Scalar, Subspace, hermitian_inertia
from .exact.matrix import sp_bracket, sp_trace_product
from .exact.scalar import I, ZERO
from .liealg import _trace_orthogonal

__all__ = [
    "SignatureTriple",
    "LeviReport",
    "PseudoconcavityEstimate",
    "CohomologyWindow",
    "characteristic_space",
    "characteristic_basis",
    "levi_gram",
    "levi_report",
    "hermitian_signature",
    "witt_index",
    "is_q_pseudoconcave_at",
    "sample_directions",
    "pseudoconcavity_estimate",
    "hessian_signature",
    "cohomology_window",
]

HALF = Scalar(Fraction(1, 2))


@dataclass(frozen=True)
class SignatureTriple:
    plus: int
    minus: int
    zero: int

    @property
    def total(self) -> int:
        return self.plus + self.minus + self.zero

    def to_json(self) -> dict:
        return {"plus": self.plus, "minus": self.minus, "zero": self.zero}


def hermitian_signature(g: ExactMatrix) -> SignatureTriple:
    return SignatureTriple(*hermitian_inertia(g))


def witt_index(s: SignatureTriple) -> int:
    return min(s.plus, s.minus)


# --- characteristic directions -------------------------------------------------------

def _require(a: CRAlgebra):
    if not is_n_reductive(a):
        raise NotNReductiveError("Levi data needs an n-reductive CR algebra")


def characteristic_space(a: CRAlgebra) -> Subspace:
    """Complex span m of the characteristic directions; conjugation stable, real points m_0.

    m is the trace-form orthogonal of v + conj(v) inside k, and m_0 = m cap k_0
    is the kappa-orthogonal of (v + conj(v)) cap k_0 inside k_0.
    """
    _require(a)
    n = a.n
    vv = a.v.space + a.v_bar
    return Subspace(n * n, _trace_orthogonal(a.context.k.basis(), vv.basis(), n))


def characteristic_basis(a: CRAlgebra) -> list[ExactMatrix]:
    """An R-basis of m_0 made of anti-Hermitian matrices."""
    n = a.n
    return [ExactMatrix.from_sparse(n, x) for x in real_points_basis(characteristic_space(a), n)]


def _direction(a: CRAlgebra, t) -> tuple[dict, list | None]:
    n = a.n
    if isinstance(t, ExactMatrix):
        return t.to_sparse(), None
    coords = [Scalar.coerce(c) for c in t]
    basis = characteristic_basis(a)
    if len(coords) != len(basis):
        raise ValueError(f"expected {len(basis)} coordinates on m_0, got {len(coords)}")
    acc = ExactMatrix.zeros(n)
    for c, b in zip(coords, basis):
        acc = acc + b.scale(c)
    return acc.to_sparse(), coords


def levi_gram(a: CRAlgebra, t) -> ExactMatrix:
    """Gram matrix of L_T on the canonical basis of v_n.

    ``t`` is an anti-Hermitian matrix in m_0 or a list of real coordinates on
    :func:`characteristic_basis`.
    """
    _require(a)
    n = a.n
    tv, _ = _direction(a, t)
    if any(v.conjugate() != -tv.get((k % n) * n + k // n, ZERO) for k, v in tv.items()):
        raise ValueError("T must be anti-Hermitian")
    if not characteristic_space(a).contains(tv):
        raise ValueError("T is not a characteristic direction (not in m_0)")
    zs = a.v_n.basis()
    d = len(zs)
    rows = [[ZERO] * d for _ in range(d)]
    for j in range(d):
        for l_ in range(d):
            br = sp_bracket(conj_vec(zs[l_], n), zs[j], n)
            rows[j][l_] = -HALF * I * sp_trace_product(tv, br, n)
    return ExactMatrix.from_rows(rows) if d else ExactMatrix(0, 0, ())


@dataclass(frozen=True)
class LeviReport:
    T: tuple
    gram: ExactMatrix
    signature: SignatureTriple
    witt: int

    def to_json(self) -> dict:
        return {"T": [str(c) for c in self.T], "signature": self.signature.to_json(), "witt": self.witt}


def levi_report(a: CRAlgebra, coords: Sequence) -> LeviReport:
    g = levi_gram(a, list(coords))
    if g != g.dagger():
        raise AssertionError("Levi Gram matrix is not Hermitian")
    s = hermitian_signature(g)
    return LeviReport(tuple(Scalar.coerce(c) for c in coords), g, s, witt_index(s))


def is_q_pseudoconcave_at(reports: Iterable[LeviReport], q: int) -> bool:
    """Witt index >= q on every supplied direction (certifies only the sampled set)."""
    return all(r.witt >= q for r in reports)


# --- sampling -------------------------------------------------------------------------

def sample_directions(dim: int, count: int, seed: int = 0, scale: int = 8) -> list[list[int]]:
    """Deterministic integer directions on R^dim.

    First +/- each coordinate axis, then points of a scrambled Halton sequence
    mapped onto the lattice {-scale..scale}^dim.  Zero vectors and repeats are
    skipped.
    """
    from scipy.stats import qmc

    out: list[list[int]] = []
    seen = set()

    def push(v):
        t = tuple(v)
        if any(t) and t not in seen:
            seen.add(t)
            out.append(list(t))

    for i in range(dim):
        for s in (1, -1):
            if len(out) < count:
                push([s if j == i else 0 for j in range(dim)])
    if dim == 0:
        return out
    if len(out) < count:
        sampler = qmc.Halton(d=dim, scramble=True, seed=seed)
        pts = sampler.random(4 * count)
        for row in pts:
            if len(out) >= count:
                break
            push([int(round(scale * (2 * x - 1))) for x in row])
    return out


@dataclass(frozen=True)
class PseudoconcavityEstimate:
    sampled_min: int | None
    samples: int
    seed: int
    closed_form_mu: int | None
    equality_attained: bool | None
    discrepancy: str | None
    reports: tuple = ()

    def to_json(self) -> dict:
        return {
            "sampled_min": self.sampled_min,
            "samples": self.samples,
            "seed": self.seed,
            "closed_form_mu": self.closed_form_mu,
            "equality_attained": self.equality_attained,
            "discrepancy": self.discrepancy,
        }


def pseudoconcavity_estimate(
    a: CRAlgebra, seed: int = 0, count: int = 32, closed_form_mu: int | None = None
) -> PseudoconcavityEstimate:
    """Minimum Witt index over sampled characteristic directions.

    This is an upper bound for the true pseudoconcavity order.  With
    ``closed_form_mu`` the comparison is recorded: a sampled minimum below mu,
    or no sampled direction reaching mu, yields a discrepancy string.
    """
    _require(a)
    if a.v_n.dim == 0:
        # empty Levi form: Witt index 0 in every direction
        eq = None if closed_form_mu is None else closed_form_mu == 0
        disc = None if eq in (None, True) else f"Levi form is empty but closed-form mu is {closed_form_mu}"
        return PseudoconcavityEstimate(0, 0, seed, closed_form_mu, eq, disc)
    dim = len(characteristic_basis(a))
    if dim == 0:
        return PseudoconcavityEstimate(None, 0, seed, closed_form_mu, None, None)
    reports = tuple(levi_report(a, d) for d in sample_directions(dim, count, seed))
    smin = min(r.witt for r in reports)
    eq = disc = None
    if closed_form_mu is not None:
        eq = smin == closed_form_mu
        if smin < closed_form_mu:
            disc = f"sampled minimum {smin} below closed-form mu {closed_form_mu}"
        elif not eq:
            disc = f"no sampled direction attains closed-form mu {closed_form_mu} (sampled minimum {smin})"
    return PseudoconcavityEstimate(smin, len(reports), seed, closed_form_mu, eq, disc, reports)


# --- bookkeeping rules ------------------------------------------------------------------

def hessian_signature(levi: SignatureTriple, k_cr: int) -> SignatureTriple:
    """Signature of the complex Hessian of the exhaustion: (lambda+ + k, lambda-, rest)."""
    if k_cr < 0:
        raise ValueError("CR codimension must be nonnegative")
    return SignatureTriple(levi.plus + k_cr, levi.minus, levi.zero)


@dataclass(frozen=True)
class CohomologyWindow:
    n: int
    q: int

    @property
    def low_max(self) -> int | None:
        return self.q - 1 if self.q > 0 else None

    @property
    def high_min(self) -> int:
        return self.n - self.q + 1

    def __contains__(self, j: int) -> bool:
        return j < self.q or j > self.n - self.q

    def degrees(self, upto: int | None = None) -> list[int]:
        top = self.n if upto is None else upto
        return [j for j in range(top + 1) if j in self]

    def to_json(self) -> dict:
        return {"low_max": self.low_max, "high_min": self.high_min}


def cohomology_window(n: int, q: int) -> CohomologyWindow:
    """Degrees j with j < q or j > n - q."""
    if not 0 <= q <= n:
        raise ValueError("need 0 <= q <= n")
    return CohomologyWindow(n, q)
