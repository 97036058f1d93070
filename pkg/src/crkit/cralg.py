"""CR algebras (k_0, v) for k_0 = s(u(p) + u(q)) realised inside sl_{p+q}(C).

The conjugation is always the compact one, X -> -X^dagger, whose fixed
points in k are the anti-Hermitian matrices k_0.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .conj import conj_space, is_conj_stable, real_points_basis
from .exact import ExactMatrix, Subspace
from .exact.matrix import DimensionError
from .exact.scalar import ONE
from .liealg import InternalCheckError, LieSubalgebra, NotSubalgebraError, nilradical, normalizer_of_subspace
from .roots import Verdict, is_parabolic

__all__ = [
    "RealFormContext",
    "CRAlgebra",
    "FiberType",
    "InconsistentAlgebraError",
    "NotNReductiveError",
    "PreconditionError",
    "conjugate",
    "reductive_part",
    "is_n_reductive",
    "cr_dimension",
    "cr_codimension",
    "is_hnr",
    "check_cr_map",
    "check_submersion",
    "fiber_type",
]


class InconsistentAlgebraError(ValueError):
    """The subalgebra cannot be the isotropy datum of a CR manifold (e.g. negative codimension)."""


class NotNReductiveError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class FiberType(str, enum.Enum):
    TOTALLY_REAL = "totally_real"
    COMPLEX = "complex"
    MIXED = "mixed"

    def __str__(self):
        return self.value


class RealFormContext:
    """Signature (p, q) data: the Hermitian form diag(I_p, -I_q) and k = s(gl_p + gl_q).

    ``q = 0`` is allowed and gives k = sl_p with compact form su(p).
    """

    def __init__(self, p: int, q: int):
        if p < 0 or q < 0 or p + q < 1:
            raise ValueError("need p, q >= 0 and p + q >= 1")
        self.p = p
        self.q = q
        self.n_total = n = p + q
        self.hermitian_form = ExactMatrix.diag([1] * p + [-1] * q)
        vecs = []
        for lo, hi in ((0, p), (p, n)):
            vecs += [{i * n + j: ONE} for i in range(lo, hi) for j in range(lo, hi) if i != j]
        vecs += [{i * n + i: ONE, (i + 1) * n + i + 1: -ONE} for i in range(n - 1)]
        self.k = LieSubalgebra(n, Subspace(n * n, vecs), True)
        self.invariant_form_convention = "-Re tr(XY)"

    def __eq__(self, other):
        return isinstance(other, RealFormContext) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"RealFormContext(p={self.p}, q={self.q})"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q}


def conjugate(ctx: RealFormContext, x: ExactMatrix) -> ExactMatrix:
    if (x.rows, x.cols) != (ctx.n_total, ctx.n_total):
        raise DimensionError("matrix size does not match the context")
    if not ctx.k.contains(x):
        raise ValueError("matrix is not in k")
    return -x.dagger()


@dataclass(frozen=True, eq=False)
class CRAlgebra:
    """The CR algebra (k_0, v); derived data is computed and verified at construction."""

    context: RealFormContext
    v: LieSubalgebra
    v_bar: Subspace = field(init=False)
    v_r: LieSubalgebra = field(init=False)
    v_n: LieSubalgebra = field(init=False)
    n_cr: int = field(init=False)
    k_cr: int = field(init=False)

    def __post_init__(self):
        ctx, v = self.context, self.v
        n = ctx.n_total
        if v.ambient_n != n:
            raise DimensionError("v lives in the wrong matrix size")
        if not v.verified_closed:
            v = LieSubalgebra.checked(n, v.space)
            object.__setattr__(self, "v", v)
        if not v.space <= ctx.k.space:
            raise NotSubalgebraError("v is not contained in k")
        v_bar = conj_space(v.space, n)
        v_r = LieSubalgebra(n, v.space & v_bar, True)
        if not is_conj_stable(v_r.space, n):
            raise InternalCheckError("v cap conj(v) is not conjugation stable")
        if len(real_points_basis(v_r.space, n)) != v_r.dim:
            raise InternalCheckError("v_r is not the complexification of its real points")
        v_n = nilradical(v)
        n_cr = v.dim - v_r.dim
        k_cr = ctx.k.dim - v_r.dim - 2 * n_cr
        if k_cr < 0:
            raise InconsistentAlgebraError(f"negative CR codimension {k_cr}: v is not an isotropy-type subalgebra")
        for name, val in (("v_bar", v_bar), ("v_r", v_r), ("v_n", v_n), ("n_cr", n_cr), ("k_cr", k_cr)):
            object.__setattr__(self, name, val)

    @property
    def n(self) -> int:
        return self.context.n_total

    @classmethod
    def from_matrices(cls, ctx: RealFormContext, mats) -> "CRAlgebra":
        return cls(ctx, LieSubalgebra.from_matrices(ctx.n_total, mats))

    def to_json(self) -> dict:
        return {"context": self.context.to_json(), "v_basis": [m.to_json() for m in self.v.basis_matrices()]}

    @classmethod
    def from_json(cls, data: dict) -> "CRAlgebra":
        ctx = RealFormContext(int(data["context"]["p"]), int(data["context"]["q"]))
        mats = [ExactMatrix.from_json(m) for m in data["v_basis"]]
        return cls.from_matrices(ctx, mats)

    def __repr__(self):
        return f"CRAlgebra({self.context!r}, dim v={self.v.dim}, n={self.n_cr}, k={self.k_cr})"


def reductive_part(a: CRAlgebra) -> LieSubalgebra:
    return a.v_r


def is_n_reductive(a: CRAlgebra) -> bool:
    v, vr, vn = a.v.space, a.v_r.space, a.v_n.space
    return vr.dim + vn.dim == v.dim and (vr & vn).dim == 0 and (vr + vn) == v


def cr_dimension(a: CRAlgebra) -> int:
    return a.n_cr


def cr_codimension(a: CRAlgebra) -> int:
    return a.k_cr


def is_hnr(a: CRAlgebra, attempts: int | None = None) -> Verdict:
    if not is_n_reductive(a):
        raise NotNReductiveError("HNR is only defined for n-reductive CR algebras")
    q = normalizer_of_subspace(a.context.k, a.v_n.space)
    if attempts is None:
        return is_parabolic(a.context.k, q)
    return is_parabolic(a.context.k, q, attempts=attempts)


# --- CR maps between homogeneous CR manifolds ------------------------------------------

def _check_pair(e: LieSubalgebra, f: LieSubalgebra):
    if e.ambient_n != f.ambient_n:
        raise DimensionError("e and f live in different matrix sizes")
    if not (e.verified_closed and f.verified_closed):
        raise PreconditionError("e and f must be verified-closed subalgebras")
    n = e.ambient_n
    er = e.space & conj_space(e.space, n)
    fr = f.space & conj_space(f.space, n)
    if not er <= fr:
        raise PreconditionError("precondition violated: e cap conj(e) is not contained in f cap conj(f)")
    return n, er, fr


def check_cr_map(e: LieSubalgebra, f: LieSubalgebra) -> bool:
    _check_pair(e, f)
    return e.space <= f.space


def check_submersion(e: LieSubalgebra, f: LieSubalgebra) -> bool:
    _, _, fr = _check_pair(e, f)
    return f.space == e.space + fr


def fiber_type(e: LieSubalgebra, f: LieSubalgebra) -> FiberType:
    """Totally real is tested before complex; both can hold only when the fibre is a point."""
    n, er, fr = _check_pair(e, f)
    ebar = conj_space(e.space, n)
    fbar = conj_space(f.space, n)
    e_fbar = e.space & fbar
    ebar_f = ebar & f.space
    if e_fbar == er and ebar_f == er:
        return FiberType.TOTALLY_REAL
    if e_fbar + ebar_f == fr:
        return FiberType.COMPLEX
    return FiberType.MIXED

