"""SU(p,q)-orbits in the Grassmannian Gr_m(C^{p+q}) and their CR invariants.

An orbit triple (M_+, M_-, M_0) is labelled by (a, b) with

    a + b <= m,  max(0, m-q) <= a <= p,  max(0, m-p) <= b <= q.

M_+(a, b) holds the planes on which the Hermitian form has signature (a, b),
M_-(a, b) the planes meeting W_+ and W_- in dimensions a and b, and M_0 is
their intersection.  Invariants are computed from the exact stabilizer of a
base point; the closed-form counts are carried alongside and compared, never
substituted.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .cralg import CRAlgebra, RealFormContext, is_hnr, is_n_reductive
from .exact import ExactMatrix, Subspace, linear_relations
from .exact.matrix import sp_matvec
from .exact.scalar import ONE, ZERO
from .levi import SignatureTriple, hermitian_signature, pseudoconcavity_estimate
from .liealg import LieSubalgebra

__all__ = [
    "OrbitDescriptor",
    "OrbitReport",
    "DualPair",
    "InvalidParameters",
    "InternalConsistencyError",
    "validate_range",
    "enumerate_orbits",
    "base_point",
    "signature_of_restriction",
    "k_orbit_class",
    "stabilizer_in_k",
    "cr_algebra",
    "orbit_report",
    "duality_catalog",
    "CSV_FIELDS",
    "reports_to_csv",
]


class InvalidParameters(ValueError):
    pass


class InternalConsistencyError(AssertionError):
    """A dimension identity that must hold for every orbit failed."""


def validate_range(p: int, q: int, m: int):
    if not (isinstance(p, int) and isinstance(q, int) and isinstance(m, int)):
        raise InvalidParameters("p, q, m must be integers")
    if not 1 <= p <= q:
        raise InvalidParameters(f"need 1 <= p <= q, got p={p}, q={q}")
    if not 1 <= m < p + q:
        raise InvalidParameters(f"need 1 <= m < p+q, got m={m}")


def _admissible(p, q, m, a, b) -> bool:
    return a + b <= m and max(0, m - q) <= a <= p and max(0, m - p) <= b <= q


@dataclass(frozen=True, order=True)
class OrbitDescriptor:
    p: int
    q: int
    m: int
    a: int
    b: int

    def __post_init__(self):
        validate_range(self.p, self.q, self.m)
        if not _admissible(self.p, self.q, self.m, self.a, self.b):
            raise InvalidParameters(f"(a,b)=({self.a},{self.b}) violates the orbit conditions for p={self.p}, q={self.q}, m={self.m}")

    @property
    def c(self) -> int:
        return self.m - self.a - self.b

    @property
    def block_sizes(self) -> tuple[int, int, int, int, int, int]:
        a, b, c = self.a, self.b, self.c
        return (a, c, self.p - a - c, b, c, self.q - b - c)

    @property
    def p0(self) -> int:
        return max(0, self.m - self.q)

    @property
    def q0(self) -> int:
        return max(0, self.m - self.p)

    @property
    def label(self) -> str:
        return f"{self.p},{self.q},{self.m},{self.a},{self.b}"

    def formula_n(self) -> int:
        n1, n2, n3, n4, n5, n6 = self.block_sizes
        return n1 * n3 + n2 * n3 + n4 * n6 + n2 * n6

    def formula_k(self) -> int:
        n1, n2, n3, n4, n5, n6 = self.block_sizes
        return n2 * (n1 + n2 + n4)

    def formula_mu(self) -> int:
        n1, n2, n3, n4, n5, n6 = self.block_sizes
        return min(n3, n6)


def enumerate_orbits(p: int, q: int, m: int) -> list[OrbitDescriptor]:
    """All admissible (a, b), lexicographically ordered."""
    validate_range(p, q, m)
    return [
        OrbitDescriptor(p, q, m, a, b)
        for a in range(p + 1)
        for b in range(q + 1)
        if _admissible(p, q, m, a, b)
    ]


def base_point(d: OrbitDescriptor) -> Subspace:
    """span{e_1..e_a} + span{e_{a+j} + e_{p+b+j}} + span{e_{p+1}..e_{p+b}} (1-based)."""
    n = d.p + d.q
    vecs = [{i: ONE} for i in range(d.a)]
    vecs += [{d.a + j: ONE, d.p + d.b + j: ONE} for j in range(d.c)]
    vecs += [{d.p + i: ONE} for i in range(d.b)]
    return Subspace(n, vecs)


def signature_of_restriction(ctx: RealFormContext, ell: Subspace) -> SignatureTriple:
    h = ctx.hermitian_form
    ws = ell.basis()
    gram = [
        [sum((x.conjugate() * h[i, i] * y.get(i, ZERO) for i, x in u.items()), ZERO) for y in ws]
        for u in ws
    ]
    if not ws:
        return SignatureTriple(0, 0, 0)
    return hermitian_signature(ExactMatrix.from_rows(gram))


def k_orbit_class(ctx: RealFormContext, ell: Subspace) -> tuple[int, int]:
    n = ctx.n_total
    wplus = Subspace(n, [{i: ONE} for i in range(ctx.p)])
    wminus = Subspace(n, [{i: ONE} for i in range(ctx.p, n)])
    return (ell & wplus).dim, (ell & wminus).dim


def stabilizer_in_k(ctx: RealFormContext, ell: Subspace) -> LieSubalgebra:
    """{X in k : X ell in ell}, solved as an exact linear system on the basis of k."""
    n = ctx.n_total
    kb = ctx.k.basis()
    ws = ell.basis()
    if not ws:
        return ctx.k
    images = []
    for x in kb:
        img = {}
        for j, w in enumerate(ws):
            for t, val in ell.residual(sp_matvec(x, w, n)).items():
                img[j * n + t] = val
        images.append(img)
    rel = linear_relations(images, n * len(ws))
    vecs = [ctx.k.space.combine([c.get(t, ZERO) for t in range(len(kb))]) for c in rel.basis()]
    return LieSubalgebra.checked(n, Subspace(n * n, vecs))


def cr_algebra(d: OrbitDescriptor) -> CRAlgebra:
    """CR algebra of M_0(a, b) at the certified base point."""
    ctx = RealFormContext(d.p, d.q)
    ell = base_point(d)
    _certify(ctx, ell, d)
    return CRAlgebra(ctx, stabilizer_in_k(ctx, ell))


def _certify(ctx, ell, d) -> tuple[bool, bool]:
    sig = signature_of_restriction(ctx, ell)
    cls = k_orbit_class(ctx, ell)
    ok_sig = (sig.plus, sig.minus, sig.zero) == (d.a, d.b, d.c)
    ok_cls = cls == (d.a, d.b)
    if not (ok_sig and ok_cls and ell.dim == d.m):
        raise InternalConsistencyError(f"base point for {d.label} fails certification: signature {sig}, class {cls}")
    return ok_sig, ok_cls


@dataclass(frozen=True)
class OrbitReport:
    descriptor: OrbitDescriptor
    dims: dict
    oracle: dict
    formula: dict
    flags: dict
    discrepancies: list = field(default_factory=list)
    levi: dict | None = None

    def to_json(self) -> dict:
        d = self.descriptor
        out = {
            "p": d.p,
            "q": d.q,
            "m": d.m,
            "a": d.a,
            "b": d.b,
            "c": d.c,
            "block_sizes": list(d.block_sizes),
            "dims": dict(self.dims),
            "oracle": dict(self.oracle),
            "formula": dict(self.formula),
            "flags": dict(self.flags),
            "discrepancies": [dict(x) for x in self.discrepancies],
        }
        if self.levi is not None:
            out["levi"] = dict(self.levi)
        return out


def orbit_report(d: OrbitDescriptor, levi: bool = False, seed: int = 0, samples: int = 32) -> OrbitReport:
    """Oracle invariants of M_0(a, b) next to the closed-form counts.

    With ``levi=True`` the sampled pseudoconcavity estimate is attached and
    compared with the closed-form mu; a failed comparison is a discrepancy.
    """
    a = cr_algebra(d)
    ctx = a.context
    n_or, k_or = a.n_cr, a.k_cr
    dims = {
        "k0": ctx.k.dim,
        "v0": a.v_r.dim,
        "v": a.v.dim,
        "M0_real": ctx.k.dim - a.v_r.dim,
        "Mminus_complex": ctx.k.dim - a.v.dim,
    }
    if dims["M0_real"] != 2 * n_or + k_or:
        raise InternalConsistencyError(f"{d.label}: dim M0 = {dims['M0_real']} but 2n+k = {2 * n_or + k_or}")
    if dims["Mminus_complex"] != n_or + k_or:
        raise InternalConsistencyError(f"{d.label}: dim M- = {dims['Mminus_complex']} but n+k = {n_or + k_or}")
    nred = is_n_reductive(a)
    hnr = str(is_hnr(a)) if nred else "no"
    formula = {"n": d.formula_n(), "k": d.formula_k(), "mu": d.formula_mu()}
    disc = [
        {"field": f, "formula_value": formula[f], "oracle_value": o}
        for f, o in (("n", n_or), ("k", k_or))
        if formula[f] != o
    ]
    flags = {
        "n_reductive": nred,
        "hnr": hnr,
        "open_orbit": d.c == 0,
        "minimal": (d.a, d.b) == (d.p0, d.q0),
        "totally_real": n_or == 0,
    }
    levi_out = None
    if levi:
        est = pseudoconcavity_estimate(a, seed=seed, count=samples, closed_form_mu=formula["mu"])
        levi_out = est.to_json()
        if est.discrepancy is not None:
            disc.append({"field": "mu", "formula_value": formula["mu"], "oracle_value": est.sampled_min})
    return OrbitReport(d, dims, {"n": n_or, "k": k_or}, formula, flags, disc, levi_out)


@dataclass(frozen=True)
class DualPair:
    descriptor: OrbitDescriptor
    plus_tag: str
    minus_tag: str
    certificate: dict

    def to_json(self) -> dict:
        d = self.descriptor
        return {
            "p": d.p,
            "q": d.q,
            "m": d.m,
            "a": d.a,
            "b": d.b,
            "c": d.c,
            "M_plus": self.plus_tag,
            "M_minus": self.minus_tag,
            "certificate": dict(self.certificate),
        }


def duality_catalog(p: int, q: int, m: int) -> list[DualPair]:
    """Pair M_+(a,b) with M_-(a,b), certified by a common base point."""
    out = []
    ctx = RealFormContext(p, q)
    for d in enumerate_orbits(p, q, m):
        ell = base_point(d)
        sig = signature_of_restriction(ctx, ell)
        cls = k_orbit_class(ctx, ell)
        cert = {
            "base_point": [[str(x) for x in row] for row in ell.basis_matrix.tolist()],
            "signature": [sig.plus, sig.minus, sig.zero],
            "in_M_plus": (sig.plus, sig.minus) == (d.a, d.b),
            "intersections": list(cls),
            "in_M_minus": cls == (d.a, d.b),
            "open_orbit": d.c == 0,
            "minimal": (d.a, d.b) == (d.p0, d.q0),
        }
        out.append(DualPair(d, f"M+({d.a},{d.b})", f"M-({d.a},{d.b})", cert))
    return out


CSV_FIELDS = [
    "p", "q", "m", "a", "b", "c", "block_sizes",
    "dims.k0", "dims.v0", "dims.v", "dims.M0_real", "dims.Mminus_complex",
    "oracle.n", "oracle.k", "formula.n", "formula.k", "formula.mu",
    "flags.n_reductive", "flags.hnr", "flags.open_orbit", "flags.minimal", "flags.totally_real",
    "discrepancies",
]


def _csv_row(rec: dict) -> list:
    row = []
    for f in CSV_FIELDS:
        if f == "block_sizes":
            row.append(" ".join(str(x) for x in rec["block_sizes"]))
        elif f == "discrepancies":
            row.append(";".join(f"{x['field']}:{x['formula_value']}/{x['oracle_value']}" for x in rec["discrepancies"]))
        elif "." in f:
            top, sub = f.split(".")
            v = rec[top][sub]
            row.append(str(v).lower() if isinstance(v, bool) else v)
        else:
            row.append(rec[f])
    return row


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        w.writerow(_csv_row(r.to_json() if hasattr(r, "to_json") else r))
    return buf.getvalue()
