"""Numerical probe of the Mostow-type map

    (x, T, Y, Z) -> x exp(iT) exp(iY) exp(Z),   x in K_0, T in m_0, Y in v_0, Z in v_n,

from K_0 x (m_0 + v_0 + v_n) to K.  This is the only floating point part of
the package.  Exact bases come from the CR algebra and are converted once.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm, logm, polar

from .conj import real_points_basis
from .cralg import CRAlgebra, NotNReductiveError, is_n_reductive
from .levi import characteristic_space

__all__ = [
    "MostowFrame",
    "MostowPoint",
    "MostowProbeReport",
    "mostow_map",
    "jacobian",
    "jacobian_probe",
    "radius_sweep",
    "factor",
    "kappa",
    "exhaustion_phi_tube",
    "exhaustion_phi_hnr",
    "DEFAULT_STEP",
    "DEFAULT_TOLERANCE",
    "UNITARY_TOLERANCE",
]

DEFAULT_STEP = 1e-6
DEFAULT_TOLERANCE = 1e-8
UNITARY_TOLERANCE = 1e-10


def _np(vec: dict, n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=complex)
    for k, v in vec.items():
        out[k // n, k % n] = complex(v)
    return out


class MostowFrame:
    """Numeric bases of k_0, m_0, v_0 and v_n for one CR algebra."""

    def __init__(self, a: CRAlgebra):
        if not is_n_reductive(a):
            raise NotNReductiveError("the probe needs an n-reductive CR algebra")
        n = self.n = a.n
        self.k0 = [_np(x, n) for x in real_points_basis(a.context.k.space, n)]
        self.m0 = [_np(x, n) for x in real_points_basis(characteristic_space(a), n)]
        self.v0 = [_np(x, n) for x in real_points_basis(a.v_r.space, n)]
        self.vn = [_np(x, n) for x in a.v_n.basis()]
        kb = [_np(x, n) for x in a.context.k.basis()]
        # real coordinates on k: columns are realified basis vectors B and iB
        cols = []
        for b in kb:
            for c in (b, 1j * b):
                cols.append(np.concatenate([c.real.ravel(), c.imag.ravel()]))
        self._kreal = np.array(cols).T
        self.dim_k = len(kb)
        total = len(self.k0) + len(self.m0) + len(self.v0) + 2 * len(self.vn)
        if total != 2 * self.dim_k:
            raise AssertionError(f"coordinate count {total} differs from real dim of K {2 * self.dim_k}")

    @property
    def shape(self) -> tuple[int, int, int, int]:
        return len(self.k0), len(self.m0), len(self.v0), len(self.vn)

    def lift(self, basis, coords) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=complex)
        for c, b in zip(coords, basis):
            out = out + c * b
        return out

    def k_coords(self, x: np.ndarray) -> np.ndarray:
        """Real coordinates of a matrix in k (least squares; exact for members)."""
        rhs = np.concatenate([x.real.ravel(), x.imag.ravel()])
        sol, *_ = np.linalg.lstsq(self._kreal, rhs, rcond=None)
        return sol


@dataclass(frozen=True)
class MostowPoint:
    x: np.ndarray
    T: tuple
    Y: tuple
    Z: tuple

    def __post_init__(self):
        x = np.asarray(self.x, dtype=complex)
        if not np.all(np.isfinite(x)) or not all(
            np.isfinite(complex(c)) for c in (*self.T, *self.Y, *self.Z)
        ):
            raise ValueError("non-finite Mostow coordinates")
        if np.linalg.norm(x @ x.conj().T - np.eye(x.shape[0])) > UNITARY_TOLERANCE:
            raise ValueError("x is not unitary within tolerance")


def mostow_map(frame: MostowFrame, pt: MostowPoint, radius: float | None = None) -> np.ndarray:
    t = frame.lift(frame.m0, pt.T)
    if radius is not None and kappa(t) >= radius ** 2:
        raise ValueError("T lies outside the declared radius")
    y = frame.lift(frame.v0, pt.Y)
    z = frame.lift(frame.vn, pt.Z)
    return np.asarray(pt.x, dtype=complex) @ expm(1j * t) @ expm(1j * y) @ expm(z)


def _unpack(frame: MostowFrame, u: np.ndarray):
    a, b, c, d = frame.shape
    X = u[:a]
    T = u[a:a + b]
    Y = u[a + b:a + b + c]
    Z = u[a + b + c:a + b + c + d] + 1j * u[a + b + c + d:]
    return X, T, Y, Z


def _eval(frame: MostowFrame, x0: np.ndarray, u: np.ndarray) -> np.ndarray:
    X, T, Y, Z = _unpack(frame, u)
    x = x0 @ expm(frame.lift(frame.k0, X))
    return x @ expm(1j * frame.lift(frame.m0, T)) @ expm(1j * frame.lift(frame.v0, Y)) @ expm(frame.lift(frame.vn, Z))


def jacobian(frame: MostowFrame, x0: np.ndarray, u: np.ndarray, step: float = DEFAULT_STEP) -> np.ndarray:
    """Left-trivialised central-difference Jacobian, a square real matrix of size 2 dim k."""
    g = _eval(frame, x0, u)
    ginv = np.linalg.inv(g)
    cols = []
    for j in range(len(u)):
        e = np.zeros_like(u)
        e[j] = step
        d = (_eval(frame, x0, u + e) - _eval(frame, x0, u - e)) / (2 * step)
        cols.append(frame.k_coords(ginv @ d))
    return np.array(cols).T


def _ball(rng: np.random.Generator, dim: int, r: float) -> np.ndarray:
    if dim == 0:
        return np.zeros(0)
    v = rng.normal(size=dim)
    v /= np.linalg.norm(v)
    return v * r * rng.uniform() ** (1.0 / dim)


def _scale_into(frame: MostowFrame, basis, coords: np.ndarray, r: float) -> np.ndarray:
    # keep kappa(lift, lift) = ||lift||_F^2 strictly below r^2
    if len(coords) == 0:
        return coords
    nrm = np.linalg.norm(frame.lift(basis, coords))
    if nrm >= r and nrm > 0:
        coords = coords * (0.999 * r / nrm)
    return coords


@dataclass(frozen=True)
class MostowProbeReport:
    samples: int
    radius: float
    min_singular_value: float
    full_rank_everywhere: bool
    seed: int
    step: float = DEFAULT_STEP
    tolerance: float = DEFAULT_TOLERANCE
    failures: tuple = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "radius": self.radius,
            "min_singular_value": self.min_singular_value,
            "full_rank_everywhere": self.full_rank_everywhere,
            "seed": self.seed,
            "step": self.step,
            "tolerance": self.tolerance,
            "failures": list(self.failures),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def jacobian_probe(
    a: CRAlgebra,
    radius: float = 0.5,
    samples: int = 100,
    seed: int = 42,
    step: float = DEFAULT_STEP,
    tolerance: float = DEFAULT_TOLERANCE,
    frame: MostowFrame | None = None,
) -> MostowProbeReport:
    """Smallest singular value of the Jacobian over seeded samples inside the radius.

    The first sample is always the origin.  Each sample draws x = exp(X) with
    X in k_0 and T, Y, Z with Frobenius norm below ``radius``.
    """
    frame = frame or MostowFrame(a)
    rng = np.random.default_rng(seed)
    a_, b_, c_, d_ = frame.shape
    smin = math.inf
    failures = []
    for s in range(samples):
        if s == 0:
            x0 = np.eye(frame.n, dtype=complex)
            u = np.zeros(2 * frame.dim_k)
        else:
            x0 = expm(frame.lift(frame.k0, rng.normal(size=a_)))
            T = _scale_into(frame, frame.m0, _ball(rng, b_, radius), radius)
            Y = _scale_into(frame, frame.v0, _ball(rng, c_, radius), radius)
            zc = _ball(rng, 2 * d_, radius)
            Zc = _scale_into(frame, frame.vn, zc[:d_] + 1j * zc[d_:], radius)
            u = np.concatenate([np.zeros(a_), T, Y, Zc.real, Zc.imag])
        try:
            sv = np.linalg.svd(jacobian(frame, x0, u, step), compute_uv=False)
            val = float(sv[-1]) if len(sv) else math.inf
        except (np.linalg.LinAlgError, ValueError) as exc:
            failures.append({"sample": s, "error": str(exc)})
            continue
        if val <= tolerance:
            failures.append({"sample": s, "min_singular_value": val})
        smin = min(smin, val)
    full = not failures and smin > tolerance
    return MostowProbeReport(samples, float(radius), smin, full, seed, step, tolerance, tuple(failures))


def radius_sweep(a: CRAlgebra, radii, samples: int = 20, seed: int = 42) -> list[MostowProbeReport]:
    """Probe reports at increasing radii; monotonicity is reported, not asserted."""
    frame = MostowFrame(a)
    return [jacobian_probe(a, r, samples, seed, frame=frame) for r in radii]


# --- factorisation ------------------------------------------------------------------------

def factor(frame: MostowFrame, g: np.ndarray, tol: float = 1e-12, max_iter: int = 50):
    """Recover (x, T, Y, Z) from g = x exp(iT) exp(iY) exp(Z).

    Starts from the polar decomposition g = U P and refines by Newton steps
    on the left-trivialised residual log(g(u)^-1 g).
    """
    unitary, _ = polar(g, side="right")
    x0 = unitary
    u = np.zeros(2 * frame.dim_k)
    for _ in range(max_iter):
        cur = _eval(frame, x0, u)
        res = frame.k_coords(logm(np.linalg.solve(cur, g)))
        if np.linalg.norm(res) < tol:
            break
        u = u + np.linalg.solve(jacobian(frame, x0, u), res)
    else:
        raise ArithmeticError("factorisation did not converge")
    X, T, Y, Z = _unpack(frame, u)
    x = x0 @ expm(frame.lift(frame.k0, X))
    return MostowPoint(x, tuple(T), tuple(Y), tuple(Z))


# --- exhaustion functions ---------------------------------------------------------------------

def kappa(t) -> float:
    """kappa(T, T) = -Re tr(T T); the squared Frobenius norm for anti-Hermitian T."""
    t = np.asarray(t, dtype=complex)
    return float(-np.trace(t @ t).real)


def _kappa_of(t) -> float:
    if np.isscalar(t):
        return float(t)
    if hasattr(t, "tolist") and not isinstance(t, np.ndarray):
        t = np.array([[complex(x) for x in row] for row in t.tolist()])
    return kappa(t)


def exhaustion_phi_tube(t, r: float) -> float:
    """kappa(T,T) / (r^2 - kappa(T,T)); ``t`` is a matrix in m_0 or the value kappa(T,T)."""
    kt = _kappa_of(t)
    if not 0 <= kt < r * r:
        raise ValueError("T lies outside the tube kappa(T,T) < r^2")
    return kt / (r * r - kt)


def exhaustion_phi_hnr(t) -> float:
    kt = _kappa_of(t)
    if kt < 0:
        raise ValueError("kappa(T,T) must be nonnegative")
    return kt
