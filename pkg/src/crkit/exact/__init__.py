"""Exact arithmetic over the Gaussian rationals Q(i) and canonical linear algebra."""
from ._backend import BACKEND
from .inertia import NotHermitianError, hermitian_inertia
from .matrix import DimensionError, ExactMatrix
from .scalar import I, ONE, ZERO, Scalar
from .subspace import Subspace, as_sparse, intersect, kernel, linear_relations, member, rref, subspace_sum

__all__ = [
    "BACKEND",
    "DimensionError",
    "ExactMatrix",
    "I",
    "NotHermitianError",
    "ONE",
    "Scalar",
    "Subspace",
    "ZERO",
    "as_sparse",
    "hermitian_inertia",
    "intersect",
    "kernel",
    "linear_relations",
    "member",
    "rref",
    "subspace_sum",
]
