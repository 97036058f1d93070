"""Exact Lie-algebraic invariants of compact homogeneous CR manifolds."""
__version__ = "0.1.0"
