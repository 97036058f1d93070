"""Select the echelon kernel: compiled extension if built, else pure Python.

Set ``CRKIT_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _echelon_py

if os.environ.get("CRKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _echelon_py
else:
    try:
        from . import _echelon_c as _impl
    except ImportError:
        _impl = _echelon_py

Echelon = _impl.Echelon
BACKEND = _impl.BACKEND
