"""The compiled and pure-Python echelon kernels must agree row for row."""
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from crkit.exact import _echelon_py

try:
    from crkit.exact import _echelon_c
except ImportError:  # extension not built
    _echelon_c = None

KERNELS = [_echelon_py] + ([_echelon_c] if _echelon_c else [])

entry = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda t: t != (0, 0))
rows = st.lists(st.dictionaries(st.integers(0, 7), entry, max_size=6), max_size=10)


@pytest.mark.parametrize("mod", KERNELS, ids=lambda m: m.BACKEND)
def test_kernel_basic(mod):
    e = mod.Echelon(3)
    assert e.insert({0: (0, 1), 2: (2, 0)})
    assert e.rows == {0: {0: (1, 0), 2: (0, -2)}}
    assert not e.insert({0: (0, 2), 2: (4, 0)})
    assert e.contains({0: (1, 0), 2: (0, -2)})
    assert e.pivots() == [0] and e.rank == 1


@pytest.mark.skipif(_echelon_c is None, reason="compiled kernel not built")
@given(rows)
def test_kernels_agree(rs):
    a, b = _echelon_py.Echelon(8), _echelon_c.Echelon(8)
    for r in rs:
        assert a.insert(dict(r)) == b.insert(dict(r))
    assert a.rows == b.rows
    probe = {0: (1, 1), 5: (2, -1)}
    assert a.contains(probe) == b.contains(probe)


@pytest.mark.parametrize("flag,expected", [("1", "python"), ("0", None)])
def test_backend_selection(flag, expected):
    env = dict(os.environ, CRKIT_PURE_PYTHON=flag)
    out = subprocess.run([sys.executable, "-c", "from crkit.exact import BACKEND; print(BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout.strip()
    assert out == (expected or ("cython" if _echelon_c else "python"))
