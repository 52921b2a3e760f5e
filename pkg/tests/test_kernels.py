"""The compiled kernels and the Python fallback must agree; linear algebra against sympy."""

from fractions import Fraction
import importlib
import os
import subprocess
import sys

import pytest
import sympy
from hypothesis import given, strategies as st

from ncalc import _backend, _kernels_py
from ncalc.linalg import Echelon, kernel, rank, solve

try:
    from ncalc import _kernels
except ImportError:  # build without a compiler
    _kernels = None

needs_compiled = pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")

sparse_vec = st.dictionaries(st.integers(0, 11), st.integers(-4, 4).map(Fraction), max_size=6)


def _pivot_rows(vectors):
    return Echelon(vectors).pivots


@needs_compiled
@given(st.lists(sparse_vec, max_size=8), sparse_vec)
def test_reduce_vector_backends_agree(rows, vec):
    pivots = _pivot_rows(rows)
    assert _kernels.reduce_vector(vec, pivots) == _kernels_py.reduce_vector(vec, pivots)


@needs_compiled
@given(st.lists(st.integers(0, 3), max_size=14).map(tuple))
def test_least_rotation_backends_agree(word):
    assert _kernels.least_rotation(word) == _kernels_py.least_rotation(word)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=12).map(tuple))
def test_least_rotation_is_minimal(word):
    k, rot = _kernels_py.least_rotation(word)
    rots = [word[i:] + word[:i] for i in range(len(word))]
    assert rot == min(rots)
    assert rots.index(rot) == k


def test_backend_selection():
    assert _backend.BACKEND in ("python", "cython")
    forced = os.environ.get("NCALC_PURE_PYTHON", "") in ("1", "true", "yes")
    if _kernels is not None:
        assert _backend.BACKEND == ("python" if forced else "cython")


def test_pure_python_env_forces_fallback():
    env = dict(os.environ, NCALC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from ncalc import _backend; print(_backend.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def _to_sympy(columns, nrows):
    return sympy.Matrix(nrows, len(columns), lambda i, j: columns[j].get(i, 0))


@given(st.lists(sparse_vec, max_size=7))
def test_rank_matches_sympy(cols):
    assert rank(cols) == _to_sympy(cols, 12).rank()


@given(st.lists(sparse_vec, min_size=1, max_size=6))
def test_kernel_vectors_are_in_kernel(cols):
    ker = kernel(cols)
    assert len(ker) == len(cols) - rank(cols)
    for v in ker:
        total = {}
        for j, c in v.items():
            for i, a in cols[j].items():
                total[i] = total.get(i, 0) + c * a
        assert not any(total.values())


@given(st.lists(sparse_vec, min_size=1, max_size=6), sparse_vec)
def test_solve(cols, target):
    x = solve(cols, target)
    M = _to_sympy(cols, 12)
    b = sympy.Matrix(12, 1, lambda i, _: target.get(i, 0))
    solvable = M.rank() == M.row_join(b).rank()
    assert (x is not None) == solvable
    if x is not None:
        got = {}
        for j, c in x.items():
            for i, a in cols[j].items():
                got[i] = got.get(i, 0) + c * a
        assert {i: c for i, c in got.items() if c} == {i: c for i, c in target.items() if c}
