import os
import subprocess
import sys

import numpy as np
import pytest

from capelli import kernels
from capelli.kernels import _numpy
from capelli.kernels.tables import perm_index, primes_below

numba_impl = pytest.importorskip("capelli.kernels._numba")

P = 2147483647


def _case(K, degrees, seed):
    rng = np.random.default_rng(seed)
    idx = perm_index(K)
    A = rng.integers(0, P, size=(idx.size, degrees), dtype=np.int64)
    s = list(range(K))
    s[0], s[K - 1] = s[K - 1], s[0]
    return idx, A, idx.right_table(s)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_linear_factor_backends_agree(seed):
    idx, A, table = _case(5, 4, seed)
    a = np.int64(P - 3)
    assert np.array_equal(_numpy.linear_factor_step(A, a, table, np.int64(P)),
                          numba_impl.linear_factor_step(A, a, table, np.int64(P)))


@pytest.mark.parametrize("seed", [0, 1])
def test_convolution_backends_agree(seed):
    idx, A, _ = _case(4, 3, seed)
    rng = np.random.default_rng(seed + 10)
    tables = np.stack([idx.right_table(rng.permutation(4)) for _ in range(5)])
    w = rng.integers(0, P, size=5, dtype=np.int64)
    assert np.array_equal(_numpy.convolve_right(A, w, tables, np.int64(P)),
                          numba_impl.convolve_right(A, w, tables, np.int64(P)))


def test_linear_factor_matches_definition():
    idx, A, table = _case(3, 3, 5)
    A = A % 97
    out = _numpy.linear_factor_step(A, np.int64(4), table, np.int64(97))
    for g in range(idx.size):
        for d in range(3):
            want = 4 * A[g, d] - (A[g, d - 1] if d else 0) - A[table[g], d]
            assert out[g, d] == want % 97


def test_right_table_composes():
    idx = perm_index(4)
    s = [1, 0, 3, 2]
    table = idx.right_table(s)
    for g in range(idx.size):
        perm = idx.perms[g]
        assert list(idx.perms[table[g]]) == [perm[k] for k in s]


def test_primes():
    ps = primes_below(100, 3)
    assert ps == [97, 89, 83]


def test_backend_flag_selects_numpy():
    env = dict(os.environ, CAPELLI_BACKEND="numpy")
    code = "from capelli import kernels; from capelli.fusion import pole_order_phi; print(kernels.BACKEND, pole_order_phi((2, 1), (2, 1)))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == "numpy"
    from capelli.fusion import pole_order_phi

    assert int(out.stdout.split()[1]) == pole_order_phi((2, 1), (2, 1))


def test_unknown_backend_rejected():
    env = dict(os.environ, CAPELLI_BACKEND="fortran")
    out = subprocess.run([sys.executable, "-c", "import capelli.kernels"], env=env, capture_output=True, text=True)
    assert out.returncode != 0 and "CAPELLI_BACKEND" in out.stderr


def test_default_backend():
    assert kernels.BACKEND in ("numba", "numpy")
