import numpy as np
import pytest

from realqt import _kernels
from realqt.sampling import random_hermitian

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


EIGH_PATHS = [
    pytest.param("jacobi", True, marks=needs_numba, id="jacobi-numba"),
    pytest.param("jacobi", False, id="jacobi-python"),
    pytest.param("lapack", None, id="lapack"),
]


@pytest.mark.parametrize("method,use_numba", EIGH_PATHS)
@pytest.mark.parametrize("d", [1, 2, 7, 24])
def test_eigh_paths_match_lapack(rng, method, use_numba, d):
    h = random_hermitian(d, rng)
    w, v = _kernels.herm_eigh(h, want_vectors=True, method=method, use_numba=use_numba)
    np.testing.assert_allclose(np.sort(w), np.linalg.eigvalsh(h), atol=1e-11)
    np.testing.assert_allclose(v @ np.diag(w) @ v.conj().T, h, atol=1e-11)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(d), atol=1e-11)

    s = h.real
    w, _ = _kernels.herm_eigh(s, method=method, use_numba=use_numba)
    np.testing.assert_allclose(np.sort(w), np.linalg.eigvalsh(s), atol=1e-11)


@pytest.mark.parametrize("method,use_numba", EIGH_PATHS)
def test_eigh_degenerate_spectrum(method, use_numba):
    # repeated eigenvalues and an exactly diagonal input
    a = np.kron(np.eye(4), np.diag([2.0, -1.0]))
    w, _ = _kernels.herm_eigh(a, method=method, use_numba=use_numba)
    np.testing.assert_allclose(np.sort(w), [-1] * 4 + [2] * 4, atol=1e-14)
    w, _ = _kernels.herm_eigh(np.zeros((3, 3)), method=method, use_numba=use_numba)
    np.testing.assert_array_equal(w, 0)


def test_eigh_unknown_method():
    with pytest.raises(ValueError):
        _kernels.herm_eigh(np.eye(2), method="qr")


@pytest.mark.parametrize("use_numba", [pytest.param(True, marks=needs_numba), False])
@pytest.mark.parametrize("dtype", [float, complex])
def test_mode_product(rng, use_numba, dtype):
    l_mat = rng.normal(size=(5, 4))
    t3 = rng.normal(size=(3, 4, 6)).astype(dtype)
    if dtype is complex:
        t3 = t3 + 1j * rng.normal(size=t3.shape)
    out = _kernels.mode_product(l_mat, t3, use_numba=use_numba)
    expected = np.stack([l_mat @ t3[p] for p in range(3)])
    np.testing.assert_allclose(out, expected, atol=1e-13)
    assert out.dtype == np.result_type(dtype, float)


def test_backend_name():
    kernel, eigh = _kernels.backend().split("+")
    assert kernel in ("numba", "numpy") and eigh in _kernels.EIGH_METHODS
