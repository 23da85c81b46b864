import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from realqt.errors import NotHermitian, NotSymmetric
from realqt.matcore import (
    Part,
    Spectrum,
    eig_herm,
    eig_sym,
    is_antisymmetric,
    is_hermitian,
    is_psd,
    is_symmetric,
    kron,
    parts,
    quad_decompose,
)
from realqt.sampling import random_complex, random_hermitian

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def complex_square(draw, max_dim=5):
    d = draw(st.integers(1, max_dim))
    re = draw(arrays(float, (d, d), elements=finite))
    im = draw(arrays(float, (d, d), elements=finite))
    return re + 1j * im


def test_quad_decompose_identity():
    q = quad_decompose(np.eye(3))
    np.testing.assert_array_equal(q.a, np.eye(3))
    for part in (q.b, q.c, q.d):
        np.testing.assert_array_equal(part, 0)


def test_quad_decompose_imaginary_identity():
    q = quad_decompose(1j * np.eye(3))
    np.testing.assert_array_equal(q.c, np.eye(3))
    for part in (q.a, q.b, q.d):
        np.testing.assert_array_equal(part, 0)


@given(complex_square())
def test_quad_decompose_reconstructs(m):
    q = quad_decompose(m)
    np.testing.assert_allclose(q.reconstruct(), m, atol=1e-12)
    assert is_symmetric(q.a, 0) and is_symmetric(q.c, 0)
    assert is_antisymmetric(q.b, 0) and is_antisymmetric(q.d, 0)


@given(complex_square())
def test_part_pairs_reconstruct(m):
    np.testing.assert_allclose(parts(m, Part.RE) + 1j * parts(m, Part.IM), m, atol=1e-12)
    np.testing.assert_allclose(parts(m, "Sym") + parts(m, "ASym"), m, atol=1e-12)
    np.testing.assert_allclose(parts(m, "Herm") + parts(m, "AHerm"), m, atol=1e-12)


def test_herm_parts_of_hermitian(rng):
    h = random_hermitian(4, rng)
    np.testing.assert_allclose(parts(h, "Herm"), h, atol=1e-15)
    np.testing.assert_allclose(parts(h, "AHerm"), 0, atol=1e-15)


def test_herm_part_oracle(rng):
    m = random_complex(4, rng)
    np.testing.assert_allclose(parts(m, "Herm"), (m + m.conj().T) / 2, atol=1e-15)


def test_eig_sym_small_examples():
    np.testing.assert_allclose(eig_sym(np.diag([1.0, 3.0])).values, [3, 1])
    np.testing.assert_allclose(eig_sym(np.array([[0.0, 1], [1, 0]])).values, [1, -1], atol=1e-14)


def test_eig_herm_small_examples():
    np.testing.assert_allclose(eig_herm(np.eye(2)).values, [1, 1])
    y = np.array([[0, -1j], [1j, 0]])
    np.testing.assert_allclose(eig_herm(y).values, [1, -1], atol=1e-14)


def test_eig_rejects_nonsymmetric():
    with pytest.raises(NotSymmetric):
        eig_sym(np.array([[0.0, 1], [0, 0]]))
    with pytest.raises(NotHermitian):
        eig_herm(np.array([[0, 1j], [1j, 0]]))


@pytest.mark.parametrize("d", [1, 3, 8, 17])
def test_eig_trace_and_reconstruction(rng, d):
    h = random_hermitian(d, rng)
    spec = eig_herm(h, vectors=True)
    assert np.all(np.diff(spec.values) <= 0)
    assert abs(spec.values.sum() - np.trace(h).real) <= 1e-9 * d
    q = spec.vectors
    np.testing.assert_allclose(q @ np.diag(spec.values) @ q.conj().T, h, atol=1e-9)

    s = h.real
    spec = eig_sym(s, vectors=True)
    np.testing.assert_allclose(spec.vectors @ np.diag(spec.values) @ spec.vectors.T, s, atol=1e-9)


def test_is_psd_band():
    assert is_psd(Spectrum([1, 0.5, 0], 1e-9))
    assert is_psd(Spectrum([-1e-12], 1e-9))
    assert not is_psd(Spectrum([0.75, -0.25], 1e-9))
    assert Spectrum([0.0, 2.0, -1.0], 0).max == 2.0


def test_predicates(rng):
    h = random_hermitian(3, rng)
    assert is_hermitian(h)
    assert not is_hermitian(h + 1e-6j * np.eye(3))


def test_kron_examples(rng):
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    a, b, c, d = (random_complex(k, rng) for k in (2, 3, 2, 3))
    assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) < 1e-12
    np.testing.assert_allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-12)
    np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-12)
    np.testing.assert_allclose(kron(a, b, c), kron(a, kron(b, c)), atol=1e-12)


@settings(max_examples=30)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_eig_matches_lapack(d, seed):
    h = random_hermitian(d, np.random.default_rng(seed))
    np.testing.assert_allclose(eig_herm(h).values, np.linalg.eigvalsh(h)[::-1], atol=1e-10)
