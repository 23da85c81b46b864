"""Dense matrix substrate: four-part decomposition of complex matrices,
self-adjoint eigensolvers and PSD decisions.

Matrices are plain :class:`numpy.ndarray` objects (``float64`` or
``complex128``, square).  Nothing here mutates its inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import NamedTuple

import numpy as np

from realqt import _kernels
from realqt._config import ALGEBRA_TOL, psd_tol
from realqt.errors import NotHermitian, NotSymmetric


class Part(str, Enum):
    RE = "Re"
    IM = "Im"
    SYM = "Sym"
    ASYM = "ASym"
    HERM = "Herm"
    AHERM = "AHerm"


class QuadDecomposition(NamedTuple):
    """``m == a + 1j*b + 1j*(c + 1j*d)`` with ``a, c`` symmetric and ``b, d``
    antisymmetric, all real."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.a + 1j * self.b + 1j * (self.c + 1j * self.d)


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted in descending order, plus the tolerance used
    for any sign decision made on them."""

    values: np.ndarray
    tol: float
    vectors: np.ndarray | None = None

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        order = np.argsort(vals)[::-1]
        object.__setattr__(self, "values", vals[order])
        if self.vectors is not None:
            object.__setattr__(self, "vectors", self.vectors[:, order])

    def __len__(self) -> int:
        return len(self.values)

    @property
    def min(self) -> float:
        return float(self.values[-1])

    @property
    def max(self) -> float:
        return float(self.values[0])


def sym(m: np.ndarray) -> np.ndarray:
    return (m + m.T) / 2


def asym(m: np.ndarray) -> np.ndarray:
    return (m - m.T) / 2


def quad_decompose(m: np.ndarray) -> QuadDecomposition:
    m = np.asarray(m, dtype=complex)
    return QuadDecomposition(
        a=sym(m.real),
        b=asym(m.imag),
        c=sym(m.imag),
        d=-asym(m.real),
    )


def parts(m: np.ndarray, kind: Part | str) -> np.ndarray:
    """Return the named part of ``m``.

    ``Re``/``Im`` are real arrays; the other four keep the dtype of ``m``.
    """
    kind = Part(kind)
    m = np.asarray(m)
    if kind is Part.RE:
        return np.real(m).astype(float)
    if kind is Part.IM:
        return np.imag(m).astype(float)
    if kind is Part.SYM:
        return sym(m)
    if kind is Part.ASYM:
        return asym(m)
    if kind is Part.HERM:
        return (m + m.conj().T) / 2
    return (m - m.conj().T) / 2


def _check_square(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")


def is_symmetric(m: np.ndarray, tol: float = ALGEBRA_TOL) -> bool:
    m = np.asarray(m)
    return bool(np.abs(m - m.T).max(initial=0.0) <= tol)


def is_antisymmetric(m: np.ndarray, tol: float = ALGEBRA_TOL) -> bool:
    m = np.asarray(m)
    return bool(np.abs(m + m.T).max(initial=0.0) <= tol)


def is_hermitian(m: np.ndarray, tol: float = ALGEBRA_TOL) -> bool:
    m = np.asarray(m)
    return bool(np.abs(m - m.conj().T).max(initial=0.0) <= tol)


def eig_sym(s: np.ndarray, tol: float | None = None, vectors: bool = False) -> Spectrum:
    """Spectrum of a real symmetric matrix."""
    tol = psd_tol() if tol is None else tol
    s = np.asarray(s)
    _check_square(s)
    if np.iscomplexobj(s):
        if np.abs(s.imag).max() > tol:
            raise NotSymmetric("matrix has a non-zero imaginary part")
        s = s.real
    if not is_symmetric(s, tol):
        raise NotSymmetric(f"|S - S^T|_max = {np.abs(s - s.T).max():.3e} exceeds {tol:g}")
    w, v = _kernels.herm_eigh(sym(s.astype(float)), want_vectors=vectors)
    return Spectrum(w, tol, v)


def eig_herm(h: np.ndarray, tol: float | None = None, vectors: bool = False) -> Spectrum:
    """Spectrum of a complex Hermitian matrix."""
    tol = psd_tol() if tol is None else tol
    h = np.asarray(h, dtype=complex)
    _check_square(h)
    if not is_hermitian(h, tol):
        raise NotHermitian(f"|H - H^†|_max = {np.abs(h - h.conj().T).max():.3e} exceeds {tol:g}")
    w, v = _kernels.herm_eigh(parts(h, Part.HERM), want_vectors=vectors)
    return Spectrum(w, tol, v)


def is_psd(spec: Spectrum) -> bool:
    return spec.min >= -spec.tol


def kron(*mats: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, left to right."""
    return reduce(np.kron, mats)
