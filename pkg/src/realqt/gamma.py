"""The embedding of complex matrices into real matrices of twice the size.

``gamma(m)`` is ``kron(1, Re m) + kron(J, Im m)`` with ``J = [[0, -1], [1, 0]]``,
i.e. the block matrix ``[[Re m, -Im m], [Im m, Re m]]``.  On Hermitian input
the result is *special symmetric*: symmetric and commuting with
``J_d = kron(J, 1_d)``.

Besides the block form this module carries an explicit pair of orthonormal
bases (Hermitian matrices and special symmetric matrices) so the map can be
evaluated, and inverted, by basis expansion.  Orthonormal special symmetric
basis elements are ``gamma(H_j) / sqrt(2)``, so the expansion path carries an
explicit ``sqrt(2)`` to agree with the block form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from realqt._config import ALGEBRA_TOL, PSD_TOL
from realqt.errors import NotSpecialSymmetric, NotSymmetric, OddDimension
from realqt.matcore import asym, is_antisymmetric, is_symmetric, sym

ONE2 = np.eye(2)
J2 = np.array([[0.0, -1.0], [1.0, 0.0]])
Z2 = np.diag([1.0, -1.0])
SQRT2 = np.sqrt(2.0)


def identity_rep(d: int) -> np.ndarray:
    """``I_d``: the real representation of the scalar 1 (the identity)."""
    return np.eye(2 * d)


def j_rep(d: int) -> np.ndarray:
    """``J_d = J (x) 1_d``: the real representation of the imaginary unit."""
    return np.kron(J2, np.eye(d))


def z_rep(d: int) -> np.ndarray:
    """``Z_d = Z (x) 1_d``: the real representation of complex conjugation."""
    return np.kron(Z2, np.eye(d))


def half_dim(r: np.ndarray) -> int:
    n = r.shape[0]
    if n % 2:
        raise OddDimension(f"dimension {n} is odd")
    return n // 2


@dataclass(frozen=True)
class SpecialSymmetric:
    """A real ``2d x 2d`` matrix ``[[a, -b], [b, a]]`` with ``a`` symmetric and
    ``b`` antisymmetric."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NotSpecialSymmetric(f"block shapes {a.shape} and {b.shape} are incompatible")
        if not is_symmetric(a, ALGEBRA_TOL) or not is_antisymmetric(b, ALGEBRA_TOL):
            raise NotSpecialSymmetric("block a must be symmetric and block b antisymmetric")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def half_dim(self) -> int:
        return self.a.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self.a, -self.b], [self.b, self.a]])

    def __array__(self, dtype=None, copy=None):
        m = self.matrix
        return m if dtype is None else m.astype(dtype)

    @classmethod
    def from_matrix(cls, r: np.ndarray, tol: float = PSD_TOL) -> "SpecialSymmetric":
        r = np.asarray(r, dtype=float)
        if r.ndim != 2 or r.shape[0] != r.shape[1]:
            raise NotSpecialSymmetric(f"expected a square matrix, got shape {r.shape}")
        d = half_dim(r)
        if not is_special_symmetric(r, tol):
            raise NotSpecialSymmetric("matrix is not symmetric or does not commute with J")
        a = sym((r[:d, :d] + r[d:, d:]) / 2)
        b = asym((r[d:, :d] - r[:d, d:]) / 2)
        return cls(a, b)


@dataclass(frozen=True)
class ScalarRep:
    """Real ``2d x 2d`` representations of the scalars 1 and i."""

    half_dim: int
    i_mat: np.ndarray
    j_mat: np.ndarray


def scalar_rep(d: int) -> ScalarRep:
    return ScalarRep(d, identity_rep(d), j_rep(d))


def gamma(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    return np.kron(ONE2, m.real) + np.kron(J2, m.imag)


def _as_real_matrix(s) -> np.ndarray:
    if isinstance(s, SpecialSymmetric):
        return s.matrix
    return np.asarray(s, dtype=float)


def gamma_inv(s, tol: float = PSD_TOL) -> np.ndarray:
    """Read the Hermitian preimage ``a + i b`` off the blocks of ``s``."""
    if not isinstance(s, SpecialSymmetric):
        s = SpecialSymmetric.from_matrix(s, tol)
    return s.a + 1j * s.b


def is_special_symmetric(r: np.ndarray, tol: float = PSD_TOL) -> bool:
    r = np.asarray(r, dtype=float)
    d = half_dim(r)
    if not is_symmetric(r, tol):
        return False
    jd = j_rep(d)
    return bool(np.abs(jd @ r - r @ jd).max() <= tol)


def sy_complement_split(r: np.ndarray, tol: float = PSD_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Split a symmetric matrix into its J-commuting and J-anticommuting parts.

    Returns ``((r - J r J) / 2, (r + J r J) / 2)``; the first is special
    symmetric, the second anticommutes with ``J`` and is traceless.
    """
    r = np.asarray(r, dtype=float)
    d = half_dim(r)
    if not is_symmetric(r, tol):
        raise NotSymmetric("input must be symmetric")
    jd = j_rep(d)
    jrj = jd @ r @ jd
    return (r - jrj) / 2, (r + jrj) / 2


def conjugate_image(s) -> np.ndarray:
    """``Z_d s Z_d``, the image of entrywise complex conjugation."""
    r = _as_real_matrix(s)
    zd = z_rep(half_dim(r))
    return zd @ r @ zd


@dataclass(frozen=True)
class DualBases:
    """Orthonormal bases of the ``d x d`` Hermitian matrices and of the
    ``2d x 2d`` special symmetric matrices, paired index by index.

    Ordering: the ``d`` diagonal elements, then the ``d(d-1)/2`` real
    off-diagonal pairs ``j < k``, then the ``d(d-1)/2`` imaginary ones.
    """

    dim: int
    herm_basis: np.ndarray  # (d*d, d, d) complex
    sy_basis: np.ndarray  # (d*d, 2d, 2d) real

    def __len__(self) -> int:
        return self.dim * self.dim


def _unit(d: int, j: int, k: int) -> np.ndarray:
    e = np.zeros((d, d))
    e[j, k] = 1.0
    return e


def _placed(block: np.ndarray, row: int, col: int) -> np.ndarray:
    # block placed at position (row, col) of a 2x2 block layout, 1-based
    d = block.shape[0]
    out = np.zeros((2 * d, 2 * d))
    out[(row - 1) * d : row * d, (col - 1) * d : col * d] = block
    return out


@lru_cache(maxsize=None)
def _dual_bases_cached(d: int) -> DualBases:
    herm, sy_ = [], []
    for j in range(d):
        p = _unit(d, j, j)
        herm.append(p.astype(complex))
        sy_.append((_placed(p, 1, 1) + _placed(p, 2, 2)) / SQRT2)
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    for j, k in pairs:
        ejk, ekj = _unit(d, j, k), _unit(d, k, j)
        herm.append(((ejk + ekj) / SQRT2).astype(complex))
        sy_.append(
            (_placed(ejk, 1, 1) + _placed(ekj, 1, 1) + _placed(ejk, 2, 2) + _placed(ekj, 2, 2)) / 2
        )
    for j, k in pairs:
        ejk, ekj = _unit(d, j, k), _unit(d, k, j)
        herm.append(1j * (ejk - ekj) / SQRT2)
        sy_.append((-(_placed(ejk, 1, 2) - _placed(ekj, 1, 2)) + (_placed(ejk, 2, 1) - _placed(ekj, 2, 1))) / 2)
    hb = np.array(herm)
    sb = np.array(sy_)
    hb.setflags(write=False)
    sb.setflags(write=False)
    return DualBases(d, hb, sb)


def dual_bases(d: int) -> DualBases:
    if d < 1:
        raise ValueError("dimension must be positive")
    return _dual_bases_cached(int(d))


def gamma_by_basis(h: np.ndarray) -> np.ndarray:
    """``sqrt(2) * sum_j Tr[h H_j] S_j``; equals :func:`gamma` on Hermitian ``h``."""
    h = np.asarray(h, dtype=complex)
    bases = dual_bases(h.shape[0])
    coeffs = np.einsum("ab,jba->j", h, bases.herm_basis).real
    return SQRT2 * np.einsum("j,jab->ab", coeffs, bases.sy_basis)


def gamma_inv_by_basis(s) -> np.ndarray:
    """``sum_j Tr[s S_j] H_j / sqrt(2)``; equals :func:`gamma_inv` on special
    symmetric ``s``."""
    r = _as_real_matrix(s)
    bases = dual_bases(half_dim(r))
    coeffs = np.einsum("ab,jba->j", r, bases.sy_basis)
    return np.einsum("j,jab->ab", coeffs, bases.herm_basis) / SQRT2
