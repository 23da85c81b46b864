"""Seeded random generators for states, effects, POVMs and unitaries.

All functions take an explicit :class:`numpy.random.Generator`; there is no
module-level randomness.
"""
from __future__ import annotations

import numpy as np


def ginibre(d: int, rng: np.random.Generator, cols: int | None = None) -> np.ndarray:
    cols = d if cols is None else cols
    return (rng.standard_normal((d, cols)) + 1j * rng.standard_normal((d, cols))) / np.sqrt(2)


def random_hermitian(d: int, rng: np.random.Generator) -> np.ndarray:
    g = ginibre(d, rng)
    return (g + g.conj().T) / 2


def random_complex(d: int, rng: np.random.Generator) -> np.ndarray:
    return ginibre(d, rng)


def random_density(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """``G G^† / Tr`` with ``G`` a ``d x rank`` Ginibre matrix."""
    g = ginibre(d, rng, rank)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure(d: int, rng: np.random.Generator) -> np.ndarray:
    return random_density(d, rng, rank=1)


def random_psd(d: int, rng: np.random.Generator) -> np.ndarray:
    g = ginibre(d, rng)
    return g @ g.conj().T


def random_indefinite(d: int, rng: np.random.Generator, gap: float = 0.05) -> np.ndarray:
    """Hermitian matrix with at least one eigenvalue below ``-gap`` and one
    above ``+gap``.  Needs ``d >= 2``."""
    if d < 2:
        raise ValueError("an indefinite Hermitian matrix needs d >= 2")
    while True:
        h = random_hermitian(d, rng)
        w = np.linalg.eigvalsh(h)
        h = h - np.eye(d) * (w[0] + w[-1]) / 2
        w = np.linalg.eigvalsh(h)
        if w[0] < -gap and w[-1] > gap:
            return h


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary: QR of a Ginibre matrix with the phases of
    ``diag(R)`` absorbed into ``Q``."""
    q, r = np.linalg.qr(ginibre(d, rng))
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_effect(d: int, rng: np.random.Generator) -> np.ndarray:
    """Effect ``0 <= e <= 1`` with uniform eigenvalues in a random basis."""
    u = random_unitary(d, rng)
    return (u * rng.uniform(0.0, 1.0, d)) @ u.conj().T


def random_povm(d: int, k: int, rng: np.random.Generator) -> list[np.ndarray]:
    """``k`` PSD elements summing to the identity."""
    raw = [random_psd(d, rng) for _ in range(k)]
    total = sum(raw)
    w, v = np.linalg.eigh(total)
    inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
    out = [inv_sqrt @ g @ inv_sqrt for g in raw]
    return [(p + p.conj().T) / 2 for p in out]
