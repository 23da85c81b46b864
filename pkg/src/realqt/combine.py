"""Combination rules for composite systems and the multipartite maps.

Two rules select how subsystem representations are composed:

* ``Rule.TENSOR`` -- plain Kronecker product of the per-factor images, giving
  real matrices of size ``2**n * D``;
* ``Rule.DOT`` -- the J-compatible product :func:`dot`, giving ``2 * D``.

:func:`wedge` is the intermediate mixed-irrep product from which :func:`dot`
is obtained through the compression :func:`tau`.

Layout convention: every multipartite real matrix is stored in plain
Kronecker order, factor by factor, each factor laid out as
``(scalar 2) x (d_l)``.  Only :func:`tau` reorders scalar factors.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce

import numpy as np

from realqt import _kernels
from realqt._config import PSD_TOL, SUBSPACE_TOL
from realqt.errors import (
    DimMismatch,
    DimNotDivisibleBy4,
    JCommutationViolated,
    NotHermitian,
    OutOfSubspace,
)
from realqt.gamma import (
    J2,
    ONE2,
    SpecialSymmetric,
    dual_bases,
    gamma,
    half_dim,
    j_rep,
)
from realqt.matcore import is_hermitian

# 4x4 representation of {1, i} on two scalar factors
I_PAIR = 0.5 * (np.kron(ONE2, ONE2) - np.kron(J2, J2))
J_PAIR = 0.5 * (np.kron(ONE2, J2) + np.kron(J2, ONE2))


class Rule(str, Enum):
    TENSOR = "tensor"
    DOT = "dot"


@dataclass(frozen=True)
class SystemDims:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"invalid subsystem dimensions {self.dims!r}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def of(cls, dims) -> "SystemDims":
        return dims if isinstance(dims, SystemDims) else cls(tuple(dims))

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def total(self) -> int:
        return int(np.prod(self.dims))

    def codomain_dim(self, rule: Rule) -> int:
        return (2**self.n) * self.total if Rule(rule) is Rule.TENSOR else 2 * self.total


def normalization(rule: Rule, n: int) -> float:
    """The prefactor ``a`` of the multipartite map.

    Fixed by requiring the mapped identity effect to be the rule-combined
    identity and the Born pairing to be exact: ``a = 1 / c`` where ``c`` is
    the trace inflation of the rule (``2**n`` for TENSOR, 2 for DOT).
    """
    return 2.0**-n if Rule(rule) is Rule.TENSOR else 0.5


@dataclass(frozen=True)
class MappedVector:
    rule: Rule
    dims: SystemDims
    mat: np.ndarray

    def __post_init__(self):
        rule = Rule(self.rule)
        dims = SystemDims.of(self.dims)
        mat = np.asarray(self.mat, dtype=float)
        expected = dims.codomain_dim(rule)
        if mat.shape != (expected, expected):
            raise DimMismatch(f"{rule.value} rule on dims {dims.dims} needs {expected}x{expected}, got {mat.shape}")
        object.__setattr__(self, "rule", rule)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mat", mat)

    @property
    def a(self) -> float:
        return normalization(self.rule, self.dims.n)


# -- binary products ---------------------------------------------------------


def _real(s) -> np.ndarray:
    if isinstance(s, SpecialSymmetric):
        return s.matrix
    return np.asarray(s, dtype=float)


def wedge(s, t, tol: float = PSD_TOL) -> np.ndarray:
    """``(s (x) t - (J s) (x) (J t)) / 2`` for J-commuting ``s`` and ``t``."""
    s, t = _real(s), _real(t)
    for name, m in (("left", s), ("right", t)):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimMismatch(f"{name} operand is not square: {m.shape}")
    js, jt = j_rep(half_dim(s)), j_rep(half_dim(t))
    if np.abs(js @ s - s @ js).max() > tol or np.abs(jt @ t - t @ jt).max() > tol:
        raise JCommutationViolated("wedge operands must commute with J")
    return 0.5 * (np.kron(s, t) - np.kron(js @ s, jt @ t))


def _blocks(s, tol: float = PSD_TOL) -> tuple[np.ndarray, np.ndarray]:
    # blocks (a, b) of [[a, -b], [b, a]]; any J-commuting matrix has this form
    if isinstance(s, SpecialSymmetric):
        return s.a, s.b
    s = np.asarray(s, dtype=float)
    d = half_dim(s)
    jd = j_rep(d)
    if np.abs(jd @ s - s @ jd).max() > tol:
        raise JCommutationViolated("operand must commute with J")
    return (s[:d, :d] + s[d:, d:]) / 2, (s[d:, :d] - s[:d, d:]) / 2


def _assemble(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.block([[a, -b], [b, a]])


def dot(s, t):
    """The J-compatible product.

    For ``s = [[sa, -sb], [sb, sa]]`` and ``t`` likewise, the result has
    blocks ``sa (x) ta - sb (x) tb`` and ``sa (x) tb + sb (x) ta``, so that
    ``dot(gamma(m), gamma(n)) == gamma(kron(m, n))``.  Defined for every
    J-commuting pair; returns a :class:`SpecialSymmetric` when both operands
    are one, otherwise a plain array.
    """
    sa, sb = _blocks(s)
    ta, tb = _blocks(t)
    a = np.kron(sa, ta) - np.kron(sb, tb)
    b = np.kron(sa, tb) + np.kron(sb, ta)
    if isinstance(s, SpecialSymmetric) and isinstance(t, SpecialSymmetric):
        return SpecialSymmetric(a, b)
    return _assemble(a, b)


def _scalars_left(x: np.ndarray, d1: int, d2: int) -> np.ndarray:
    # (2, d1, 2, d2) x (2, d1, 2, d2) -> (2, 2, d1*d2) x (2, 2, d1*d2)
    big = x.reshape(2, d1, 2, d2, 2, d1, 2, d2)
    return big.transpose(0, 2, 1, 3, 4, 6, 5, 7).reshape(4, d1 * d2, 4, d1 * d2)


def tau(x: np.ndarray, dims: tuple[int, int]) -> np.ndarray:
    """Compress a ``4 d1 d2`` wedge product onto ``2 d1 d2``.

    ``dims`` gives the half-dimensions of the two wedged factors, needed to
    move both scalar factors to the left before the partial traces.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[0] % 4:
        raise DimNotDivisibleBy4(f"dimension {x.shape[0]} is not divisible by 4")
    d1, d2 = dims
    if x.shape != (4 * d1 * d2, 4 * d1 * d2):
        raise DimMismatch(f"matrix {x.shape} does not match half-dimensions {dims}")
    y = _scalars_left(x, d1, d2)
    re = np.einsum("ab,bkal->kl", I_PAIR, y) / 2
    im = np.einsum("ab,bkal->kl", J_PAIR.T, y) / 2
    return np.kron(ONE2, re) + np.kron(J2, im)


def combine(rule: Rule, mats) -> np.ndarray:
    """Left fold of the rule over ``mats``."""
    op = np.kron if Rule(rule) is Rule.TENSOR else dot
    return reduce(op, [_real(m) for m in mats])


# -- per-factor linear maps on multipartite operators -------------------------


def _apply_local(x: np.ndarray, dims_in, maps) -> np.ndarray:
    """Apply ``maps[l]`` (acting on row-major ``vec`` of factor ``l``) to each
    tensor factor of the square operator ``x``."""
    n = len(dims_in)
    dims_in = tuple(dims_in)
    t = x.reshape(dims_in + dims_in)
    t = t.transpose([ax for l in range(n) for ax in (l, n + l)])
    sizes = [d * d for d in dims_in]
    t = t.reshape(sizes)
    for l, mp in enumerate(maps):
        pre = int(np.prod(sizes[:l]))
        post = int(np.prod(sizes[l + 1 :]))
        t = _kernels.mode_product(mp, t.reshape(pre, sizes[l], post))
        sizes[l] = mp.shape[0]
    dims_out = [int(round(np.sqrt(s))) for s in sizes]
    t = t.reshape([v for d in dims_out for v in (d, d)])
    t = t.transpose([2 * l for l in range(n)] + [2 * l + 1 for l in range(n)])
    total = int(np.prod(dims_out))
    return t.reshape(total, total)


@lru_cache(maxsize=None)
def _gamma_images(d: int) -> np.ndarray:
    bases = dual_bases(d)
    out = np.array([gamma(h) for h in bases.herm_basis])
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _lift_map(d: int) -> np.ndarray:
    # X -> sum_j Tr[X H_j] gamma(H_j), complex-linear, on vec(X)
    hb = dual_bases(d).herm_basis
    coeff = hb.transpose(0, 2, 1).reshape(d * d, d * d)
    images = _gamma_images(d).reshape(d * d, 4 * d * d)
    return images.T @ coeff


@lru_cache(maxsize=None)
def _coeff_map(d: int) -> np.ndarray:
    # R -> (Tr[R gamma(H_j)] / 2)_j
    g = _gamma_images(d)
    return g.transpose(0, 2, 1).reshape(d * d, 4 * d * d) / 2


@lru_cache(maxsize=None)
def _unlift_map(d: int) -> np.ndarray:
    # R -> sum_j Tr[R gamma(H_j)] / 2 * H_j
    hb = dual_bases(d).herm_basis.reshape(d * d, d * d)
    return hb.T @ _coeff_map(d)


@lru_cache(maxsize=None)
def _rebuild_map(d: int) -> np.ndarray:
    # coefficients -> sum_j c_j gamma(H_j)
    return _gamma_images(d).reshape(d * d, 4 * d * d).T


@lru_cache(maxsize=None)
def _dot_basis(dims: tuple[int, ...]) -> np.ndarray:
    """Stack of ``gamma(H_j1) . gamma(H_j2) . ...`` over all multi-indices,
    in row-major multi-index order."""
    images = [_gamma_images(d) for d in dims]
    stack = images[0]
    for nxt in images[1:]:
        stack = np.array([dot(a, b) for a in stack for b in nxt])
    stack.setflags(write=False)
    return stack


def _local_dims(rule: Rule, dims: SystemDims) -> tuple[int, ...]:
    if rule is Rule.TENSOR:
        return tuple(2 * d for d in dims.dims)
    return (2 * dims.total,)


# -- multipartite maps -------------------------------------------------------


def map_m(rhos, rule: Rule = Rule.DOT) -> MappedVector:
    """``a * (gamma(rho_1) rule gamma(rho_2) rule ...)`` for a product input."""
    rule = Rule(rule)
    rhos = [np.asarray(r, dtype=complex) for r in rhos]
    for r in rhos:
        if r.ndim != 2 or r.shape[0] != r.shape[1]:
            raise DimMismatch(f"factor of shape {r.shape} is not square")
    dims = SystemDims(tuple(r.shape[0] for r in rhos))
    mat = normalization(rule, dims.n) * combine(rule, [gamma(r) for r in rhos])
    return MappedVector(rule, dims, mat)


def _lift(rho: np.ndarray, dims: SystemDims, rule: Rule) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (dims.total, dims.total):
        raise DimMismatch(f"operator {rho.shape} does not match dims {dims.dims}")
    if not is_hermitian(rho, PSD_TOL):
        raise NotHermitian("operator must be Hermitian")
    if rule is Rule.DOT:
        return gamma(rho)
    out = _apply_local(rho, dims.dims, [_lift_map(d) for d in dims.dims])
    return out.real


def map_m_lifted(rho: np.ndarray, dims, rule: Rule = Rule.DOT) -> MappedVector:
    """Linear extension of :func:`map_m` to arbitrary Hermitian operators on
    the composite space."""
    rule, dims = Rule(rule), SystemDims.of(dims)
    return MappedVector(rule, dims, normalization(rule, dims.n) * _lift(rho, dims, rule))


def _unlift(mat: np.ndarray, dims: SystemDims, rule: Rule) -> np.ndarray:
    if rule is Rule.DOT:
        d = dims.total
        re = (mat[:d, :d] + mat[d:, d:]) / 2
        im = (mat[d:, :d] - mat[:d, d:]) / 2
        x = re + 1j * im
    else:
        x = _apply_local(mat, _local_dims(rule, dims), [_unlift_map(d) for d in dims.dims])
    return (x + x.conj().T) / 2


def _checked_unlift(mat: np.ndarray, dims: SystemDims, rule: Rule, tol: float) -> np.ndarray:
    x = _unlift(mat, dims, rule)
    resid = np.abs(_lift(x, dims, rule) - mat).max()
    if resid > tol:
        raise OutOfSubspace(f"residual {resid:.3e} outside the {rule.value}-rule image")
    return x


def map_m_inv(v: MappedVector, tol: float = SUBSPACE_TOL) -> np.ndarray:
    """Complex preimage of a mapped vector."""
    return _checked_unlift(v.mat / v.a, v.dims, v.rule, tol)


def map_e(e: np.ndarray, dims, rule: Rule = Rule.DOT) -> MappedVector:
    """Effect map ``M(e) / a``; sends the identity to the rule-combined identity."""
    rule, dims = Rule(rule), SystemDims.of(dims)
    return MappedVector(rule, dims, _lift(e, dims, rule))


def map_e_inv(v: MappedVector, tol: float = SUBSPACE_TOL) -> np.ndarray:
    return _checked_unlift(v.mat, v.dims, v.rule, tol)


def product_coefficients(v: MappedVector, tol: float = SUBSPACE_TOL) -> np.ndarray:
    """Coefficients of a TENSOR-rule matrix in the product basis
    ``gamma(H_j1) (x) gamma(H_j2) (x) ...``, flattened row-major.

    Purely real arithmetic.  Raises :class:`OutOfSubspace` when the matrix is
    not in the span of that basis.
    """
    if v.rule is not Rule.TENSOR:
        raise ValueError("product coefficients are defined for the tensor rule")
    local = _local_dims(Rule.TENSOR, v.dims)
    maps = [_coeff_map(d) for d in v.dims.dims]
    # each factor: (2d)^2 entries -> d^2 coefficients; treat coefficients as a
    # d x d "matrix" per factor so the operator reshaping in _apply_local holds
    coeffs = _apply_local(v.mat, local, maps)
    rebuilt = _apply_local(coeffs, v.dims.dims, [_rebuild_map(d) for d in v.dims.dims])
    resid = np.abs(rebuilt - v.mat).max()
    if resid > tol:
        raise OutOfSubspace(f"residual {resid:.3e} outside the tensor-rule image")
    return _flatten_coeffs(coeffs, v.dims.dims)


def _flatten_coeffs(coeffs: np.ndarray, dims: tuple[int, ...]) -> np.ndarray:
    n = len(dims)
    t = coeffs.reshape(tuple(dims) + tuple(dims))
    t = t.transpose([ax for l in range(n) for ax in (l, n + l)])
    return t.reshape(-1)


def g_map(v: MappedVector, tol: float = SUBSPACE_TOL) -> MappedVector:
    """Swap every product-basis factor ``(x)`` for ``.``: a TENSOR-rule vector
    becomes a DOT-rule vector with the same expansion coefficients.

    Uses real arithmetic only.  The output carries the input's prefactor, so
    ``g_map(map_m_lifted(x, dims, TENSOR))`` is a positive multiple of
    ``map_m_lifted(x, dims, DOT)``.
    """
    if v.rule is not Rule.TENSOR:
        raise ValueError("g_map takes a tensor-rule vector")
    c = product_coefficients(v, tol)
    mat = np.tensordot(c, _dot_basis(v.dims.dims), axes=1)
    return MappedVector(Rule.DOT, v.dims, mat)
