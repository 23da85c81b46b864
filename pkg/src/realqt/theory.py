"""States, effects, Born statistics, the entanglement witness and dynamics
for the real-matrix theory."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from realqt._config import ALGEBRA_TOL, SUBSPACE_TOL, psd_tol, witness_tol
from realqt.combine import (
    MappedVector,
    Rule,
    SystemDims,
    g_map,
    map_e,
    map_e_inv,
    map_m,
    map_m_inv,
    map_m_lifted,
)
from realqt.errors import (
    DimMismatch,
    InvalidWeights,
    LocalFactorNotState,
    NotATheoryElement,
    NotUnitary,
    OutOfSubspace,
    RuleMismatch,
)
from realqt.gamma import SpecialSymmetric, gamma, gamma_inv, is_special_symmetric, j_rep, z_rep
from realqt.matcore import eig_herm, eig_sym, is_psd


def is_state(v: MappedVector, tol: float | None = None) -> bool:
    """Reference membership test through the complex preimage."""
    tol = psd_tol() if tol is None else tol
    x = map_m_inv(v)
    return abs(np.trace(x).real - 1.0) <= tol and is_psd(eig_herm(x, tol))


def is_effect(v: MappedVector, tol: float | None = None) -> bool:
    """``v`` is read as an effect image ``E(e)``."""
    tol = psd_tol() if tol is None else tol
    return is_psd(eig_herm(map_e_inv(v), tol))


def positive_form(v: MappedVector, tol: float = SUBSPACE_TOL) -> np.ndarray:
    """The real matrix whose positivity decides membership: ``v`` itself
    for the DOT rule, its basis-swapped image for the TENSOR rule."""
    if v.rule is Rule.TENSOR:
        return g_map(v, tol).mat
    if not is_special_symmetric(v.mat, tol):
        raise OutOfSubspace("dot-rule vector is not special symmetric")
    return v.mat


def is_state_real_only(v: MappedVector, tol: float | None = None) -> bool:
    """Same decision as :func:`is_state`, using real arithmetic only.

    The prefactor is chosen so that ``Tr[v]`` equals the trace of the complex
    preimage under either rule; positivity is read off :func:`positive_form`.
    """
    tol = psd_tol() if tol is None else tol
    form = positive_form(v)
    return abs(np.trace(v.mat) - 1.0) <= tol and is_psd(eig_sym(form, tol))


@dataclass(frozen=True)
class RealState:
    vec: MappedVector
    trace_norm_checked: bool = field(default=False)

    @classmethod
    def checked(cls, vec: MappedVector, tol: float | None = None) -> "RealState":
        if not is_state(vec, tol):
            raise NotATheoryElement("vector is not a state")
        return cls(vec, True)


@dataclass(frozen=True)
class RealEffect:
    vec: MappedVector

    @classmethod
    def checked(cls, vec: MappedVector, tol: float | None = None) -> "RealEffect":
        if not is_effect(vec, tol):
            raise NotATheoryElement("vector is not an effect")
        return cls(vec)


@dataclass(frozen=True)
class SeparableSpec:
    """Convex mixture of product states.

    ``local_states[j][l]`` is the state of party ``l`` in term ``j``: either a
    complex density matrix or a :class:`SpecialSymmetric` holding
    ``gamma(rho)``.
    """

    weights: tuple[float, ...]
    local_states: tuple[tuple[np.ndarray, ...], ...]


def _local_density(factor, tol: float) -> np.ndarray:
    if isinstance(factor, SpecialSymmetric):
        rho = gamma_inv(factor, tol)
    else:
        rho = np.asarray(factor, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise LocalFactorNotState(f"local factor of shape {rho.shape} is not square")
    try:
        ok = abs(np.trace(rho).real - 1.0) <= tol and is_psd(eig_herm(rho, tol))
    except ValueError as exc:
        raise LocalFactorNotState(str(exc)) from exc
    if not ok:
        raise LocalFactorNotState("local factor is not a unit-trace PSD matrix")
    return rho


def make_separable(spec: SeparableSpec, rule: Rule = Rule.TENSOR, tol: float | None = None) -> RealState:
    tol = psd_tol() if tol is None else tol
    w = np.asarray(spec.weights, dtype=float)
    if w.ndim != 1 or len(w) != len(spec.local_states) or len(w) == 0:
        raise InvalidWeights("need one weight per product term")
    if np.any(w < -tol) or abs(w.sum() - 1.0) > tol:
        raise InvalidWeights("weights must be nonnegative and sum to 1")
    mat = None
    dims = None
    for p, term in zip(w, spec.local_states):
        rhos = [_local_density(f, tol) for f in term]
        v = map_m(rhos, rule)
        if dims is None:
            dims = v.dims
        elif v.dims != dims:
            raise DimMismatch("product terms have different subsystem dimensions")
        mat = p * v.mat if mat is None else mat + p * v.mat
    return RealState(MappedVector(rule, dims, mat), True)


def separable_preimage(spec: SeparableSpec, tol: float | None = None) -> np.ndarray:
    """``sum_j p_j rho_j^1 (x) rho_j^2 (x) ...`` on the complex side."""
    tol = psd_tol() if tol is None else tol
    out = None
    for p, term in zip(spec.weights, spec.local_states):
        prod = np.ones((1, 1), dtype=complex)
        for f in term:
            prod = np.kron(prod, _local_density(f, tol))
        out = p * prod if out is None else out + p * prod
    return out


def born(e: RealEffect, s: RealState) -> float:
    """Outcome probability ``Tr[e s]`` of effect ``e`` on state ``s``."""
    ev, sv = e.vec, s.vec
    if ev.rule is not sv.rule:
        raise RuleMismatch(f"effect uses {ev.rule.value}, state uses {sv.rule.value}")
    if ev.dims != sv.dims:
        raise DimMismatch(f"effect dims {ev.dims.dims} differ from state dims {sv.dims.dims}")
    return float(np.einsum("ij,ji->", ev.mat, sv.mat))


def is_povm(effects, tol: float | None = None) -> bool:
    """Complex-side completeness check: PSD elements summing to the identity."""
    tol = psd_tol() if tol is None else tol
    effects = [np.asarray(e, dtype=complex) for e in effects]
    total = sum(effects)
    if np.abs(total - np.eye(total.shape[0])).max() > tol:
        return False
    return all(is_psd(eig_herm(e, tol)) for e in effects)


class Verdict(str, Enum):
    ENTANGLED = "entangled"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class WitnessResult:
    min_eigenvalue: float
    verdict: Verdict


def witness(v: MappedVector, tol: float | None = None) -> WitnessResult:
    """One-sided entanglement test on a TENSOR-rule state or effect.

    A negative eigenvalue below ``-tol`` certifies entanglement of the complex
    preimage.  A PSD matrix proves nothing.
    """
    tol = witness_tol() if tol is None else tol
    if v.rule is not Rule.TENSOR:
        raise RuleMismatch("the witness applies to tensor-rule vectors")
    try:
        valid = is_state(v) or is_effect(v)
    except OutOfSubspace as exc:
        raise NotATheoryElement(str(exc)) from exc
    if not valid:
        raise NotATheoryElement("vector is neither a state nor an effect")
    lam = eig_sym(v.mat).min
    verdict = Verdict.ENTANGLED if lam < -tol else Verdict.INCONCLUSIVE
    return WitnessResult(lam, verdict)


# -- dynamics ----------------------------------------------------------------


class DynamicsKind(str, Enum):
    ORTHOSYMPLECTIC = "orthosymplectic"
    ANTIORTHOSYMPLECTIC = "antiorthosymplectic"


@dataclass(frozen=True)
class DynamicsImage:
    mat: np.ndarray
    kind: DynamicsKind

    def __post_init__(self):
        object.__setattr__(self, "kind", DynamicsKind(self.kind))
        check_dynamics(self.mat, self.kind, tol=1e-9)

    def __matmul__(self, other: "DynamicsImage") -> "DynamicsImage":
        same = self.kind is other.kind
        kind = DynamicsKind.ORTHOSYMPLECTIC if same else DynamicsKind.ANTIORTHOSYMPLECTIC
        return DynamicsImage(self.mat @ other.mat, kind)

    def inverse(self) -> "DynamicsImage":
        return DynamicsImage(self.mat.T.copy(), self.kind)


def dynamics_residuals(mat: np.ndarray, kind: DynamicsKind) -> tuple[float, float]:
    """``(|O^T O - 1|_max, |O J -+ J O|_max)``."""
    n = mat.shape[0]
    jd = j_rep(n // 2)
    orth = np.abs(mat.T @ mat - np.eye(n)).max()
    sign = 1.0 if DynamicsKind(kind) is DynamicsKind.ORTHOSYMPLECTIC else -1.0
    comm = np.abs(mat @ jd - sign * (jd @ mat)).max()
    return float(orth), float(comm)


def check_dynamics(mat: np.ndarray, kind: DynamicsKind, tol: float = ALGEBRA_TOL) -> None:
    orth, comm = dynamics_residuals(mat, kind)
    if orth > tol or comm > tol:
        raise NotUnitary(f"{DynamicsKind(kind).value} check failed: {orth:.2e}, {comm:.2e}")


def _require_unitary(u: np.ndarray, tol: float) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NotUnitary(f"shape {u.shape} is not square")
    if np.abs(u.conj().T @ u - np.eye(u.shape[0])).max() > tol:
        raise NotUnitary("u^† u differs from the identity")
    return u


def unitary_image(u: np.ndarray, tol: float | None = None) -> DynamicsImage:
    tol = psd_tol() if tol is None else tol
    return DynamicsImage(gamma(_require_unitary(u, tol)), DynamicsKind.ORTHOSYMPLECTIC)


def antiunitary_image(u: np.ndarray, tol: float | None = None) -> DynamicsImage:
    """Image of ``u K`` with ``K`` entrywise complex conjugation."""
    tol = psd_tol() if tol is None else tol
    u = _require_unitary(u, tol)
    return DynamicsImage(gamma(u) @ z_rep(u.shape[0]), DynamicsKind.ANTIORTHOSYMPLECTIC)


def evolve(s: RealState | MappedVector, o: DynamicsImage) -> RealState:
    vec = s.vec if isinstance(s, RealState) else s
    if vec.rule is not Rule.DOT:
        raise RuleMismatch("evolution acts on dot-rule vectors")
    if o.mat.shape != vec.mat.shape:
        raise DimMismatch(f"dynamics {o.mat.shape} vs state {vec.mat.shape}")
    checked = s.trace_norm_checked if isinstance(s, RealState) else False
    return RealState(MappedVector(vec.rule, vec.dims, o.mat @ vec.mat @ o.mat.T), checked)


def state(rho: np.ndarray, dims, rule: Rule = Rule.DOT) -> RealState:
    """Convenience: map a complex density matrix and wrap it."""
    return RealState(map_m_lifted(rho, SystemDims.of(dims), rule))


def effect(e: np.ndarray, dims, rule: Rule = Rule.DOT) -> RealEffect:
    return RealEffect(map_e(e, SystemDims.of(dims), rule))
