"""Seeded property suite behind ``realqt verify``.

Each property draws its own generator from ``(seed, row index)`` so rows are
independent and the report is byte-for-byte reproducible (apart from the
timing field).  A row reports the largest residual seen across its trials and
a count of hard failures (disagreements of boolean predicates).
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from realqt import _kernels
from realqt._config import ALGEBRA_TOL, PSD_TOL, psd_tol, subspace_tol, witness_tol
from realqt.combine import (
    I_PAIR,
    J_PAIR,
    Rule,
    _assemble,
    _blocks,
    dot,
    g_map,
    map_e,
    map_m,
    map_m_inv,
    map_m_lifted,
    tau,
    wedge,
)
from realqt.gamma import dual_bases, gamma, is_special_symmetric, j_rep, sy_complement_split
from realqt.matcore import eig_herm, eig_sym, is_psd
from realqt.sampling import (
    random_complex,
    random_density,
    random_effect,
    random_hermitian,
    random_indefinite,
    random_povm,
    random_psd,
    random_pure,
    random_unitary,
)
from realqt.theory import (
    DynamicsKind,
    RealEffect,
    RealState,
    SeparableSpec,
    antiunitary_image,
    born,
    dynamics_residuals,
    evolve,
    is_effect,
    is_state,
    make_separable,
    separable_preimage,
    unitary_image,
    witness,
    Verdict,
)

DotFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


def dot_corrupted(s, t) -> np.ndarray:
    """The product with the antisymmetric block ``sa (x) tb + sa (x) tb``
    (``sb (x) ta`` missing).  Kept as a negative control only."""
    sa, sb = _blocks(s)
    ta, tb = _blocks(t)
    return _assemble(np.kron(sa, ta) - np.kron(sb, tb), np.kron(sa, tb) + np.kron(sa, tb))


DOT_VARIANTS: dict[str, DotFn] = {"correct": dot, "corrupted": dot_corrupted}


@dataclass
class Row:
    name: str
    anchor: str  # the identity being checked
    module: str
    required: bool  # one of the listed module invariants, as opposed to a supplementary check
    trials: int
    max_residual: float
    tolerance: float
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.max_residual <= self.tolerance


@dataclass
class VerificationReport:
    seed: int
    trials: int
    dims: list[list[int]]
    backend: str
    dot_variant: str
    tolerances: dict[str, float] = field(default_factory=dict)
    rows: list[Row] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def failing(self) -> list[str]:
        return [r.name for r in self.rows if not r.passed]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["rows"] = [dict(asdict(r), passed=r.passed) for r in self.rows]
        out["passed"] = self.passed
        return out


@dataclass
class _Ctx:
    rng: np.random.Generator
    trials: int
    dims: list[tuple[int, int]]
    dot: DotFn

    def pair(self, k: int) -> tuple[int, int]:
        return self.dims[k % len(self.dims)]


@dataclass(frozen=True)
class _Property:
    name: str
    anchor: str
    tol: float
    required: bool
    fn: Callable[[_Ctx], tuple[float, int, int]]
    module: str


_PROPERTIES: list[_Property] = []
_section = "gamma"  # module the following registrations belong to


def _prop(name: str, anchor: str, tol: float = ALGEBRA_TOL, required: bool = True):
    def register(fn):
        _PROPERTIES.append(_Property(name, anchor, tol, required, fn, _section))
        return fn

    return register


def property_names(required_only: bool = False) -> list[str]:
    return [p.name for p in _PROPERTIES if p.required or not required_only]


def _mx(a) -> float:
    return float(np.abs(a).max())


# -- gamma -------------------------------------------------------------------


@_prop("gamma_ring_homomorphism", "Γ(M+N)=Γ(M)+Γ(N), Γ(MN)=Γ(M)Γ(N), Γ(1)=1, Γ(M†)=Γ(M)ᵀ")
def _ring(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d = 1 + k % 6
        m, n = random_complex(d, ctx.rng), random_complex(d, ctx.rng)
        res = max(
            res,
            _mx(gamma(m + n) - gamma(m) - gamma(n)),
            _mx(gamma(m @ n) - gamma(m) @ gamma(n)),
            _mx(gamma(np.eye(d)) - np.eye(2 * d)),
            _mx(gamma(m.conj().T) - gamma(m).T),
        )
    return res, 0, ctx.trials


@_prop("gamma_real_linearity", "Γ(aH+bL) = aΓ(H)+bΓ(L), a,b real")
def _real_lin(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d = 1 + k % 6
        h, l = random_hermitian(d, ctx.rng), random_hermitian(d, ctx.rng)
        a, b = ctx.rng.normal(size=2)
        res = max(res, _mx(gamma(a * h + b * l) - a * gamma(h) - b * gamma(l)))
    return res, 0, ctx.trials


@_prop("gamma_scalar_action", "Γ((a+ib)M) = aΓ(M) + b J Γ(M)")
def _scalar(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d = 1 + k % 6
        m = random_complex(d, ctx.rng)
        a, b = ctx.rng.normal(size=2)
        res = max(res, _mx(gamma((a + 1j * b) * m) - a * gamma(m) - b * j_rep(d) @ gamma(m)))
    return res, 0, ctx.trials


@_prop("gamma_isometry_factor", "Tr[Γ(H)Γ(L)] = 2 Tr[HL]")
def _isometry(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d = 1 + k % 6
        h, l = random_hermitian(d, ctx.rng), random_hermitian(d, ctx.rng)
        res = max(res, abs(np.trace(gamma(h) @ gamma(l)) - 2 * np.trace(h @ l).real))
    return res, 0, ctx.trials


@_prop("gamma_degenerate_inner_product", "Tr[Γ(N)ᵀΓ(M)] = 2 Re Tr[N†M]")
def _deg_ip(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d = 1 + k % 6
        m, n = random_complex(d, ctx.rng), random_complex(d, ctx.rng)
        res = max(res, abs(np.trace(gamma(n).T @ gamma(m)) - 2 * np.trace(n.conj().T @ m).real))
    return res, 0, ctx.trials


def _doubled(w: np.ndarray) -> np.ndarray:
    return np.sort(np.repeat(w, 2))[::-1]


@_prop("gamma_positivity_both_directions", "H ⪰ 0 ⟺ Γ(H) ⪰ 0, spec Γ(H) = spec H doubled", PSD_TOL)
def _positivity(ctx: _Ctx):
    res, bad = 0.0, 0
    for k in range(ctx.trials):
        d = 2 + k % 5
        if k % 3 == 0:
            h = random_psd(d, ctx.rng)
        elif k % 3 == 1:
            h = random_density(d, ctx.rng, rank=d - 1)  # zero eigenvalue
        else:
            h = random_indefinite(d, ctx.rng)
        sh, sg = eig_herm(h), eig_sym(gamma(h))
        res = max(res, _mx(sg.values - _doubled(sh.values)))
        bad += is_psd(sh) != is_psd(sg)
    return res, bad, ctx.trials


@_prop("gamma_sym_characterization", "SY = symmetric matrices commuting with J", required=False)
def _sym_char(ctx: _Ctx):
    res, bad = 0.0, 0
    for k in range(ctx.trials):
        d = 1 + k % 6
        h = random_hermitian(d, ctx.rng)
        g = gamma(h)
        jd = j_rep(d)
        res = max(res, _mx(g - g.T), _mx(jd @ g - g @ jd))
        bad += not is_special_symmetric(g)
        r = ctx.rng.normal(size=(2 * d, 2 * d))
        r = r + r.T
        bad += is_special_symmetric(r)  # generic symmetric matrices are not in SY
    return res, bad, ctx.trials


@_prop("gamma_asym_characterization", "symmetric S = S⁺ + S⁻, S⁺ ∈ SY, S⁻ J-anticommuting and traceless", required=False)
def _asym_char(ctx: _Ctx):
    res, bad = 0.0, 0
    for k in range(ctx.trials):
        d = 1 + k % 6
        r = ctx.rng.normal(size=(2 * d, 2 * d))
        r = r + r.T
        plus, minus = sy_complement_split(r)
        jd = j_rep(d)
        res = max(
            res,
            _mx(plus + minus - r),
            _mx(jd @ plus - plus @ jd),
            _mx(jd @ minus + minus @ jd),
            abs(np.trace(minus)),
        )
        bad += not is_special_symmetric(plus)
    return res, bad, ctx.trials


@_prop("gamma_complement_orthogonality", "Tr[Γ(H) S⁻] = 0")
def _complement(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d = 1 + k % 6
        m = gamma(random_hermitian(d, ctx.rng))
        r = ctx.rng.normal(size=(2 * d, 2 * d))
        _, anti = sy_complement_split(r + r.T)
        res = max(res, abs(np.trace(m @ anti)))
    return res, 0, ctx.trials


# -- combine -----------------------------------------------------------------

_section = "combine"


@_prop("dot_gamma_factors", "Γ(H ⊗ L) = Γ(H) ⊙ Γ(L)", required=False)
def _factors(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        h, l = random_hermitian(d1, ctx.rng), random_hermitian(d2, ctx.rng)
        res = max(res, _mx(ctx.dot(gamma(h), gamma(l)) - gamma(np.kron(h, l))))
    return res, 0, ctx.trials


@_prop("dot_bilinear_associative_mixed_product", "⊙ bilinear, associative, (s⊙t)(s'⊙t') = ss'⊙tt'")
def _dot_algebra(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        d3 = 1 + k % 3
        s1, s2 = gamma(random_hermitian(d1, ctx.rng)), gamma(random_hermitian(d1, ctx.rng))
        t1, t2 = gamma(random_hermitian(d2, ctx.rng)), gamma(random_hermitian(d2, ctx.rng))
        u = gamma(random_hermitian(d3, ctx.rng))
        a, b = ctx.rng.normal(size=2)
        dt = ctx.dot
        res = max(
            res,
            _mx(dt(a * s1 + b * s2, t1) - a * dt(s1, t1) - b * dt(s2, t1)),
            _mx(dt(s1, a * t1 + b * t2) - a * dt(s1, t1) - b * dt(s1, t2)),
            _mx(dt(dt(s1, t1), u) - dt(s1, dt(t1, u))),
            _mx(dt(s1, t1) @ dt(s2, t2) - dt(s1 @ s2, t1 @ t2)),
        )
    return res, 0, ctx.trials


@_prop("dot_trace_factor", "Tr[Γ(H) ⊙ Γ(L)] = 2 Tr[H] Tr[L]", required=False)
def _dot_trace(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        h, l = random_hermitian(d1, ctx.rng), random_hermitian(d2, ctx.rng)
        val = np.trace(ctx.dot(gamma(h), gamma(l)))
        res = max(res, abs(val - 2 * np.trace(h).real * np.trace(l).real))
    return res, 0, ctx.trials


@_prop("dot_dimension_full_rank", "dim span(SY_d1 ⊙ SY_d2) = d1² d2²", 0.0)
def _dot_dim(ctx: _Ctx):
    bad = 0
    seen = sorted(set(ctx.dims))
    for d1, d2 in seen:
        b1, b2 = dual_bases(d1).sy_basis, dual_bases(d2).sy_basis
        prods = np.array([ctx.dot(x, y).ravel() for x in b1 for y in b2])
        bad += np.linalg.matrix_rank(prods @ prods.T, tol=1e-8) != d1 * d1 * d2 * d2
    return 0.0, bad, len(seen)


@_prop("wedge_absorption", "(1⊛1)(s⊗t) = (s⊗t)(1⊛1) = s⊛t, 1⊛1 idempotent")
def _absorb(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        s, t = gamma(random_complex(d1, ctx.rng)), gamma(random_complex(d2, ctx.rng))
        proj = wedge(np.eye(2 * d1), np.eye(2 * d2))
        w = wedge(s, t)
        st = np.kron(s, t)
        res = max(res, _mx(proj @ st - w), _mx(st @ proj - w), _mx(proj @ proj - proj))
    return res, 0, ctx.trials


@_prop("wedge_trace", "Tr[Γ(H) ⊛ Γ(L)] = 2 Tr[H] Tr[L]", required=False)
def _wedge_trace(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        h, l = random_hermitian(d1, ctx.rng), random_hermitian(d2, ctx.rng)
        res = max(res, abs(np.trace(wedge(gamma(h), gamma(l))) - 2 * np.trace(h).real * np.trace(l).real))
    return res, 0, ctx.trials


@_prop("tau_compresses_wedge_to_dot", "τ(s ⊛ t) = s ⊙ t", required=False)
def _tau(ctx: _Ctx):
    res = max(
        _mx(I_PAIR @ I_PAIR - I_PAIR),
        _mx(J_PAIR @ J_PAIR + I_PAIR),
        abs(np.trace(I_PAIR.T @ J_PAIR)),
    )
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        s, t = gamma(random_hermitian(d1, ctx.rng)), gamma(random_hermitian(d2, ctx.rng))
        res = max(res, _mx(tau(wedge(s, t), (d1, d2)) - ctx.dot(s, t)))
    return res, 0, ctx.trials


@_prop("wedge_phase_covariance", "Γ(e^{iθ}M) ⊛ Γ(N) = Γ(M) ⊛ Γ(e^{iθ}N) = cosθ Γ(M)⊛Γ(N) + sinθ Γ(iM)⊛Γ(N)")
def _phase(ctx: _Ctx):
    res = 0.0
    thetas = np.linspace(0.0, 2 * np.pi, 12, endpoint=False)
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        m, n = random_complex(d1, ctx.rng), random_complex(d2, ctx.rng)
        base = wedge(gamma(m), gamma(n))
        rot = wedge(gamma(1j * m), gamma(n))
        for th in thetas:
            ph = np.exp(1j * th)
            left = wedge(gamma(ph * m), gamma(n))
            res = max(
                res,
                _mx(left - wedge(gamma(m), gamma(ph * n))),
                _mx(left - (np.cos(th) * base + np.sin(th) * rot)),
                _mx(wedge(gamma(ph * m), gamma(np.conj(ph) * n)) - base),
            )
    return res, 0, ctx.trials


@_prop("tensor_rule_failure_witnesses", "1⊗1 ≠ −J⊗J; Tr[(Γ(A)⊗Γ(B))ᵀ(Γ(iC)⊗Γ(iD))] = 0 while the complex pairing is not")
def _tensor_fail(ctx: _Ctx):
    res, bad = 0.0, 0
    for k in range(ctx.trials):
        d1, d2 = ctx.pair(k)
        ii = np.kron(np.eye(2 * d1), np.eye(2 * d2))
        jj = np.kron(j_rep(d1), j_rep(d2))
        bad += bool(np.allclose(ii, -jj))
        ma, na = random_hermitian(d1, ctx.rng), random_hermitian(d1, ctx.rng)
        mb, nb = random_hermitian(d2, ctx.rng), random_hermitian(d2, ctx.rng)
        real_side = np.trace(np.kron(gamma(ma), gamma(mb)).T @ np.kron(gamma(1j * na), gamma(1j * nb)))
        complex_side = np.trace(np.kron(ma, mb).conj().T @ np.kron(1j * na, 1j * nb))
        res = max(res, abs(real_side))
        bad += abs(complex_side) < 1e-6
    return res, bad, ctx.trials


def _mixed_preimage(d: int, k: int, rng: np.random.Generator) -> np.ndarray:
    kind = k % 4
    if kind == 0:
        return random_density(d, rng)
    if kind == 1:
        return random_effect(d, rng)
    if kind == 2:
        return random_density(d, rng, rank=max(1, d - 1))
    return random_indefinite(d, rng)


@_prop("g_map_oracle_equivalence", "M⁻¹(v) ⪰ 0 ⟺ G(v) ⪰ 0, G(M_⊗(x)) = a Γ(x)", 1e-8)
def _gmap(ctx: _Ctx):
    res, bad = 0.0, 0
    for k in range(ctx.trials):
        dims = ctx.pair(k)
        x = _mixed_preimage(dims[0] * dims[1], k, ctx.rng)
        v = map_m_lifted(x, dims, Rule.TENSOR)
        g = g_map(v)
        res = max(res, _mx(g.mat - v.a * gamma(x)))
        bad += is_psd(eig_sym(g.mat)) != is_psd(eig_herm(map_m_inv(v)))
    return res, bad, ctx.trials


# -- theory ------------------------------------------------------------------

_section = "theory"


@_prop("born_equivalence", "Tr[E(e) M(ρ)] = Tr[e ρ], POVM outcomes sum to 1", 1e-10)
def _born(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        dims = ctx.pair(k)
        total = dims[0] * dims[1]
        rho, e = random_density(total, ctx.rng), random_effect(total, ctx.rng)
        povm = random_povm(total, 3, ctx.rng)
        for rule in Rule:
            s = RealState(map_m_lifted(rho, dims, rule))
            res = max(res, abs(born(RealEffect(map_e(e, dims, rule)), s) - np.trace(e @ rho).real))
            probs = [born(RealEffect(map_e(p, dims, rule)), s) for p in povm]
            res = max(res, abs(sum(probs) - 1.0))
            res = max(res, max(abs(pr - np.trace(p @ rho).real) for pr, p in zip(probs, povm)))
    return res, 0, ctx.trials


def random_separable_spec(dims, rng: np.random.Generator, terms: int | None = None) -> SeparableSpec:
    terms = int(rng.integers(1, 5)) if terms is None else terms
    w = rng.dirichlet(np.ones(terms))
    local = []
    for _ in range(terms):
        local.append(tuple(random_pure(d, rng) if rng.random() < 0.5 else random_density(d, rng) for d in dims))
    return SeparableSpec(tuple(w), tuple(local))


@_prop("separable_statistics_equality", "separable statistics agree with the complex side", 1e-10)
def _sep_stats(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        dims = ctx.pair(k)
        spec = random_separable_spec(dims, ctx.rng)
        s = make_separable(spec, Rule.TENSOR)
        pre = separable_preimage(spec)
        e = random_effect(dims[0] * dims[1], ctx.rng)
        res = max(
            res,
            _mx(map_m_inv(s.vec) - pre),
            abs(born(RealEffect(map_e(e, dims, Rule.TENSOR)), s) - np.trace(e @ pre).real),
        )
    return res, 0, ctx.trials


@_prop("separable_implies_psd_tensor", "separable tensor-rule states are PSD", 0.0)
def _sep_psd(ctx: _Ctx):
    bad = 0
    for k in range(ctx.trials):
        s = make_separable(random_separable_spec(ctx.pair(k), ctx.rng), Rule.TENSOR)
        bad += not is_psd(eig_sym(s.vec.mat))
    return 0.0, bad, ctx.trials


@_prop("dot_rule_membership_is_psd", "⊙-rule state ⟺ unit trace and PSD", 0.0)
def _dot_member(ctx: _Ctx):
    bad = 0
    for k in range(ctx.trials):
        dims = ctx.pair(k)
        total = dims[0] * dims[1]
        x = random_density(total, ctx.rng) if k % 2 == 0 else random_indefinite(total, ctx.rng)
        x = x / np.trace(x).real if abs(np.trace(x)) > 1e-3 else x
        v = map_m_lifted(x, dims, Rule.DOT)
        real_side = abs(np.trace(v.mat) - 1.0) <= PSD_TOL and is_psd(eig_sym(v.mat))
        bad += is_state(v) != real_side
    return 0.0, bad, ctx.trials


@_prop("witness_soundness", "witness never fires on separable states", 0.0)
def _soundness(ctx: _Ctx):
    bad = 0
    n = max(ctx.trials, 500)
    for k in range(n):
        s = make_separable(random_separable_spec(ctx.pair(k), ctx.rng), Rule.TENSOR)
        bad += witness(s.vec).verdict is Verdict.ENTANGLED
    return 0.0, bad, n


@_prop("unitary_images_form_group", "Γ(U) orthosymplectic, Γ(U)Z antiorthosymplectic, closed under products and inverses")
def _group(ctx: _Ctx):
    res, bad = 0.0, 0
    for k in range(ctx.trials):
        d = 1 + k % 8
        u, w = unitary_image(random_unitary(d, ctx.rng)), unitary_image(random_unitary(d, ctx.rng))
        a, b = antiunitary_image(random_unitary(d, ctx.rng)), antiunitary_image(random_unitary(d, ctx.rng))
        for img, kind in (
            (u, DynamicsKind.ORTHOSYMPLECTIC),
            (a, DynamicsKind.ANTIORTHOSYMPLECTIC),
            (u @ w, DynamicsKind.ORTHOSYMPLECTIC),
            (u.inverse(), DynamicsKind.ORTHOSYMPLECTIC),
            (a @ b, DynamicsKind.ORTHOSYMPLECTIC),
            (u @ a, DynamicsKind.ANTIORTHOSYMPLECTIC),
        ):
            bad += img.kind is not kind
            res = max(res, *dynamics_residuals(img.mat, kind))
    return res, bad, ctx.trials


@_prop("evolution_covariance", "Γ(UρU†) = Γ(U)Γ(ρ)Γ(U)ᵀ", 1e-10, required=False)
def _evolve(ctx: _Ctx):
    res = 0.0
    for k in range(ctx.trials):
        dims = ctx.pair(k)
        total = dims[0] * dims[1]
        rho, u = random_density(total, ctx.rng), random_unitary(total, ctx.rng)
        s = RealState(map_m_lifted(rho, dims, Rule.DOT))
        out = evolve(s, unitary_image(u))
        res = max(res, _mx(out.vec.mat - map_m_lifted(u @ rho @ u.conj().T, dims, Rule.DOT).mat))
        anti = evolve(s, antiunitary_image(u))
        res = max(res, _mx(anti.vec.mat - map_m_lifted(u @ rho.conj() @ u.conj().T, dims, Rule.DOT).mat))
    return res, 0, ctx.trials


@_prop("state_effect_convexity", "states and effects are convex sets", 0.0)
def _convex(ctx: _Ctx):
    bad = 0
    for k in range(ctx.trials):
        dims = ctx.pair(k)
        total = dims[0] * dims[1]
        p = ctx.rng.random()
        for rule in Rule:
            s1 = map_m_lifted(random_density(total, ctx.rng), dims, rule)
            s2 = map_m_lifted(random_density(total, ctx.rng), dims, rule)
            mix = type(s1)(rule, s1.dims, p * s1.mat + (1 - p) * s2.mat)
            bad += not is_state(mix)
            e1 = map_e(random_effect(total, ctx.rng), dims, rule)
            e2 = map_e(random_effect(total, ctx.rng), dims, rule)
            bad += not is_effect(type(e1)(rule, e1.dims, p * e1.mat + (1 - p) * e2.mat))
    return 0.0, bad, ctx.trials


def run_suite(
    seed: int = 0,
    trials: int = 100,
    dims=((2, 2),),
    dot_variant: str = "correct",
    only: list[str] | None = None,
) -> VerificationReport:
    dims = [tuple(int(x) for x in d) for d in dims]
    if any(len(d) != 2 for d in dims):
        raise ValueError("verify runs on bipartite dimension pairs")
    if dot_variant not in DOT_VARIANTS:
        raise ValueError(f"unknown dot variant {dot_variant!r}")
    tols = {"algebra": ALGEBRA_TOL, "psd": psd_tol(), "witness": witness_tol(), "subspace": subspace_tol()}
    report = VerificationReport(seed, trials, [list(d) for d in dims], _kernels.backend(), dot_variant, tols)
    dot_fn = DOT_VARIANTS[dot_variant]
    start = time.perf_counter()
    for idx, prop in enumerate(_PROPERTIES):
        if only is not None and prop.name not in only:
            continue
        ctx = _Ctx(np.random.default_rng([seed, idx]), trials, dims, dot_fn)
        res, bad, n = prop.fn(ctx)
        report.rows.append(Row(prop.name, prop.anchor, prop.module, prop.required, n, float(res), prop.tol, int(bad)))
    report.wall_time = time.perf_counter() - start
    return report
