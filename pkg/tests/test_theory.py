import numpy as np
import pytest

from realqt.combine import MappedVector, Rule, map_e, map_m, map_m_inv, map_m_lifted
from realqt.errors import (
    DimMismatch,
    InvalidWeights,
    LocalFactorNotState,
    NotATheoryElement,
    NotUnitary,
    RuleMismatch,
)
from realqt.gamma import SpecialSymmetric, gamma, j_rep, z_rep
from realqt.matcore import eig_sym, is_psd
from realqt.sampling import (
    random_density,
    random_effect,
    random_hermitian,
    random_indefinite,
    random_povm,
    random_pure,
    random_unitary,
)
from realqt.theory import (
    DynamicsImage,
    DynamicsKind,
    RealEffect,
    RealState,
    SeparableSpec,
    Verdict,
    antiunitary_image,
    born,
    effect,
    evolve,
    is_effect,
    is_povm,
    is_state,
    is_state_real_only,
    make_separable,
    separable_preimage,
    state,
    unitary_image,
    witness,
)

PHI = np.array([1.0, 0, 0, 1]) / np.sqrt(2)
BELL = np.outer(PHI, PHI).astype(complex)
KET0 = np.diag([1.0, 0]).astype(complex)
HADAMARD = np.array([[1, 1], [1, -1]]) / np.sqrt(2)


# -- membership --------------------------------------------------------------


@pytest.mark.parametrize("rule", list(Rule))
def test_random_density_is_state(rng, rule):
    for dims in [(2, 2), (2, 3), (3, 3)]:
        v = map_m_lifted(random_density(int(np.prod(dims)), rng), dims, rule)
        assert is_state(v) and is_state_real_only(v)


def test_tensor_bell_is_state_but_indefinite():
    v = map_m_lifted(BELL, (2, 2), Rule.TENSOR)
    assert is_state(v)
    assert is_state_real_only(v)
    assert not is_psd(eig_sym(v.mat))


@pytest.mark.parametrize("rule", list(Rule))
def test_zero_is_not_state(rule):
    n = 16 if rule is Rule.TENSOR else 8
    assert not is_state(MappedVector(rule, (2, 2), np.zeros((n, n))))
    assert not is_state_real_only(MappedVector(rule, (2, 2), np.zeros((n, n))))


@pytest.mark.parametrize("rule", list(Rule))
def test_real_only_agrees_with_complex_route(rng, rule):
    for k in range(100):
        dims = [(2, 2), (2, 3)][k % 2]
        total = int(np.prod(dims))
        if k % 3 == 0:
            x = random_indefinite(total, rng)
            x = x / np.trace(x).real if abs(np.trace(x)) > 1e-2 else x
        elif k % 3 == 1:
            x = random_density(total, rng, rank=1 + k % total)
        else:
            x = random_hermitian(total, rng)
        v = map_m_lifted(x, dims, rule)
        assert is_state(v) == is_state_real_only(v)


def test_indefinite_preimage_rejected(rng):
    x = random_indefinite(4, rng)
    x = x / np.trace(x).real
    v = map_m_lifted(x, (2, 2), Rule.TENSOR)
    assert not is_state(v) and not is_state_real_only(v)


def test_checked_constructors(rng):
    v = map_m_lifted(random_density(4, rng), (2, 2), Rule.DOT)
    assert RealState.checked(v).trace_norm_checked
    with pytest.raises(NotATheoryElement):
        RealState.checked(MappedVector(Rule.DOT, (2, 2), np.zeros((8, 8))))
    RealEffect.checked(map_e(random_effect(4, rng), (2, 2), Rule.DOT))
    with pytest.raises(NotATheoryElement):
        RealEffect.checked(map_e(random_indefinite(4, rng), (2, 2), Rule.DOT))


# -- separable states --------------------------------------------------------


def test_single_product_term(rng):
    r1, r2 = random_density(2, rng), random_density(3, rng)
    s = make_separable(SeparableSpec((1.0,), ((r1, r2),)))
    np.testing.assert_allclose(s.vec.mat, map_m([r1, r2], Rule.TENSOR).mat, atol=1e-15)


def test_separable_accepts_real_factors(rng):
    r1, r2 = random_density(2, rng), random_density(2, rng)
    spec_c = SeparableSpec((0.3, 0.7), ((r1, r2), (r2, r1)))
    spec_r = SeparableSpec(
        (0.3, 0.7),
        tuple(tuple(SpecialSymmetric.from_matrix(gamma(f)) for f in term) for term in spec_c.local_states),
    )
    np.testing.assert_allclose(make_separable(spec_r).vec.mat, make_separable(spec_c).vec.mat, atol=1e-14)


@pytest.mark.parametrize("rule", list(Rule))
def test_separable_correspondence(rng, rule):
    for _ in range(20):
        terms = int(rng.integers(1, 5))
        spec = SeparableSpec(
            tuple(rng.dirichlet(np.ones(terms))),
            tuple((random_pure(2, rng), random_density(3, rng)) for _ in range(terms)),
        )
        s = make_separable(spec, rule)
        assert is_state(s.vec)
        pre = separable_preimage(spec)
        np.testing.assert_allclose(map_m_inv(s.vec), pre, atol=1e-12)
        if rule is Rule.TENSOR:
            assert is_psd(eig_sym(s.vec.mat))


def test_separable_errors(rng):
    r = random_density(2, rng)
    with pytest.raises(InvalidWeights):
        make_separable(SeparableSpec((0.5, 0.6), ((r, r), (r, r))))
    with pytest.raises(InvalidWeights):
        make_separable(SeparableSpec((1.5, -0.5), ((r, r), (r, r))))
    with pytest.raises(InvalidWeights):
        make_separable(SeparableSpec((1.0,), ((r, r), (r, r))))
    with pytest.raises(LocalFactorNotState):
        make_separable(SeparableSpec((1.0,), ((r, 2 * r),)))
    with pytest.raises(LocalFactorNotState):
        make_separable(SeparableSpec((1.0,), ((r, random_indefinite(2, rng)),)))
    with pytest.raises(DimMismatch):
        make_separable(SeparableSpec((0.5, 0.5), ((r, r), (r, random_density(3, rng)))))


# -- Born rule ---------------------------------------------------------------


@pytest.mark.parametrize("rule", list(Rule))
def test_born_examples(rng, rule):
    s = state(BELL, (2, 2), rule)
    assert abs(born(effect(np.eye(4), (2, 2), rule), s) - 1) < 1e-12
    assert abs(born(effect(np.kron(KET0, np.eye(2)), (2, 2), rule), s) - 0.5) < 1e-12
    rho = random_density(6, rng)
    povm = random_povm(6, 4, rng)
    assert is_povm(povm)
    s = state(rho, (2, 3), rule)
    probs = np.array([born(effect(p, (2, 3), rule), s) for p in povm])
    np.testing.assert_allclose(probs, [np.trace(p @ rho).real for p in povm], atol=1e-10)
    assert abs(probs.sum() - 1) < 1e-10
    assert np.all(probs >= -1e-12)


def test_born_errors(rng):
    e = effect(np.eye(4), (2, 2), Rule.DOT)
    with pytest.raises(RuleMismatch):
        born(e, state(BELL, (2, 2), Rule.TENSOR))
    with pytest.raises(DimMismatch):
        born(e, state(np.eye(4) / 4, (4,), Rule.DOT))


def test_is_povm_rejects():
    assert not is_povm([np.eye(2) / 2])
    assert not is_povm([np.diag([1.5, 0]), np.diag([-0.5, 1])])


# -- witness -----------------------------------------------------------------


def test_witness_bell():
    res = witness(map_m_lifted(BELL, (2, 2), Rule.TENSOR))
    assert res.verdict is Verdict.ENTANGLED
    assert abs(res.min_eigenvalue + 1 / 8) < 1e-9


def test_witness_fires_on_bell_effect():
    res = witness(map_e(2 * BELL, (2, 2), Rule.TENSOR))
    assert res.verdict is Verdict.ENTANGLED


def test_witness_on_products_and_mixtures(rng):
    for _ in range(20):
        v = map_m([random_pure(2, rng), random_pure(2, rng)], Rule.TENSOR)
        assert witness(v).verdict is Verdict.INCONCLUSIVE
        spec = SeparableSpec((0.5, 0.5), tuple((random_density(2, rng), random_density(2, rng)) for _ in range(2)))
        assert witness(make_separable(spec).vec).verdict is Verdict.INCONCLUSIVE


def test_witness_errors(rng):
    with pytest.raises(RuleMismatch):
        witness(map_m_lifted(BELL, (2, 2), Rule.DOT))
    x = random_indefinite(4, rng)
    with pytest.raises(NotATheoryElement):
        witness(map_m_lifted(x / np.trace(x).real, (2, 2), Rule.TENSOR))
    with pytest.raises(NotATheoryElement):
        witness(MappedVector(Rule.TENSOR, (2, 2), np.diag(np.arange(16.0))))


# -- dynamics ----------------------------------------------------------------


def test_unitary_image_examples():
    np.testing.assert_array_equal(unitary_image(np.eye(3)).mat, np.eye(6))
    h = unitary_image(HADAMARD)
    np.testing.assert_allclose(h.mat.T @ h.mat, np.eye(4), atol=1e-15)
    np.testing.assert_allclose(h.mat @ j_rep(2), j_rep(2) @ h.mat, atol=1e-15)
    th = 0.7
    ph = unitary_image(np.exp(1j * th) * np.eye(2))
    np.testing.assert_allclose(ph.mat, np.cos(th) * np.eye(4) + np.sin(th) * j_rep(2), atol=1e-15)


def test_antiunitary_image_examples(rng):
    k = antiunitary_image(np.eye(2))
    np.testing.assert_array_equal(k.mat, z_rep(2))
    assert k.kind is DynamicsKind.ANTIORTHOSYMPLECTIC
    np.testing.assert_array_equal((k @ k).mat, np.eye(4))
    assert (k @ k).kind is DynamicsKind.ORTHOSYMPLECTIC
    a = antiunitary_image(random_unitary(4, rng))
    np.testing.assert_allclose(a.mat.T @ a.mat, np.eye(8), atol=1e-12)
    np.testing.assert_allclose(a.mat @ j_rep(4), -j_rep(4) @ a.mat, atol=1e-12)


def test_dynamics_validation(rng):
    with pytest.raises(NotUnitary):
        unitary_image(2 * np.eye(2))
    with pytest.raises(NotUnitary):
        DynamicsImage(z_rep(2), DynamicsKind.ORTHOSYMPLECTIC)
    u = unitary_image(random_unitary(3, rng))
    np.testing.assert_allclose((u @ u.inverse()).mat, np.eye(6), atol=1e-12)


def test_evolve_examples(rng):
    s = state(KET0, (2,), Rule.DOT)
    np.testing.assert_array_equal(evolve(s, unitary_image(np.eye(2))).vec.mat, s.vec.mat)
    plus = np.full((2, 2), 0.5, dtype=complex)
    np.testing.assert_allclose(evolve(s, unitary_image(HADAMARD)).vec.mat, state(plus, (2,), Rule.DOT).vec.mat, atol=1e-15)

    rho, u = random_density(6, rng), random_unitary(6, rng)
    s = state(rho, (2, 3), Rule.DOT)
    out = evolve(s, unitary_image(u))
    np.testing.assert_allclose(out.vec.mat, state(u @ rho @ u.conj().T, (2, 3), Rule.DOT).vec.mat, atol=1e-10)
    np.testing.assert_allclose(eig_sym(out.vec.mat).values, eig_sym(s.vec.mat).values, atol=1e-12)


def test_evolve_errors(rng):
    with pytest.raises(RuleMismatch):
        evolve(state(BELL, (2, 2), Rule.TENSOR), unitary_image(np.eye(8)))
    with pytest.raises(DimMismatch):
        evolve(state(BELL, (2, 2), Rule.DOT), unitary_image(np.eye(2)))
