import numpy as np
import pytest

from realqt import verify
from realqt.combine import dot
from realqt.gamma import gamma
from realqt.sampling import random_hermitian


def test_registry_names_unique():
    names = verify.property_names()
    assert len(names) == len(set(names))


def test_every_module_invariant_once():
    rows = verify.run_suite(seed=1, trials=2, dims=[(2, 2)]).rows
    required = [r for r in rows if r.required]
    counts = {m: sum(r.module == m for r in required) for m in ("gamma", "combine", "theory")}
    assert counts == {"gamma": 7, "combine": 6, "theory": 7}
    assert [r.name for r in rows] == verify.property_names()


def test_suite_passes_and_is_reproducible():
    a = verify.run_suite(seed=3, trials=8, dims=[(2, 2), (2, 3)])
    b = verify.run_suite(seed=3, trials=8, dims=[(2, 2), (2, 3)])
    assert a.passed, a.failing()
    da, db = a.to_dict(), b.to_dict()
    da.pop("wall_time"), db.pop("wall_time")
    assert da == db


def test_corrupted_variant_differs(rng):
    s, t = gamma(random_hermitian(2, rng)), gamma(random_hermitian(2, rng))
    assert np.abs(verify.dot_corrupted(s, t) - dot(s, t)).max() > 1e-3


def test_corrupted_fails_factors_only_where_dot_enters():
    r = verify.run_suite(seed=0, trials=5, dot_variant="corrupted")
    assert "dot_gamma_factors" in r.failing()
    assert "gamma_ring_homomorphism" not in r.failing()


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify.run_suite(dims=[(2, 2, 2)])
    with pytest.raises(ValueError):
        verify.run_suite(dot_variant="nope")
