"""Compare the numba and numpy kernel paths.

For the eigensolver the comparison is compiled Jacobi against LAPACK.

Run with ``python benchmarks/bench_kernels.py``.  Each case is timed with
``timeit`` after a warm-up call (so JIT compilation is excluded) and the two
paths are checked against each other before timing.
"""
import argparse
import timeit

import numpy as np

from realqt import _kernels
from realqt.combine import Rule, map_m_inv, map_m_lifted, g_map
from realqt.sampling import random_hermitian


def _time(fn, repeat: int) -> float:
    fn()
    number = max(1, int(0.2 / max(timeit.timeit(fn, number=1), 1e-6)))
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def cases(rng):
    for d in (8, 16, 32, 64):
        h = random_hermitian(d, rng)
        yield f"eigh complex d={d}", lambda use, h=h: _kernels.herm_eigh(h, method="jacobi" if use else "lapack")[0]
        s = h.real.copy()
        yield f"eigh real d={d}", lambda use, s=s: _kernels.herm_eigh(s, method="jacobi" if use else "lapack")[0]
    for pre, m, post in ((4, 4, 64), (16, 8, 64), (64, 16, 16)):
        l_mat = rng.normal(size=(m, m))
        t3 = rng.normal(size=(pre, m, post))
        yield f"mode_product {pre}x{m}x{post}", lambda use, l=l_mat, t=t3: _kernels.mode_product(l, t, use_numba=use)


def end_to_end(rng, repeat):
    """Whole-pipeline timings on the backend selected by REALQT_NUMBA."""
    x = random_hermitian(8, rng)
    v = map_m_lifted(x, (2, 2, 2), Rule.TENSOR)
    rows = [
        ("lift (2,2,2) tensor", lambda: map_m_lifted(x, (2, 2, 2), Rule.TENSOR)),
        ("inverse (2,2,2) tensor", lambda: map_m_inv(v)),
        ("G map (2,2,2)", lambda: g_map(v)),
    ]
    return [(name, _time(fn, repeat)) for name, fn in rows]


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(args.seed)
    print(f"{'case':28s} {'numba (us)':>12s} {'numpy (us)':>12s} {'ratio':>8s}")
    print("(eigh rows: numba column is compiled Jacobi, numpy column is LAPACK)")
    for name, fn in cases(rng):
        a, b = np.sort(np.ravel(fn(True))), np.sort(np.ravel(fn(False)))
        assert np.allclose(a, b, atol=1e-9), name
        t_nb = _time(lambda: fn(True), args.repeat)
        t_np = _time(lambda: fn(False), args.repeat)
        print(f"{name:28s} {t_nb * 1e6:12.1f} {t_np * 1e6:12.1f} {t_np / t_nb:8.2f}")
    print(f"\nend to end on backend '{_kernels.backend()}':")
    for name, t in end_to_end(rng, args.repeat):
        print(f"{name:28s} {t * 1e6:12.1f} us")


if __name__ == "__main__":
    main()
