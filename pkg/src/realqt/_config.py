"""Default tolerances.  ``REALQT_TOL`` overrides every decision tolerance
(PSD, witness, subspace); algebraic identity checks keep ``ALGEBRA_TOL``."""
import os

ALGEBRA_TOL = 1e-12
PSD_TOL = 1e-9
WITNESS_TOL = 1e-7
SUBSPACE_TOL = 1e-8


def _override(default: float) -> float:
    raw = os.environ.get("REALQT_TOL", "").strip()
    if not raw:
        return default
    val = float(raw)
    if not val >= 0:
        raise ValueError(f"REALQT_TOL must be a nonnegative number, got {raw!r}")
    return val


def psd_tol() -> float:
    return _override(PSD_TOL)


def witness_tol() -> float:
    return _override(WITNESS_TOL)


def subspace_tol() -> float:
    return _override(SUBSPACE_TOL)
