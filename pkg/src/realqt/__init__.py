"""Real-matrix representations of finite-dimensional complex quantum theory."""
from realqt.combine import (
    MappedVector,
    Rule,
    SystemDims,
    combine,
    dot,
    g_map,
    map_e,
    map_e_inv,
    map_m,
    map_m_inv,
    map_m_lifted,
    normalization,
    tau,
    wedge,
)
from realqt.gamma import SpecialSymmetric, dual_bases, gamma, gamma_inv, is_special_symmetric
from realqt.theory import (
    RealEffect,
    RealState,
    SeparableSpec,
    Verdict,
    born,
    is_state,
    is_state_real_only,
    make_separable,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "MappedVector", "Rule", "SystemDims", "combine", "dot", "g_map", "map_e", "map_e_inv",
    "map_m", "map_m_inv", "map_m_lifted", "normalization", "tau", "wedge",
    "SpecialSymmetric", "dual_bases", "gamma", "gamma_inv", "is_special_symmetric",
    "RealEffect", "RealState", "SeparableSpec", "Verdict", "born", "is_state",
    "is_state_real_only", "make_separable", "witness",
]
