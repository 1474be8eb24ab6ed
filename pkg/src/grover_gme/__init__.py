"""Entanglement dynamics of Grover-search iterates for symmetric marked sets.

The package computes the geometric measure of entanglement of the state
after each amplification step, exactly via a one-dimensional overlap
maximization and asymptotically via a two-branch envelope, and locates
the turning point where the curve switches from rising to falling.
"""
from .curve import (
    AbProfile,
    GmeCurve,
    GmePoint,
    SweepReport,
    SweepRow,
    ab_profile,
    gme_curve,
    scale_invariance_sweep,
)
from .gme import (
    AsymmetricMarkedSetError,
    TurningPoint,
    b_max,
    gme_asymptotic,
    gme_exact,
    overlap,
    turning_point,
    turning_summary,
)
from .marked import MarkedSet, dicke_set, ghz_set, product_set, w_set
from .oracle import (
    MAX_QUBITS,
    OracleResult,
    ProductAnsatz,
    ResourceLimitError,
    check_permutation_symmetry,
    grover_step,
    oracle_gme,
    parse_bitstrings,
    product_state_vector,
    simulate_grover,
    uniform_state,
)
from .schedule import GroverSchedule, make_schedule

__version__ = "0.1.0"

__all__ = [
    "AbProfile",
    "AsymmetricMarkedSetError",
    "GmeCurve",
    "GmePoint",
    "GroverSchedule",
    "MAX_QUBITS",
    "MarkedSet",
    "OracleResult",
    "ProductAnsatz",
    "ResourceLimitError",
    "SweepReport",
    "SweepRow",
    "TurningPoint",
    "ab_profile",
    "b_max",
    "check_permutation_symmetry",
    "dicke_set",
    "ghz_set",
    "gme_asymptotic",
    "gme_curve",
    "gme_exact",
    "grover_step",
    "make_schedule",
    "oracle_gme",
    "overlap",
    "parse_bitstrings",
    "product_set",
    "product_state_vector",
    "scale_invariance_sweep",
    "simulate_grover",
    "turning_point",
    "turning_summary",
    "uniform_state",
    "w_set",
]
