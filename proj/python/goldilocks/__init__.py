"""Exact chamber counting for spaces of admissible weights.

Thin wrapper over the C++ extension; see the project README for the
mathematical background and the CLI.
"""

from ._core import (
    BooleanFunction,
    BudgetError,
    EngineMismatchError,
    GoldilocksError,
    anti_self_dualize,
    canonicalize,
    chamber_representative,
    chow,
    classify,
    count_chambers,
    degree,
    dual,
    find_realization,
    identity_check,
    irmatov_estimate,
    is_ample,
    is_goldilocks,
    is_positive,
    is_self_dual,
    is_semi_goldilocks,
    is_small,
    is_threshold,
    orbit_size,
    permute,
    phi_map,
    ratio_report,
    reduce,
    same_chamber,
    selftest,
    self_dualize,
    u_complement,
    weak_variables,
)

__all__ = [
    "BooleanFunction",
    "BudgetError",
    "EngineMismatchError",
    "GoldilocksError",
    "anti_self_dualize",
    "canonicalize",
    "chamber_representative",
    "chow",
    "classify",
    "count_chambers",
    "degree",
    "dual",
    "find_realization",
    "identity_check",
    "irmatov_estimate",
    "is_ample",
    "is_goldilocks",
    "is_positive",
    "is_self_dual",
    "is_semi_goldilocks",
    "is_small",
    "is_threshold",
    "orbit_size",
    "permute",
    "phi_map",
    "ratio_report",
    "reduce",
    "same_chamber",
    "selftest",
    "self_dualize",
    "u_complement",
    "weak_variables",
]
