"""Secrecy degrees of freedom of the two-user MIMO broadcast channel with delayed CSIT.

Closed-form SDoF values and regions, artificial-noise-alignment scheme
construction as explicit block matrices, and numerical verification of the
rank and mutual-information slope properties those schemes rely on.
"""

from ._core import (
    AntennaConfig,
    ChannelRealization,
    CsitMode,
    ExchangeableSource,
    PhasePlan,
    SchemeKind,
    SchemeMatrices,
    __version__,
    build_scheme,
    check_entropy_symmetry,
    entropy_profile,
    joint_entropy,
    leakage,
    monte_carlo_sdof_json,
    monte_carlo_sdof_pass,
    mutual_info,
    phase_plan,
    random_source,
    region,
    sample_states,
    sdof,
    sum_sdof_pair,
    sweep,
    verify_essential_lemma_json,
    verify_ranks_json,
    verify_ranks_pass,
)

__all__ = [
    "AntennaConfig",
    "ChannelRealization",
    "CsitMode",
    "ExchangeableSource",
    "PhasePlan",
    "SchemeKind",
    "SchemeMatrices",
    "__version__",
    "build_scheme",
    "check_entropy_symmetry",
    "entropy_profile",
    "joint_entropy",
    "leakage",
    "monte_carlo_sdof_json",
    "monte_carlo_sdof_pass",
    "mutual_info",
    "phase_plan",
    "random_source",
    "region",
    "sample_states",
    "sdof",
    "sum_sdof_pair",
    "sweep",
    "verify_essential_lemma_json",
    "verify_ranks_json",
    "verify_ranks_pass",
]
