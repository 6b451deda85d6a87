"""Unitary dot-chain simulations of amplitude splitting and branch statistics."""

from .born import (
    PowerRule,
    born_probabilities,
    deformation_discrimination,
    parseval_check,
    power_rule_probabilities,
)
from .branches import (
    ConcentrationQuery,
    HistoryEnsemble,
    exact_fraction_within,
    fraction_within,
    min_measurements,
    sample_histories,
    verify_estimate,
)
from .chain import DotChain, QuantumState, RegionPartition, build_chain, regional_norms, total_norm
from .evolver import EvolutionSegment, eigensystem, evolve, level_splitting
from .protocol import (
    PulseSchedule,
    SplitPlan,
    approximate_ratio,
    execute,
    plan_equalization,
    pulse_duration_for_fraction,
    zero_phase,
)

__version__ = "0.1.0"

__all__ = [
    "ConcentrationQuery",
    "DotChain",
    "EvolutionSegment",
    "HistoryEnsemble",
    "PowerRule",
    "PulseSchedule",
    "QuantumState",
    "RegionPartition",
    "SplitPlan",
    "approximate_ratio",
    "born_probabilities",
    "build_chain",
    "deformation_discrimination",
    "eigensystem",
    "evolve",
    "exact_fraction_within",
    "execute",
    "fraction_within",
    "level_splitting",
    "min_measurements",
    "parseval_check",
    "plan_equalization",
    "power_rule_probabilities",
    "pulse_duration_for_fraction",
    "regional_norms",
    "sample_histories",
    "total_norm",
    "verify_estimate",
    "zero_phase",
]
