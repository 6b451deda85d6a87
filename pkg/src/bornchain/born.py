"""Candidate probability rules ``P ~ |A|**m`` and how they behave under splitting."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chain import RegionPartition, as_state
from .protocol import execute, plan_equalization

__all__ = [
    "PowerRule",
    "born_probabilities",
    "deformation_discrimination",
    "parseval_check",
    "power_rule_probabilities",
]


@dataclass(frozen=True)
class PowerRule:
    exponent: float

    def __post_init__(self):
        if not (np.isfinite(self.exponent) and self.exponent > 0):
            raise ValueError(f"exponent must be positive, got {self.exponent}")


BORN = PowerRule(2.0)


def power_rule_probabilities(state, partition: RegionPartition, rule: PowerRule) -> dict[str, float]:
    state = as_state(state)
    if len(state) != partition.size:
        raise IndexError(f"partition covers {partition.size} dots but state has {len(state)}")
    weights = np.abs(state.amplitudes) ** rule.exponent
    total = weights.sum()
    if total == 0:
        raise ValueError("probabilities are undefined for the zero state")
    return {label: float(weights[list(dots)].sum() / total) for label, dots in partition.regions.items()}


def born_probabilities(state, partition: RegionPartition) -> dict[str, float]:
    return power_rule_probabilities(state, partition, BORN)


def deformation_discrimination(n: int, exponents) -> dict[float, tuple[float, float, float]]:
    """Left-region probability before and after equalizing the right region.

    Starts from amplitudes ``(1, n)`` on an isolated pair, then splits the
    right amplitude over ``n**2`` dots without touching the left dot. A rule
    consistent with isolation must report the same left probability both
    times. Returns ``{exponent: (P_L_before, P_L_after, |change|)}``.
    """
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    rules = [PowerRule(float(m)) for m in exponents]
    plan = plan_equalization(1, int(n) ** 2)
    before = plan.start_state()
    after = execute(plan, before, plan.block_schedule("R"))
    out = {}
    for rule in rules:
        p0 = power_rule_probabilities(before, plan.partition, rule)["L"]
        p1 = power_rule_probabilities(after, plan.partition, rule)["L"]
        out[rule.exponent] = (p0, p1, abs(p1 - p0))
    return out


def parseval_check(state) -> tuple[float, float]:
    """Norm of the amplitudes and of their unitary DFT."""
    amps = as_state(state).amplitudes
    spectrum = np.fft.fft(amps, norm="ortho")
    return float(np.vdot(amps, amps).real), float(np.vdot(spectrum, spectrum).real)
