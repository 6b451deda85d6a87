"""Splitting unequal amplitudes into equally populated dots.

A start state ``(sqrt(n), 0, ..., 0 | sqrt(m), 0, ..., 0)`` sits on two blocks
of ``n`` and ``m`` dots with a permanent barrier between them. Inside each
block a left-to-right cascade of resonant two-dot pulses spreads the block's
norm evenly, one fresh empty dot per pulse. Because the barrier is never
opened, each block keeps its norm, and every dot ends with the same weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .chain import DotChain, QuantumState, RegionPartition, as_state
from .evolver import EvolutionSegment, evolve, level_splitting

__all__ = [
    "Pulse",
    "PulseSchedule",
    "SplitPlan",
    "approximate_ratio",
    "best_rational",
    "execute",
    "plan_equalization",
    "pulse_duration_for_fraction",
    "zero_phase",
]

TRANSFER_HOPPING = 1.0


@dataclass(frozen=True)
class Pulse:
    """One rectangular pulse.

    ``kind="transfer"``: ``target`` is the active bond ``j`` (dots j, j+1),
    the only nonzero hopping in the segment. ``kind="phase"``: ``target`` is
    the dot carrying the on-site energy, with every hopping zero.
    """

    segment: EvolutionSegment
    kind: Literal["transfer", "phase"]
    target: int
    fraction: float | None = None

    def __post_init__(self):
        hopping = np.asarray(self.segment.chain.hopping)
        active = np.flatnonzero(hopping)
        if self.kind == "transfer":
            if active.size > 1 or (active.size == 1 and active[0] != self.target):
                raise ValueError("a transfer pulse may only open its own bond")
        elif self.kind == "phase":
            if active.size:
                raise ValueError("a phase pulse needs every hopping closed")
        else:
            raise ValueError(f"unknown pulse kind {self.kind!r}")


@dataclass(frozen=True)
class PulseSchedule:
    pulses: tuple[Pulse, ...] = ()

    def __len__(self):
        return len(self.pulses)

    def __iter__(self):
        return iter(self.pulses)

    @property
    def segments(self) -> tuple[EvolutionSegment, ...]:
        return tuple(p.segment for p in self.pulses)

    @property
    def total_time(self) -> float:
        return sum(p.segment.duration for p in self.pulses)

    def __add__(self, other: PulseSchedule) -> PulseSchedule:
        return PulseSchedule(self.pulses + other.pulses)


@dataclass(frozen=True)
class SplitPlan:
    n: int
    m: int
    schedule: PulseSchedule
    partition: RegionPartition

    @property
    def site_count(self) -> int:
        return self.n + self.m

    def start_state(self) -> QuantumState:
        amps = np.zeros(self.site_count, dtype=complex)
        amps[0] = math.sqrt(self.n)
        amps[self.n] = math.sqrt(self.m)
        return QuantumState(amps)

    def block_schedule(self, label: str) -> PulseSchedule:
        """The pulses acting inside one region only."""
        dots = set(self.partition.regions[label])
        return PulseSchedule(
            tuple(p for p in self.schedule if {p.target, p.target + 1} <= dots)
        )


def best_rational(x: Fraction, max_denominator: int) -> Fraction:
    """Closest positive fraction to ``x`` with denominator <= max_denominator.

    Ties go to the smaller denominator, then the smaller numerator. The two
    contenders are the Farey neighbours of ``x`` of that order, found from the
    continued-fraction expansion.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("x must be positive")
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    if x.denominator <= max_denominator:
        return x
    # convergents p/q; (p0, q0) is the previous one
    p0, q0, p1, q1 = 0, 1, 1, 0
    n, d = x.numerator, x.denominator
    while True:
        a = n // d
        q2 = q0 + a * q1
        if q2 > max_denominator:
            break
        p0, q0, p1, q1 = p1, q1, p0 + a * p1, q2
        n, d = d, n - a * d
    k = (max_denominator - q0) // q1
    semi = Fraction(p0 + k * p1, q0 + k * q1)
    conv = Fraction(p1, q1)
    candidates = [c for c in (semi, conv) if c > 0]
    if not candidates:
        return Fraction(1, max_denominator)
    return min(candidates, key=lambda c: (abs(c - x), c.denominator, c.numerator))


def approximate_ratio(r: float, max_denominator: int) -> tuple[int, int]:
    """Integers ``(n, m)`` with ``n/m`` closest to ``r**2``.

    ``r`` is an amplitude ratio A_L / A_R, so ``n`` and ``m`` are the dot
    counts that make the two blocks carry equal per-dot weight.
    """
    if not (math.isfinite(r) and r > 0):
        raise ValueError(f"ratio must be finite and positive, got {r}")
    if int(max_denominator) != max_denominator or max_denominator < 1:
        raise ValueError("max_denominator must be a positive integer")
    frac = best_rational(Fraction(r) ** 2, int(max_denominator))
    return frac.numerator, frac.denominator


def pulse_duration_for_fraction(f: float, delta_e: float) -> float:
    """Shortest resonant pulse moving weight fraction ``f`` to an empty partner.

    Inverts ``f = sin(delta_e * t / 2)**2``.
    """
    if not (0.0 <= f <= 1.0):
        raise ValueError(f"fraction must lie in [0, 1], got {f}")
    if not delta_e > 0:
        raise ValueError(f"level splitting must be positive, got {delta_e}")
    return 2.0 / delta_e * math.asin(math.sqrt(f))


def _cascade(first: int, count: int, site_count: int) -> list[Pulse]:
    pulses = []
    idle = DotChain.idle(site_count)
    for j in range(count - 1):
        remaining = count - j
        fraction = (remaining - 1) / remaining
        bond = first + j
        chain = idle.with_hopping(bond, TRANSFER_HOPPING)
        t = pulse_duration_for_fraction(fraction, level_splitting(chain, (bond, bond + 1)))
        pulses.append(Pulse(EvolutionSegment(chain, t), "transfer", bond, fraction))
    return pulses


def plan_equalization(n: int, m: int) -> SplitPlan:
    """Cascade plan over ``n + m`` dots, left block first."""
    for name, v in (("n", n), ("m", m)):
        if int(v) != v or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")
    n, m = int(n), int(m)
    pulses = _cascade(0, n, n + m) + _cascade(n, m, n + m)
    return SplitPlan(n, m, PulseSchedule(tuple(pulses)), RegionPartition.blocks(n, m))


def execute(plan: SplitPlan, state=None, schedule: PulseSchedule | None = None) -> QuantumState:
    """Run ``schedule`` (default: the plan's own) from ``state`` (default: canonical start)."""
    state = plan.start_state() if state is None else as_state(state)
    schedule = plan.schedule if schedule is None else schedule
    if len(state) != plan.site_count:
        raise ValueError(f"state has {len(state)} dots, plan needs {plan.site_count}")
    for pulse in schedule:
        if not plan.partition.is_isolated(pulse.segment.chain):
            raise ValueError(f"pulse on bond {pulse.target} opens the barrier between blocks")
    for segment in schedule.segments:
        state = evolve(state, segment)
    return state


def zero_phase(state, dot: int, chain: DotChain, energy: float = 1.0) -> tuple[PulseSchedule, QuantumState]:
    """Rotate the phase of one decoupled dot to zero with an on-site pulse.

    The pulse holds ``energy`` on ``dot`` for a time ``T >= 0`` with
    ``energy * T = arg(A_dot) (mod 2 pi)``. All other dots are held idle
    during the pulse so their amplitudes are untouched.
    """
    state = as_state(state)
    n = chain.site_count
    if len(state) != n:
        raise ValueError(f"state has {len(state)} dots, chain has {n}")
    if not 0 <= dot < n:
        raise IndexError(f"dot {dot} outside a {n}-dot chain")
    if (dot > 0 and chain.hopping[dot - 1] != 0) or (dot < n - 1 and chain.hopping[dot] != 0):
        raise ValueError(f"dot {dot} is coupled to a neighbour; a phase pulse would leak norm")
    if energy == 0 or not math.isfinite(energy):
        raise ValueError("pulse energy must be finite and nonzero")

    amp = state.amplitudes[dot]
    theta = math.atan2(amp.imag, amp.real) % (2 * math.pi)
    if amp == 0 or theta == 0:
        return PulseSchedule(), state
    t = theta / energy if energy > 0 else (theta - 2 * math.pi) / energy
    segment = EvolutionSegment(DotChain.idle(n).with_on_site(dot, energy), t)
    pulse = Pulse(segment, "phase", dot)
    return PulseSchedule((pulse,)), evolve(state, segment)
