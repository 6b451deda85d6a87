"""Exact propagation under piecewise-constant chain Hamiltonians."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .chain import DotChain, QuantumState, as_state

__all__ = ["EvolutionSegment", "eigensystem", "evolve", "level_splitting", "propagator"]


@dataclass(frozen=True)
class EvolutionSegment:
    chain: DotChain
    duration: float

    def __post_init__(self):
        duration = float(self.duration)
        if not np.isfinite(duration) or duration < 0:
            raise ValueError(f"segment duration must be finite and >= 0, got {self.duration}")
        object.__setattr__(self, "duration", duration)


def eigensystem(chain: DotChain) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvectors (as columns)."""
    return eigh_tridiagonal(
        np.asarray(chain.on_site), -np.asarray(chain.hopping), lapack_driver="stev"
    )


def propagator(chain: DotChain, t: float) -> np.ndarray:
    """Dense ``exp(-i H t)``, assembled block by block over barrier-separated runs."""
    u = np.zeros((chain.site_count, chain.site_count), dtype=complex)
    for run in chain.components():
        sl = slice(run.start, run.stop)
        sub = DotChain(chain.on_site[sl], chain.hopping[run.start : run.stop - 1])
        energies, vecs = eigensystem(sub)
        u[sl, sl] = (vecs * np.exp(-1j * energies * t)) @ vecs.T
    return u


def evolve(state, segment: EvolutionSegment) -> QuantumState:
    """Apply ``exp(-i H T)`` for one constant-Hamiltonian segment.

    Dots separated by a zero hopping are propagated independently, so norm
    inside any isolated region is conserved to rounding.
    """
    state = as_state(state)
    chain = segment.chain
    if len(state) != chain.site_count:
        raise ValueError(f"state has {len(state)} dots, chain has {chain.site_count}")
    if segment.duration == 0:
        return state
    t = segment.duration
    amps = state.amplitudes
    out = np.empty_like(amps)
    for run in chain.components():
        sl = slice(run.start, run.stop)
        if len(run) == 1:
            out[sl] = amps[sl] * np.exp(-1j * chain.on_site[run.start] * t)
            continue
        sub = DotChain(chain.on_site[sl], chain.hopping[run.start : run.stop - 1])
        energies, vecs = eigensystem(sub)
        out[sl] = vecs @ (np.exp(-1j * energies * t) * (vecs.T @ amps[sl]))
    return QuantumState(out)


def level_splitting(chain: DotChain, pair: tuple[int, int]) -> float:
    """Gap of the 2x2 Hamiltonian restricted to two adjacent dots.

    Equals ``2|tau|`` for a degenerate pair. It is the Rabi frequency of the
    pair only when no other coupling reaches either dot.
    """
    i, j = sorted(int(p) for p in pair)
    if j - i != 1:
        raise ValueError(f"dots {pair} are not adjacent")
    if i < 0 or j >= chain.site_count:
        raise IndexError(f"pair {pair} outside a {chain.site_count}-dot chain")
    detuning = chain.on_site[i] - chain.on_site[j]
    return float(np.hypot(detuning, 2.0 * chain.hopping[i]))
