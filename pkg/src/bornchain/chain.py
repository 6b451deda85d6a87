"""Dot lattices, states over them, and region bookkeeping.

Each dot carries one localized orbital; dot orbitals are taken to be exactly
orthonormal. Energies are in arbitrary units with hbar = 1. A hopping of
exactly 0.0 is an impenetrable barrier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

__all__ = [
    "DotChain",
    "QuantumState",
    "RegionPartition",
    "as_state",
    "build_chain",
    "regional_norms",
    "total_norm",
]


@dataclass(frozen=True)
class DotChain:
    """Nearest-neighbour tight-binding chain.

    The Hamiltonian is ``H[j, j] = on_site[j]`` and
    ``H[j, j+1] = H[j+1, j] = -hopping[j]``.
    """

    on_site: tuple[float, ...]
    hopping: tuple[float, ...] = ()

    def __post_init__(self):
        on_site = tuple(float(e) for e in self.on_site)
        hopping = tuple(float(t) for t in self.hopping)
        if len(on_site) == 0:
            raise ValueError("a chain needs at least one dot")
        if len(hopping) != len(on_site) - 1:
            raise ValueError(
                f"expected {len(on_site) - 1} hoppings for {len(on_site)} dots, "
                f"got {len(hopping)}"
            )
        if not (np.all(np.isfinite(on_site)) and np.all(np.isfinite(hopping))):
            raise ValueError("chain parameters must be finite")
        object.__setattr__(self, "on_site", on_site)
        object.__setattr__(self, "hopping", hopping)

    @property
    def site_count(self) -> int:
        return len(self.on_site)

    def hamiltonian(self) -> np.ndarray:
        h = np.diag(np.asarray(self.on_site))
        off = -np.asarray(self.hopping)
        idx = np.arange(self.site_count - 1)
        h[idx, idx + 1] = off
        h[idx + 1, idx] = off
        return h

    def components(self) -> list[range]:
        """Maximal runs of dots connected by nonzero hoppings."""
        runs = []
        start = 0
        for j, t in enumerate(self.hopping):
            if t == 0.0:
                runs.append(range(start, j + 1))
                start = j + 1
        runs.append(range(start, self.site_count))
        return runs

    def with_on_site(self, dot: int, energy: float) -> DotChain:
        on_site = list(self.on_site)
        on_site[dot] = energy
        return DotChain(tuple(on_site), self.hopping)

    def with_hopping(self, bond: int, value: float) -> DotChain:
        hopping = list(self.hopping)
        hopping[bond] = value
        return DotChain(self.on_site, tuple(hopping))

    @classmethod
    def idle(cls, site_count: int) -> DotChain:
        """Degenerate, fully decoupled dots at zero energy."""
        return cls((0.0,) * site_count, (0.0,) * (site_count - 1))


def build_chain(on_site, hopping) -> DotChain:
    return DotChain(tuple(on_site), tuple(hopping))


@dataclass(frozen=True)
class QuantumState:
    """Complex amplitude per dot. Not normalized unless the caller does so."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("amplitudes must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def __len__(self):
        return self.amplitudes.size

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.amplitudes.copy()
        return self.amplitudes.astype(dtype)

    @property
    def dot_norms(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def normalized(self) -> QuantumState:
        norm = total_norm(self)
        if norm == 0:
            raise ValueError("cannot normalize the zero state")
        return QuantumState(self.amplitudes / np.sqrt(norm))


def as_state(state) -> QuantumState:
    if isinstance(state, QuantumState):
        return state
    return QuantumState(state)


@dataclass(frozen=True)
class RegionPartition:
    """Disjoint labeled groups of dots covering ``0 .. size-1``."""

    regions: Mapping[str, tuple[int, ...]]
    size: int = field(init=False)

    def __post_init__(self):
        regions = {str(k): tuple(sorted(int(i) for i in v)) for k, v in self.regions.items()}
        seen: list[int] = [i for dots in regions.values() for i in dots]
        if any(i < 0 for i in seen):
            raise ValueError("dot indices must be nonnegative")
        if len(seen) != len(set(seen)):
            raise ValueError("regions overlap")
        size = len(seen)
        if set(seen) != set(range(size)):
            raise ValueError("regions must cover dots 0..N-1 without gaps")
        object.__setattr__(self, "regions", regions)
        object.__setattr__(self, "size", size)

    @classmethod
    def blocks(cls, *sizes: int, labels=None) -> RegionPartition:
        """Consecutive blocks, labeled L, R by default for two blocks."""
        if labels is None:
            labels = ("L", "R") if len(sizes) == 2 else tuple(str(i) for i in range(len(sizes)))
        regions = {}
        start = 0
        for label, size in zip(labels, sizes, strict=True):
            regions[label] = tuple(range(start, start + size))
            start += size
        return cls(regions)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.regions)

    def region_of(self, dot: int) -> str:
        for label, dots in self.regions.items():
            if dot in dots:
                return label
        raise IndexError(f"dot {dot} not in partition")

    def crossing_bonds(self) -> list[int]:
        """Bonds ``j`` (between dots j and j+1) that join different regions."""
        owner = np.empty(self.size, dtype=object)
        for label, dots in self.regions.items():
            owner[list(dots)] = label
        return [j for j in range(self.size - 1) if owner[j] != owner[j + 1]]

    def is_isolated(self, chain: DotChain) -> bool:
        if chain.site_count != self.size:
            raise ValueError("partition and chain sizes differ")
        return all(chain.hopping[j] == 0.0 for j in self.crossing_bonds())


def total_norm(state) -> float:
    amps = as_state(state).amplitudes
    return float(np.vdot(amps, amps).real)


def regional_norms(state, partition: RegionPartition) -> dict[str, float]:
    state = as_state(state)
    if len(state) != partition.size:
        raise IndexError(
            f"partition covers {partition.size} dots but state has {len(state)}"
        )
    weights = state.dot_norms
    return {label: float(weights[list(dots)].sum()) for label, dots in partition.regions.items()}
