"""Counting measurement histories.

After ``N`` repetitions of a measurement with ``k`` equiprobable outcomes
there are ``k**N`` equally weighted histories. Outcomes are grouped into
labeled regions; an unequal split such as ``n`` outcomes labeled L and ``m``
labeled R stands for a biased two-region measurement with ``p_L = n/(n+m)``.

All counts are exact Python integers; floats appear only in final ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Mapping, NamedTuple

import numpy as np

__all__ = [
    "ConcentrationQuery",
    "EstimateCheck",
    "HistoryEnsemble",
    "HistorySample",
    "branch_count",
    "exact_fraction_within",
    "fraction_within",
    "min_measurements",
    "sample_histories",
    "typical_counts",
    "verify_estimate",
]


def _exact(x) -> Fraction:
    # floats go through their shortest repr so that beta=0.1 means 1/10
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"expected a finite number, got {x}")
        return Fraction(repr(float(x)))
    return Fraction(str(x))


@dataclass(frozen=True)
class HistoryEnsemble:
    N: int
    k: int = 2
    labeling: Mapping[int, str] = field(default=None)

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N}")
        if int(self.k) != self.k or self.k < 2:
            raise ValueError(f"k must be an integer >= 2, got {self.k}")
        labeling = self.labeling
        if labeling is None:
            if self.k != 2:
                raise ValueError("an explicit labeling is required for k > 2")
            labeling = {0: "L", 1: "R"}
        labeling = {int(o): str(lab) for o, lab in labeling.items()}
        if set(labeling) != set(range(self.k)):
            raise ValueError(f"labeling must cover outcomes 0..{self.k - 1}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "labeling", labeling)

    @classmethod
    def split(cls, N: int, n: int, m: int) -> HistoryEnsemble:
        """``n`` outcomes labeled L followed by ``m`` labeled R."""
        labeling = {o: ("L" if o < n else "R") for o in range(n + m)}
        return cls(N, n + m, labeling)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.labeling.values()))

    def outcomes_with(self, label: str) -> int:
        c = sum(1 for lab in self.labeling.values() if lab == label)
        if c == 0:
            raise KeyError(f"no outcome carries label {label!r}")
        return c

    def target(self, label: str) -> Fraction:
        return Fraction(self.outcomes_with(label), self.k)

    @property
    def branch_total(self) -> int:
        return self.k**self.N


@dataclass(frozen=True)
class ConcentrationQuery:
    beta: float
    alpha: float
    p: float = 0.5

    def __post_init__(self):
        if not (0 < self.alpha < 1):
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if not (0 < self.p < 1):
            raise ValueError(f"p must lie in (0, 1), got {self.p}")


def branch_count(ensemble: HistoryEnsemble, label: str, j: int) -> int:
    """Number of histories in which ``label`` occurs exactly ``j`` times."""
    c = ensemble.outcomes_with(label)
    N, k = ensemble.N, ensemble.k
    if not 0 <= j <= N:
        return 0
    return math.comb(N, j) * c**j * (k - c) ** (N - j)


def typical_counts(N: int, p, beta) -> list[int]:
    """Occurrence counts ``j`` with ``|j/N - p| < beta`` (strict)."""
    p, beta = _exact(p), _exact(beta)
    return [j for j in range(N + 1) if abs(Fraction(j, N) - p) < beta]


def exact_fraction_within(ensemble: HistoryEnsemble, beta, label: str = "L") -> Fraction:
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    p = ensemble.target(label)
    hits = sum(branch_count(ensemble, label, j) for j in typical_counts(ensemble.N, p, beta))
    return Fraction(hits, ensemble.branch_total)


def fraction_within(ensemble: HistoryEnsemble, beta, label: str = "L") -> float:
    """Share of all histories whose frequency of ``label`` is within ``beta`` of its target."""
    return float(exact_fraction_within(ensemble, beta, label))


def min_measurements(query: ConcentrationQuery) -> int:
    """Gaussian-regime estimate ``ceil(ln(1/alpha) / beta**2)``.

    A rough large-N guide, not a guaranteed bound; see ``verify_estimate``.
    """
    return max(1, math.ceil(-math.log(query.alpha) / query.beta**2))


class EstimateCheck(NamedTuple):
    N_est: int
    atypical_fraction: float
    holds: bool


def verify_estimate(query: ConcentrationQuery) -> EstimateCheck:
    """Exact share of atypical binary histories at the estimated length."""
    if _exact(query.p) != Fraction(1, 2):
        raise ValueError("the estimate is checked for the symmetric case p = 1/2 only")
    n_est = min_measurements(query)
    atypical = 1 - exact_fraction_within(HistoryEnsemble(n_est), query.beta, "L")
    return EstimateCheck(n_est, float(atypical), atypical <= _exact(query.alpha))


@dataclass(frozen=True)
class HistorySample:
    """Outcome tallies of randomly drawn histories.

    ``outcome_counts[s, o]`` is how often outcome ``o`` occurred in sampled
    history ``s``.
    """

    ensemble: HistoryEnsemble
    outcome_counts: np.ndarray

    @property
    def count(self) -> int:
        return self.outcome_counts.shape[0]

    def label_counts(self, label: str) -> np.ndarray:
        cols = [o for o, lab in self.ensemble.labeling.items() if lab == label]
        if not cols:
            raise KeyError(f"no outcome carries label {label!r}")
        return self.outcome_counts[:, cols].sum(axis=1)

    def frequencies(self, label: str) -> np.ndarray:
        return self.label_counts(label) / self.ensemble.N

    def mean_frequency(self, label: str) -> float:
        return float(self.frequencies(label).mean())

    def frequency_table(self) -> dict[str, float]:
        return {label: self.mean_frequency(label) for label in self.ensemble.labels}

    def fraction_within(self, beta, label: str = "L") -> float:
        ok = np.zeros(self.ensemble.N + 1, dtype=bool)
        ok[typical_counts(self.ensemble.N, self.ensemble.target(label), beta)] = True
        return float(ok[self.label_counts(label)].mean())


def sample_histories(ensemble: HistoryEnsemble, count: int, seed: int) -> HistorySample:
    """Draw ``count`` histories uniformly from all ``k**N`` branches.

    Only per-outcome tallies are kept; they are drawn directly from their
    multinomial law, which is the exact distribution of the tallies of a
    uniformly random history.
    """
    if int(count) != count or count < 1:
        raise ValueError(f"count must be a positive integer, got {count}")
    rng = np.random.default_rng(seed)
    k = ensemble.k
    tallies = rng.multinomial(ensemble.N, np.full(k, 1.0 / k), size=int(count))
    return HistorySample(ensemble, tallies)
