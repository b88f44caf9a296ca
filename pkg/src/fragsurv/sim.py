"""Deterministic synthetic-trial generation and fragility-index Monte Carlo.

Randomness comes from an in-repo SplitMix64 generator rather than the
platform default, so identical seeds give bit-identical datasets on every
platform and language runtime.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace

from .fragility import NotFragileApplicableError, fragility_index
from .specfun import BracketError, ConvergenceError
from .survival import AnalysisConfig, Observation, SurvivalDataset

__all__ = ["SplitMix64", "SimSpec", "simulate_trial", "fi_distribution"]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """SplitMix64 finalizer (Steele, Lea & Flood 2014)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """64-bit SplitMix64 generator; uniform() yields doubles in the open (0, 1)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def uniform(self) -> float:
        # 53-bit mantissa, offset by half a lattice step: never exactly 0 or 1.
        return ((self.next_uint64() >> 11) + 0.5) * 2.0**-53


def substream_seed(seed: int, index: int) -> int:
    """Seed for substream `index`: avalanche-mixed, so substreams are disjoint in practice."""
    return _mix64((seed + (index + 1) * _GOLDEN) & _MASK64)


@dataclass(frozen=True)
class SimSpec:
    """Synthetic single-arm trial: exponential event times, optional censoring.

    Censoring is either administrative (cutoff at censor_time) or independent
    exponential (rate censor_rate); leave both unset for fully observed data.
    """

    n: int
    event_rate: float
    censor_time: float | None = None
    censor_rate: float | None = None
    seed: int = 0

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not (math.isfinite(self.event_rate) and self.event_rate > 0):
            raise ValueError(f"event_rate must be finite and > 0, got {self.event_rate!r}")
        if self.censor_time is not None and self.censor_rate is not None:
            raise ValueError("specify at most one of censor_time and censor_rate")
        if self.censor_time is not None and not (math.isfinite(self.censor_time) and self.censor_time > 0):
            raise ValueError(f"censor_time must be finite and > 0, got {self.censor_time!r}")
        if self.censor_rate is not None and not (math.isfinite(self.censor_rate) and self.censor_rate > 0):
            raise ValueError(f"censor_rate must be finite and > 0, got {self.censor_rate!r}")
        if not (isinstance(self.seed, int) and self.seed >= 0):
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed!r}")


def simulate_trial(spec: SimSpec) -> SurvivalDataset:
    """Draw one dataset: T = -ln(U) / event_rate per subject, then censoring.

    Administrative censoring records (censor_time, 0) whenever T exceeds the
    cutoff; exponential censoring draws C the same way (second uniform per
    subject) and records (min(T, C), [T <= C]). Identical seeds give
    bit-identical datasets.
    """
    rng = SplitMix64(spec.seed)
    observations = []
    for _ in range(spec.n):
        t = -math.log(rng.uniform()) / spec.event_rate
        if spec.censor_time is not None:
            if t > spec.censor_time:
                observations.append(Observation(spec.censor_time, 0))
            else:
                observations.append(Observation(t, 1))
        elif spec.censor_rate is not None:
            c = -math.log(rng.uniform()) / spec.censor_rate
            observations.append(Observation(min(t, c), int(t <= c)))
        else:
            observations.append(Observation(t, 1))
    return SurvivalDataset(tuple(observations))


def fi_distribution(
    spec: SimSpec, config: AnalysisConfig, replications: int
) -> dict[int | str, int]:
    """Histogram of fragility outcomes over independent replications.

    Keys are attained index values (ints) plus the markers "not_attained",
    "not_applicable" and "error"; counts always sum to `replications`.
    Replication i uses substream i of the seed, so prefixes agree across
    different replication counts.
    """
    if not (isinstance(replications, int) and replications >= 1):
        raise ValueError(f"replications must be a positive integer, got {replications!r}")
    counts: Counter[int | str] = Counter()
    for i in range(replications):
        dataset = simulate_trial(replace(spec, seed=substream_seed(spec.seed, i)))
        try:
            result = fragility_index(dataset, config)
        except NotFragileApplicableError:
            counts["not_applicable"] += 1
        except (ConvergenceError, BracketError, ValueError):
            counts["error"] += 1
        else:
            counts[result.fi if result.attained else "not_attained"] += 1
    return dict(counts)
