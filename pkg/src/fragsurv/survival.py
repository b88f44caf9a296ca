"""Censored survival data model and the conjugate exponential-Gamma machinery.

The sampling model is exponential with rate lambda: density f(t) = lambda
e^{-lambda t}, survival S(t) = e^{-lambda t}, constant hazard h(t) = lambda,
median ln 2 / lambda. A Gamma(shape, rate) prior on lambda is conjugate:
observed events contribute a factor lambda e^{-lambda T}, right-censored
observations contribute e^{-lambda T}, so the posterior is
Gamma(shape + #events, rate + sum of all follow-up times).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .specfun import DEFAULT_CONFIG, SpecFunConfig, reg_lower_inc_gamma

__all__ = [
    "Observation",
    "SurvivalDataset",
    "GammaParams",
    "AnalysisConfig",
    "log_likelihood",
    "posterior_update",
    "exp_survival",
    "exp_hazard",
    "median_from_rate",
    "posterior_prob_median_exceeds",
]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class Observation:
    """One subject's follow-up: time > 0 and event indicator (1 event, 0 censored)."""

    time: float
    event: int

    def __post_init__(self):
        if not (isinstance(self.time, (int, float)) and math.isfinite(self.time) and self.time > 0):
            raise ValueError(f"observation time must be finite and > 0, got {self.time!r}")
        if self.event not in (0, 1):
            raise ValueError(f"event indicator must be 0 or 1, got {self.event!r}")
        object.__setattr__(self, "time", float(self.time))
        object.__setattr__(self, "event", int(self.event))


@dataclass(frozen=True)
class SurvivalDataset:
    """Ordered, nonempty collection of observations sharing one time unit.

    The unit is descriptive metadata only; times are never converted.
    """

    observations: tuple[Observation, ...]
    time_unit: str = "months"

    def __post_init__(self):
        obs = tuple(self.observations)
        if not obs:
            raise ValueError("a survival dataset must contain at least one observation")
        for o in obs:
            if not isinstance(o, Observation):
                raise ValueError(f"expected Observation, got {o!r}")
        object.__setattr__(self, "observations", obs)

    @property
    def n(self) -> int:
        return len(self.observations)

    @property
    def num_events(self) -> int:
        return sum(o.event for o in self.observations)

    @property
    def num_censored(self) -> int:
        return self.n - self.num_events

    @property
    def total_time(self) -> float:
        return sum(o.time for o in self.observations)


@dataclass(frozen=True)
class GammaParams:
    """Shape/rate parameters of a Gamma distribution (prior or posterior on lambda)."""

    shape: float
    rate: float

    def __post_init__(self):
        for name, value in (("shape", self.shape), ("rate", self.rate)):
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"Gamma {name} must be finite and > 0, got {value!r}")
        object.__setattr__(self, "shape", float(self.shape))
        object.__setattr__(self, "rate", float(self.rate))


@dataclass(frozen=True)
class AnalysisConfig:
    """Analysis settings: median threshold t0, confidence level p0, prior, numerics."""

    t0: float
    p0: float = 0.7
    prior: GammaParams = GammaParams(0.5, 0.5)
    specfun: SpecFunConfig = field(default_factory=SpecFunConfig)

    def __post_init__(self):
        if not (isinstance(self.t0, (int, float)) and math.isfinite(self.t0) and self.t0 > 0):
            raise ValueError(f"t0 must be finite and > 0, got {self.t0!r}")
        if not (isinstance(self.p0, (int, float)) and 0.0 < self.p0 < 1.0):
            raise ValueError(f"p0 must lie in (0, 1), got {self.p0!r}")
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "p0", float(self.p0))


def log_likelihood(data: SurvivalDataset, rate: float) -> float:
    """Censored exponential log-likelihood: (#events) ln(rate) - rate * total time."""
    _require_positive_rate(rate)
    return data.num_events * math.log(rate) - rate * data.total_time


def posterior_update(prior: GammaParams, data: SurvivalDataset) -> GammaParams:
    """Conjugate update: shape += #events, rate += total follow-up time. Exact."""
    return GammaParams(prior.shape + data.num_events, prior.rate + data.total_time)


def exp_survival(rate: float, t: float) -> float:
    """Survival probability e^{-rate * t}."""
    _require_positive_rate(rate)
    if not (isinstance(t, (int, float)) and math.isfinite(t) and t >= 0):
        raise ValueError(f"time must be finite and >= 0, got {t!r}")
    return math.exp(-rate * t)


def exp_hazard(rate: float, t: float = 0.0) -> float:
    """Hazard of the exponential model: constant in t, equal to the rate."""
    _require_positive_rate(rate)
    if not (isinstance(t, (int, float)) and math.isfinite(t) and t >= 0):
        raise ValueError(f"time must be finite and >= 0, got {t!r}")
    return float(rate)


def median_from_rate(rate: float) -> float:
    """Median survival time ln 2 / rate."""
    _require_positive_rate(rate)
    return LN2 / rate


def posterior_prob_median_exceeds(
    posterior: GammaParams, t0: float, cfg: SpecFunConfig = DEFAULT_CONFIG
) -> float:
    """Probability that the median survival time exceeds t0 under the posterior.

    The median exceeds t0 exactly when lambda < ln 2 / t0, so this is the
    Gamma(shape, rate) CDF at ln 2 / t0, i.e. P(shape, rate * ln 2 / t0).
    Strictly decreasing in t0 and strictly increasing in rate.
    """
    if not (isinstance(t0, (int, float)) and math.isfinite(t0) and t0 > 0):
        raise ValueError(f"t0 must be finite and > 0, got {t0!r}")
    return reg_lower_inc_gamma(posterior.shape, posterior.rate * LN2 / t0, cfg)


def _require_positive_rate(rate: float) -> None:
    if not (isinstance(rate, (int, float)) and math.isfinite(rate) and rate > 0):
        raise ValueError(f"rate must be finite and > 0, got {rate!r}")
