"""Fragility index search, trajectory, quotient, calibration, sensitivity scans.

The fragility index of a single-arm time-to-event analysis is the smallest
number k of censored observations that, when reclassified as events (keeping
their recorded times), drops the posterior probability of the median survival
time exceeding t0 strictly below the confidence level p0. It is defined only
when the unmodified analysis sits strictly above p0.

Reclassification is performed in order of shortest censoring time first
(ties broken by input position). Under the exponential model the order is
provably irrelevant: a flip adds 1 to the posterior shape and leaves the
posterior rate untouched, because censored follow-up time already counts
toward the rate update. Only the number of flips matters; the literal
ordering is retained because it is the defined procedure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping

from .specfun import (
    DEFAULT_CONFIG,
    BracketError,
    ConvergenceError,
    SpecFunConfig,
    bisect_root,
    reg_lower_inc_gamma,
)
from .survival import (
    LN2,
    AnalysisConfig,
    GammaParams,
    Observation,
    SurvivalDataset,
    posterior_prob_median_exceeds,
    posterior_update,
)

__all__ = [
    "NotFragileApplicableError",
    "FragilityResult",
    "GridCell",
    "SensitivityGrid",
    "fragility_index",
    "fragility_quotient",
    "fi_trajectory",
    "calibrate",
    "sensitivity_scan",
]

# Axis names accepted by sensitivity_scan, in canonical evaluation order.
SENSITIVITY_AXES = ("prior_shape", "prior_rate", "t0", "p0")

_CALIBRATE_BRACKET_LO = 1e-12
_CALIBRATE_BRACKET_TOL = 1e-12
_CALIBRATE_MAX_DOUBLINGS = 200


class NotFragileApplicableError(Exception):
    """The baseline probability does not exceed p0, so no index is defined."""

    def __init__(self, initial_prob: float, p0: float):
        super().__init__(
            f"initial probability {initial_prob:.6f} does not exceed p0 {p0:.6f}; "
            "fragility index undefined"
        )
        self.initial_prob = initial_prob
        self.p0 = p0


@dataclass(frozen=True)
class FragilityResult:
    """Outcome of a fragility search.

    fi is None when every censored observation was reclassified without the
    probability dropping below p0 ("not attained", reported as FI > m). The
    trajectory holds the probability after k reclassifications for
    k = 0 .. stopping point and is strictly decreasing.
    """

    fi: int | None
    trajectory: tuple[tuple[int, float], ...]
    initial_prob: float
    censored_count: int
    fq: Fraction | None
    config: AnalysisConfig

    @property
    def attained(self) -> bool:
        return self.fi is not None

    @property
    def fi_text(self) -> str:
        return str(self.fi) if self.attained else f"> {self.censored_count}"


@dataclass(frozen=True)
class GridCell:
    """One sensitivity-scan evaluation: parameters plus result or failure."""

    params: dict[str, float]
    result: FragilityResult | None = None
    not_applicable: bool = False
    initial_prob: float | None = None
    error: str | None = None


@dataclass(frozen=True)
class SensitivityGrid:
    axes: dict[str, tuple[float, ...]]
    cells: tuple[GridCell, ...]


def fragility_index(data: SurvivalDataset, config: AnalysisConfig) -> FragilityResult:
    """Search for the smallest reclassification count crossing below p0.

    Censored observations are flipped to events one at a time, shortest
    censoring time first (stable in input order on ties), recomputing the
    posterior exceedance probability after each flip. Stops at the first
    probability strictly below p0; a probability exactly equal to p0 does
    not stop the search.

    Raises:
        NotFragileApplicableError: if the k = 0 probability is <= p0.
    """
    trajectory, censored_count = _flip_trajectory(data, config, stop_below_p0=True)
    initial_prob = trajectory[0][1]
    if not initial_prob > config.p0:
        raise NotFragileApplicableError(initial_prob, config.p0)
    fi: int | None = None
    last_k, last_prob = trajectory[-1]
    if last_k > 0 and last_prob < config.p0:
        fi = last_k
    fq = Fraction(fi, data.n) if fi is not None else None
    return FragilityResult(
        fi=fi,
        trajectory=tuple(trajectory),
        initial_prob=initial_prob,
        censored_count=censored_count,
        fq=fq,
        config=config,
    )


def fragility_quotient(fi: int, n: int) -> Fraction:
    """Fragility index over sample size, as an exact rational in (0, 1]."""
    if not (isinstance(fi, int) and isinstance(n, int)):
        raise ValueError(f"fi and n must be integers, got {fi!r}, {n!r}")
    if fi < 1 or n < 1 or fi > n:
        raise ValueError(f"require 1 <= fi <= n, got fi={fi}, n={n}")
    return Fraction(fi, n)


def fi_trajectory(
    data: SurvivalDataset, config: AnalysisConfig, k_max: int
) -> list[tuple[int, float]]:
    """Probability after flipping the k shortest-censored observations, k = 0..k_max."""
    if not (isinstance(k_max, int) and k_max >= 0):
        raise ValueError(f"k_max must be a nonnegative integer, got {k_max!r}")
    if k_max > data.num_censored:
        raise ValueError(
            f"k_max={k_max} exceeds the number of censored observations ({data.num_censored})"
        )
    trajectory, _ = _flip_trajectory(data, config, stop_below_p0=False, k_max=k_max)
    return trajectory


def calibrate(
    shape: float, target_prob: float, t0: float, cfg: SpecFunConfig = DEFAULT_CONFIG
) -> float:
    """Posterior rate at which P(median > t0) equals target_prob, given the shape.

    Inverts b -> P(shape, b ln 2 / t0), which is strictly increasing in b,
    by growing the bracket [1e-12, B] with B doubling from 1 until the sign
    flips, then bisecting. The returned rate reproduces target_prob to
    within 1e-9.

    Raises:
        BracketError: if no sign change is found within the growth budget.
    """
    if not 0.0 < target_prob < 1.0:
        raise ValueError(f"target_prob must lie in (0, 1), got {target_prob!r}")
    GammaParams(shape, 1.0)  # validates the shape
    if not t0 > 0:
        raise ValueError(f"t0 must be > 0, got {t0!r}")

    def objective(rate: float) -> float:
        return reg_lower_inc_gamma(shape, rate * LN2 / t0, cfg) - target_prob

    hi = 1.0
    for _ in range(_CALIBRATE_MAX_DOUBLINGS):
        if objective(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise BracketError(
            f"could not bracket a rate reaching probability {target_prob} "
            f"within {_CALIBRATE_MAX_DOUBLINGS} doublings"
        )
    return bisect_root(objective, _CALIBRATE_BRACKET_LO, hi, _CALIBRATE_BRACKET_TOL)


def sensitivity_scan(
    data: SurvivalDataset,
    base: AnalysisConfig,
    axes: Mapping[str, Iterable[float]],
) -> SensitivityGrid:
    """Fragility search over a Cartesian grid of analysis parameters.

    Axis names: prior_shape, prior_rate, t0, p0. Per-cell failures
    (inapplicability, numerical errors) are recorded in the cell instead of
    aborting the scan; cell order is deterministic and independent of how
    cells are evaluated.
    """
    if not axes:
        raise ValueError("sensitivity_scan requires at least one axis")
    for name in axes:
        if name not in SENSITIVITY_AXES:
            raise ValueError(f"unknown axis {name!r}; expected one of {SENSITIVITY_AXES}")
    ordered = {name: tuple(float(v) for v in axes[name]) for name in SENSITIVITY_AXES if name in axes}
    for name, values in ordered.items():
        if not values:
            raise ValueError(f"axis {name!r} has no values")

    cells = []
    for combo in itertools.product(*ordered.values()):
        params = dict(zip(ordered.keys(), combo))
        cells.append(_evaluate_cell(data, base, params))
    return SensitivityGrid(axes=ordered, cells=tuple(cells))


def _evaluate_cell(
    data: SurvivalDataset, base: AnalysisConfig, params: dict[str, float]
) -> GridCell:
    try:
        prior = GammaParams(
            params.get("prior_shape", base.prior.shape),
            params.get("prior_rate", base.prior.rate),
        )
        config = replace(
            base,
            t0=params.get("t0", base.t0),
            p0=params.get("p0", base.p0),
            prior=prior,
        )
        result = fragility_index(data, config)
    except NotFragileApplicableError as exc:
        return GridCell(params=params, not_applicable=True, initial_prob=exc.initial_prob)
    except (ConvergenceError, BracketError, ValueError) as exc:
        return GridCell(params=params, error=str(exc))
    return GridCell(params=params, result=result, initial_prob=result.initial_prob)


def _flip_trajectory(
    data: SurvivalDataset,
    config: AnalysisConfig,
    stop_below_p0: bool,
    k_max: int | None = None,
) -> tuple[list[tuple[int, float]], int]:
    """Shared flip loop: returns (trajectory, number of censored observations)."""
    censored_order = sorted(
        (i for i, o in enumerate(data.observations) if o.event == 0),
        key=lambda i: data.observations[i].time,
    )
    if k_max is not None:
        censored_order = censored_order[:k_max]

    observations = list(data.observations)
    prob = _exceedance_prob(data, config)
    trajectory = [(0, prob)]
    if stop_below_p0 and not prob > config.p0:
        return trajectory, data.num_censored

    for k, idx in enumerate(censored_order, start=1):
        observations[idx] = Observation(observations[idx].time, 1)
        flipped = SurvivalDataset(tuple(observations), data.time_unit)
        prob = _exceedance_prob(flipped, config)
        trajectory.append((k, prob))
        if stop_below_p0 and prob < config.p0:
            break
    return trajectory, data.num_censored


def _exceedance_prob(data: SurvivalDataset, config: AnalysisConfig) -> float:
    posterior = posterior_update(config.prior, data)
    return posterior_prob_median_exceeds(posterior, config.t0, config.specfun)
