import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from fragsurv.specfun import SpecFunConfig
from fragsurv.survival import (
    AnalysisConfig,
    GammaParams,
    Observation,
    SurvivalDataset,
    exp_hazard,
    exp_survival,
    log_likelihood,
    median_from_rate,
    posterior_prob_median_exceeds,
    posterior_update,
)

from oracles import erf_series, gamma_log_density


def ds(*pairs):
    return SurvivalDataset(tuple(Observation(t, e) for t, e in pairs))


class TestObservation:
    def test_stores_values(self):
        o = Observation(2.5, 1)
        assert o.time == 2.5 and o.event == 1

    @pytest.mark.parametrize("time", [0.0, -1.0, math.inf, math.nan])
    def test_rejects_bad_times(self, time):
        with pytest.raises(ValueError):
            Observation(time, 1)

    @pytest.mark.parametrize("event", [2, -1, 0.5, None])
    def test_rejects_bad_indicator(self, event):
        with pytest.raises(ValueError):
            Observation(1.0, event)


class TestSurvivalDataset:
    def test_derived_counts(self):
        d = ds((2, 1), (3, 0), (1, 1))
        assert d.n == 3
        assert d.num_events == 2
        assert d.num_censored == 1
        assert d.total_time == 6.0

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            SurvivalDataset(())

    def test_preserves_input_order(self):
        d = ds((5, 0), (1, 1), (3, 0))
        assert [o.time for o in d.observations] == [5.0, 1.0, 3.0]

    def test_time_unit_metadata(self):
        d = SurvivalDataset((Observation(1, 1),), time_unit="weeks")
        assert d.time_unit == "weeks"


class TestGammaParams:
    @pytest.mark.parametrize("shape,rate", [(0, 1), (1, 0), (-1, 1), (1, -1), (math.inf, 1), (1, math.nan)])
    def test_rejects_nonpositive(self, shape, rate):
        with pytest.raises(ValueError):
            GammaParams(shape, rate)


class TestAnalysisConfig:
    def test_defaults(self):
        cfg = AnalysisConfig(t0=7.0)
        assert cfg.p0 == 0.7
        assert cfg.prior == GammaParams(0.5, 0.5)
        assert cfg.specfun == SpecFunConfig()

    @pytest.mark.parametrize("t0,p0", [(0.0, 0.7), (-1.0, 0.7), (7.0, 0.0), (7.0, 1.0), (7.0, 1.5)])
    def test_rejects_bad_thresholds(self, t0, p0):
        with pytest.raises(ValueError):
            AnalysisConfig(t0=t0, p0=p0)


class TestLogLikelihood:
    def test_single_censored(self):
        assert log_likelihood(ds((1, 0)), 1.0) == pytest.approx(-1.0, abs=1e-15)

    def test_single_event(self):
        assert log_likelihood(ds((2, 1)), 0.5) == pytest.approx(math.log(0.5) - 1.0, abs=1e-12)

    def test_mixed_matches_term_by_term_product(self):
        data = ds((2, 1), (3, 0), (1, 1))
        rate = 0.4
        expected = 0.0
        for o in data.observations:
            if o.event:
                expected += math.log(rate * math.exp(-rate * o.time))
            else:
                expected += math.log(math.exp(-rate * o.time))
        assert expected == pytest.approx(2 * math.log(0.4) - 2.4, abs=1e-12)
        assert log_likelihood(data, rate) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("rate", [0.0, -0.5, math.inf, math.nan])
    def test_rejects_bad_rate(self, rate):
        with pytest.raises(ValueError):
            log_likelihood(ds((1, 1)), rate)


class TestPosteriorUpdate:
    def test_censored_only_adds_time(self):
        assert posterior_update(GammaParams(1, 1), ds((5, 0))) == GammaParams(1, 6)

    def test_direct_arithmetic(self):
        assert posterior_update(GammaParams(0.5, 0.5), ds((2, 1), (3, 0))) == GammaParams(1.5, 5.5)

    def test_lung_case_event_count_gives_posterior_shape(self):
        rng = random.Random(1)
        pairs = [(rng.uniform(0.5, 30.0), 1) for _ in range(22)] + [
            (rng.uniform(0.5, 30.0), 0) for _ in range(8)
        ]
        posterior = posterior_update(GammaParams(0.5, 0.5), ds(*pairs))
        assert posterior.shape == 22.5

    @given(
        pairs=st.lists(
            st.tuples(st.floats(min_value=0.01, max_value=100.0), st.integers(0, 1)),
            min_size=1,
            max_size=30,
        )
    )
    @settings(max_examples=150, deadline=None)
    def test_order_invariance_and_additivity(self, pairs):
        prior = GammaParams(0.5, 0.5)
        data = ds(*pairs)
        shuffled = list(pairs)
        random.Random(0).shuffle(shuffled)
        permuted = ds(*shuffled)
        a = posterior_update(prior, data)
        b = posterior_update(prior, permuted)
        assert a.shape == b.shape
        # positive-term sums under permutation: error bounded by n ulps
        assert a.rate == pytest.approx(b.rate, rel=5e-14)
        # sequential update on a split equals one update on the union
        if len(pairs) >= 2:
            cut = len(pairs) // 2
            first = posterior_update(prior, ds(*pairs[:cut]))
            second = posterior_update(first, ds(*pairs[cut:]))
            assert second.shape == a.shape
            assert second.rate == pytest.approx(a.rate, rel=1e-12)

    def test_conjugacy_against_numerical_integration(self):
        # likelihood x prior, normalized numerically, equals the closed-form
        # Gamma(shape', rate') density pointwise
        rng = random.Random(314)
        for _ in range(10):
            n = rng.randint(1, 5)
            data = ds(*[(rng.uniform(0.5, 10.0), rng.randint(0, 1)) for _ in range(n)])
            prior = GammaParams(rng.uniform(0.4, 3.0), rng.uniform(0.4, 3.0))
            posterior = posterior_update(prior, data)

            def unnormalized(lam):
                return math.exp(
                    log_likelihood(data, lam) + gamma_log_density(lam, prior.shape, prior.rate)
                )

            # finite range holding all posterior mass: mean + 50 sd of Gamma(shape', rate')
            upper = (posterior.shape + 50.0 * math.sqrt(posterior.shape)) / posterior.rate
            norm, err = quad(unnormalized, 0.0, upper, epsabs=1e-15, epsrel=1e-12, limit=400)
            assert err <= 1e-7 * norm  # normalized-density error stays far below 1e-6
            for j in range(1, 21):
                lam = j * 0.35 * posterior.shape / posterior.rate / 10.0 + 1e-4
                numeric = unnormalized(lam) / norm
                exact = math.exp(gamma_log_density(lam, posterior.shape, posterior.rate))
                assert abs(numeric - exact) <= 1e-6


class TestSurvivalTransforms:
    def test_survival_at_zero(self):
        assert exp_survival(1.0, 0.0) == 1.0

    def test_one_half_life(self):
        assert exp_survival(math.log(2.0), 1.0) == pytest.approx(0.5, abs=1e-15)

    def test_analytic_point(self):
        assert exp_survival(0.2, 10.0) == pytest.approx(math.exp(-2.0), abs=1e-15)

    def test_hazard_is_constant_rate(self):
        assert exp_hazard(0.37) == 0.37
        assert exp_hazard(0.37, 12.0) == 0.37

    def test_median_examples(self):
        assert median_from_rate(math.log(2.0)) == pytest.approx(1.0, abs=1e-15)
        assert median_from_rate(math.log(2.0) / 7.0) == pytest.approx(7.0, abs=1e-12)
        assert median_from_rate(0.1) == pytest.approx(6.931471805599453, abs=1e-12)

    def test_median_strictly_decreasing_in_rate(self):
        rates = [0.05 * (i + 1) for i in range(100)]
        medians = [median_from_rate(r) for r in rates]
        assert all(m1 > m2 for m1, m2 in zip(medians, medians[1:]))

    @pytest.mark.parametrize("rate", [0.0, -1.0, math.nan])
    def test_domain_errors(self, rate):
        with pytest.raises(ValueError):
            median_from_rate(rate)
        with pytest.raises(ValueError):
            exp_survival(rate, 1.0)
        with pytest.raises(ValueError):
            exp_hazard(rate)


class TestPosteriorProbMedianExceeds:
    def test_shape_one_reduces_to_exponential_cdf(self):
        p = posterior_prob_median_exceeds(GammaParams(1, 1), math.log(2.0))
        assert p == pytest.approx(1.0 - math.exp(-1.0), abs=1e-14)

    def test_half_shape_reduces_to_erf(self):
        p = posterior_prob_median_exceeds(GammaParams(0.5, 0.5), math.log(2.0))
        assert p == pytest.approx(erf_series(math.sqrt(0.5)), abs=1e-12)

    def test_strictly_decreasing_in_t0(self):
        posterior = GammaParams(22.5, 300.0)
        probs = [posterior_prob_median_exceeds(posterior, t0) for t0 in [3 + 0.5 * i for i in range(20)]]
        assert all(a > b for a, b in zip(probs, probs[1:]))

    def test_strictly_increasing_in_rate(self):
        probs = [
            posterior_prob_median_exceeds(GammaParams(22.5, 200.0 + 10.0 * i), 7.0)
            for i in range(20)
        ]
        assert all(a < b for a, b in zip(probs, probs[1:]))

    def test_strictly_decreasing_in_shape_for_fixed_rate(self):
        probs = [
            posterior_prob_median_exceeds(GammaParams(20.0 + i, 300.0), 7.0) for i in range(15)
        ]
        assert all(a > b for a, b in zip(probs, probs[1:]))

    def test_matches_quadrature_of_posterior_density(self):
        rng = random.Random(99)
        for _ in range(8):
            posterior = GammaParams(rng.uniform(0.5, 30.0), rng.uniform(0.5, 100.0))
            t0 = rng.uniform(0.5, 20.0)
            upper = math.log(2.0) / t0
            integral, err = quad(
                lambda lam: math.exp(gamma_log_density(lam, posterior.shape, posterior.rate)),
                0.0,
                upper,
                epsabs=1e-12,
                epsrel=1e-12,
                limit=400,
            )
            assert err < 1e-8
            assert posterior_prob_median_exceeds(posterior, t0) == pytest.approx(integral, abs=1e-8)

    @pytest.mark.parametrize("t0", [0.0, -2.0, math.inf])
    def test_rejects_bad_threshold(self, t0):
        with pytest.raises(ValueError):
            posterior_prob_median_exceeds(GammaParams(1, 1), t0)
