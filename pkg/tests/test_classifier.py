"""Linear classifiers: prediction, worst-case perturbation, empirical risk and threshold fitting."""

import math

import numpy as np
import pytest

from analytic import PerturbationBudget, natural_threshold, std_normal_cdf
from classifier import (
    LinearClassifier,
    empirical_classwise_risk,
    error_counts,
    fit_threshold_numeric,
    from_threshold,
    golden_section,
    margin,
    predict,
    predict_batch,
    worst_case_batch,
    worst_case_perturbation,
)
from gaussian import (
    Dataset,
    DimensionMismatchError,
    MissingClassError,
    MixupSpec,
    ModelParams,
    ParameterError,
    sample_labeled,
)


def make_params(**overrides) -> ModelParams:
    base = dict(mu_plus=1.0, mu_minus=1.0, sigma_plus=1.0, sigma_minus=1.0, alpha=0.5, d=4)
    base.update(overrides)
    return ModelParams(**base)


class TestConstruction:

    def test_from_zero_threshold(self):
        clf = from_threshold(0.0, 3)
        np.testing.assert_array_equal(clf.w, [1.0, 1.0, 1.0])
        assert clf.b == 0.0

    def test_from_threshold(self):
        clf = from_threshold(0.2027, 5)
        np.testing.assert_array_equal(clf.w, np.ones(5))
        assert clf.b == 0.2027
        assert clf.t == pytest.approx(0.2027)

    @pytest.mark.parametrize("t,d", [(float("inf"), 2), (0.0, 0)])
    def test_rejects_invalid(self, t, d):
        with pytest.raises(ParameterError):
            from_threshold(t, d)

    def test_threshold_of_general_weights(self):
        clf = LinearClassifier(w=[2.0, 1.0], b=0.3)
        assert clf.t is None
        assert clf.threshold == pytest.approx(0.2)


class TestPredict:

    @pytest.mark.parametrize("b,x,expected", [
        (0.0, (1.0, 1.0), 1),
        (0.0, (-1.0, -1.0), -1),
        (2.0, (-1.0, -1.0), 1),
    ])
    def test_examples(self, b, x, expected):
        assert predict(from_threshold(b, 2), x) == expected

    def test_matches_sum_rule(self):
        rng = np.random.default_rng(0)
        X = rng.normal(size=(1000, 3))
        t = 0.4
        expected = np.where(X.sum(axis=1) + t >= 0, 1, -1)
        np.testing.assert_array_equal(predict_batch(from_threshold(t, 3), X), expected)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            predict(from_threshold(0.0, 2), (1.0, 2.0, 3.0))


class TestWorstCase:

    def test_margin_drop(self):
        clf = from_threshold(0.0, 2)
        x_adv = worst_case_perturbation(clf, (0.5, 0.5), 1, PerturbationBudget(0.2))
        np.testing.assert_allclose(x_adv, [0.3, 0.3])
        drop = margin(clf, [0.5, 0.5], [1])[0] - margin(clf, x_adv, [1])[0]
        assert drop == pytest.approx(0.4)

    def test_zero_budget(self):
        x = np.array([0.1, -2.0])
        x_adv = worst_case_perturbation(from_threshold(0.0, 2), x, -1, PerturbationBudget(0.0))
        np.testing.assert_array_equal(x_adv, x)
        assert x_adv is not x

    def test_coordinatewise_sign_rule(self):
        clf = LinearClassifier(w=[1.0, -2.0], b=0.0)
        x_adv = worst_case_perturbation(clf, (0.0, 0.0), -1, PerturbationBudget(0.1))
        np.testing.assert_allclose(x_adv, [0.1, -0.1])

    def test_no_random_perturbation_does_better(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            d = int(rng.integers(1, 6))
            clf = LinearClassifier(w=rng.normal(size=d), b=float(rng.normal()))
            x = rng.normal(size=d)
            y = int(rng.choice([-1, 1]))
            eps = float(rng.uniform(0.0, 0.5))
            worst = margin(clf, worst_case_perturbation(clf, x, y, PerturbationBudget(eps)), [y])[0]
            deltas = rng.uniform(-eps, eps, size=(2000, d))
            signs = rng.choice([-eps, eps], size=(200, d))
            candidates = np.concatenate([x + deltas, x + signs])
            margins = margin(clf, candidates, np.full(len(candidates), y))
            assert np.all(margins >= worst - 1e-12)

    def test_batch_label_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            worst_case_batch(from_threshold(0.0, 2), np.zeros((3, 2)), [1, -1], 0.1)


class TestEmpiricalRisk:

    def test_two_points(self):
        params = make_params(d=2)
        data = Dataset(X=[[1.0, 1.0], [-1.0, -1.0]], y=[1, -1], params=params, seed=0)
        pair = empirical_classwise_risk(from_threshold(0.0, 2), data)
        assert (pair.r_plus, pair.r_minus, pair.delta) == (0.0, 0.0, 0.0)

    def test_large_margin_survives_attack(self):
        params = make_params(d=2)
        data = Dataset(X=[[3.0, 3.0], [2.0, 4.0], [-3.0, -3.0], [-5.0, -1.0]], y=[1, 1, -1, -1],
                       params=params, seed=0)
        pair = empirical_classwise_risk(from_threshold(0.0, 2), data, PerturbationBudget(1.0))
        assert (pair.r_plus, pair.r_minus) == (0.0, 0.0)

    def test_matches_analytic_risk(self):
        data = sample_labeled(make_params(), 10 ** 6, seed=3)
        pair = empirical_classwise_risk(from_threshold(0.0, 4), data)
        expected = std_normal_cdf(-2.0)
        counts = data.class_counts()
        for value, n in ((pair.r_plus, counts[1]), (pair.r_minus, counts[-1])):
            assert abs(value - expected) <= 4 * math.sqrt(expected * (1 - expected) / n)

    def test_attack_equals_shifted_means(self):
        params = make_params(d=3, alpha=0.5, mu_plus=0.9, mu_minus=0.6)
        eps = 0.2
        clf = from_threshold(0.15, 3)
        attacked = empirical_classwise_risk(clf, sample_labeled(params, 400_000, seed=10), PerturbationBudget(eps))
        shifted = params.with_(mu_plus=params.mu_plus - eps, mu_minus=params.mu_minus - eps)
        natural = empirical_classwise_risk(clf, sample_labeled(shifted, 400_000, seed=11))
        for a, b in ((attacked.r_plus, natural.r_plus), (attacked.r_minus, natural.r_minus)):
            stderr = math.sqrt(2 * b * (1 - b) / 200_000)
            assert abs(a - b) <= 4 * stderr

    def test_counts_do_not_depend_on_workers(self):
        data = sample_labeled(make_params(d=2), 50_000, seed=2)
        clf = from_threshold(0.3, 2)
        one = error_counts(clf, data.X, data.y, PerturbationBudget(0.1), workers=1)
        many = error_counts(clf, data.X, data.y, PerturbationBudget(0.1), workers=4)
        assert one == many

    def test_missing_class(self):
        params = make_params(d=2)
        data = Dataset(X=[[1.0, 1.0]], y=[1], params=params, seed=0)
        with pytest.raises(MissingClassError):
            empirical_classwise_risk(from_threshold(0.0, 2), data)


class TestNumericFit:

    def test_golden_section_quadratic(self):
        assert golden_section(lambda t: (t - 1.25) ** 2, -10.0, 10.0, 1e-10) == pytest.approx(1.25, abs=1e-8)

    def test_symmetric(self):
        assert abs(fit_threshold_numeric(make_params(d=5), MixupSpec(0.0))) < 1e-8

    def test_equal_variance_prior(self):
        t = fit_threshold_numeric(make_params(d=5, alpha=0.6), MixupSpec(0.0))
        assert t == pytest.approx(0.202733, abs=1e-6)
        assert t == pytest.approx(natural_threshold(make_params(d=5, alpha=0.6), MixupSpec(0.0)).t_star, rel=1e-6)

    def test_unequal_variance(self):
        params = make_params(d=4, sigma_minus=1.5)
        spec = MixupSpec(0.5)
        assert fit_threshold_numeric(params, spec) == pytest.approx(natural_threshold(params, spec).eta_star, rel=1e-6)

    @pytest.mark.parametrize("alpha", [0.05, 0.3, 0.7, 0.95])
    def test_adversarial_agreement(self, alpha):
        from analytic import adversarial_threshold

        params = make_params(d=3, alpha=alpha, mu_plus=1.2, mu_minus=0.8)
        budget = PerturbationBudget(0.25)
        spec = MixupSpec(0.3)
        closed = adversarial_threshold(params, spec, budget).s_star
        assert fit_threshold_numeric(params, spec, budget) == pytest.approx(closed, rel=1e-6, abs=1e-9)
