"""Sampling, mixup and dataset helpers of the gaussian package."""

import math

import numpy as np
import pytest

from gaussian import (
    Dataset,
    DomainError,
    InsufficientPairsError,
    MixupSpec,
    ModelParams,
    ParameterError,
    UnsupportedRegimeError,
    g_lambda,
    mixup_distribution,
    plan_pairs,
    read_dataset_csv,
    sample_class,
    sample_labeled,
    sample_mixed_class,
    sample_mixup_pairs,
    write_dataset_csv,
)


def make_params(**overrides) -> ModelParams:
    base = dict(mu_plus=1.0, mu_minus=1.0, sigma_plus=1.0, sigma_minus=1.0, alpha=0.5, d=2)
    base.update(overrides)
    return ModelParams(**base)


class TestModelParams:

    @pytest.mark.parametrize("field,value", [
        ("sigma_plus", 0.0),
        ("sigma_minus", -1.0),
        ("alpha", 0.0),
        ("alpha", 1.0),
        ("d", 0),
        ("mu_plus", float("nan")),
    ])
    def test_rejects_invalid(self, field, value):
        with pytest.raises(ParameterError):
            make_params(**{field: value})

    def test_rejects_unseparated_classes(self):
        with pytest.raises(ParameterError):
            make_params(mu_plus=0.5, mu_minus=-0.5)

    def test_with_revalidates(self):
        params = make_params()
        assert params.with_(d=7).d == 7
        with pytest.raises(ParameterError):
            params.with_(alpha=2.0)

    def test_class_means(self):
        params = make_params(mu_plus=2.0, mu_minus=0.5, d=3)
        np.testing.assert_array_equal(params.mean(1), [2.0, 2.0, 2.0])
        np.testing.assert_array_equal(params.mean(-1), [-0.5, -0.5, -0.5])
        assert params.class_distance == 2.5


class TestGLambda:

    @pytest.mark.parametrize("lam,expected", [(0.0, 1.0), (0.5, 0.5), (0.3, 0.58), (1.0, 1.0)])
    def test_values(self, lam, expected):
        assert g_lambda(lam) == pytest.approx(expected, abs=1e-15)

    def test_range_symmetry_and_minimum(self):
        lams = np.linspace(0.0, 1.0, 101)
        values = np.array([g_lambda(float(l)) for l in lams])
        assert np.all(values >= 0.5) and np.all(values <= 1.0)
        np.testing.assert_allclose(values, values[::-1], atol=1e-15)
        assert lams[int(np.argmin(values))] == pytest.approx(0.5)

    @pytest.mark.parametrize("lam", [-0.1, 1.5, float("nan")])
    def test_outside_domain(self, lam):
        with pytest.raises(DomainError):
            g_lambda(lam)


class TestSampleLabeled:

    def test_class_fraction(self):
        data = sample_labeled(make_params(), 10 ** 6, seed=7)
        assert len(data) == 10 ** 6
        assert abs(np.mean(data.y == 1) - 0.5) < 0.002

    def test_degenerate_prior(self):
        data = sample_labeled(make_params(alpha=1 - 1e-9), 1000, seed=3)
        assert np.all(data.y == 1)

    def test_class_mean(self):
        params = make_params(d=5, mu_plus=2.0, sigma_plus=0.5)
        X = sample_class(params, 1, 10 ** 6, seed=11)
        np.testing.assert_allclose(X.mean(axis=0), 2.0, atol=0.002)
        # cross-check with an independent generator
        other = np.random.default_rng(12345).normal(2.0, 0.5, size=(10 ** 6, 5))
        np.testing.assert_allclose(X.mean(axis=0), other.mean(axis=0), atol=0.004)

    def test_deterministic_across_workers(self):
        params = make_params(d=3)
        one = sample_labeled(params, 10_000, seed=5, block_size=1000, workers=1)
        many = sample_labeled(params, 10_000, seed=5, block_size=1000, workers=4)
        np.testing.assert_array_equal(one.X, many.X)
        np.testing.assert_array_equal(one.y, many.y)

    def test_seed_changes_draw(self):
        params = make_params()
        a = sample_labeled(params, 100, seed=1)
        b = sample_labeled(params, 100, seed=2)
        assert not np.array_equal(a.X, b.X)

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ParameterError):
            sample_labeled(make_params(), 0, seed=0)


class TestMixupDistribution:

    def test_lambda_zero_is_identity(self):
        params = make_params(sigma_plus=1.3, sigma_minus=0.7)
        assert mixup_distribution(params, MixupSpec(0.0)) == params

    def test_half(self):
        out = mixup_distribution(make_params(), MixupSpec(0.5))
        assert out.sigma_plus == pytest.approx(math.sqrt(0.5))
        assert out.sigma_minus == pytest.approx(0.70711, abs=1e-5)

    def test_point_three(self):
        out = mixup_distribution(make_params(sigma_plus=2.0), MixupSpec(0.3))
        assert out.sigma_plus == pytest.approx(1.52315, abs=1e-5)

    def test_means_unchanged(self):
        params = make_params(mu_plus=1.7, mu_minus=0.2)
        out = mixup_distribution(params, MixupSpec(0.4))
        assert (out.mu_plus, out.mu_minus, out.alpha, out.d) == (1.7, 0.2, 0.5, 2)

    @pytest.mark.parametrize("lam", [0.0, 0.5])
    def test_uniform_lambda_has_no_closed_form(self, lam):
        with pytest.raises(UnsupportedRegimeError):
            mixup_distribution(make_params(), MixupSpec(lam, uniform=True))


class TestSampleMixupPairs:

    def test_midpoint(self):
        params = make_params()
        data = Dataset(X=[[1.0, 1.0], [3.0, 3.0]], y=[1, 1], params=params, seed=0)
        mixed = sample_mixup_pairs(data, MixupSpec(0.5), seed=0)
        np.testing.assert_array_equal(mixed.X, [[2.0, 2.0]])
        np.testing.assert_array_equal(mixed.y, [1])

    def test_lambda_one_keeps_originals(self):
        data = sample_labeled(make_params(), 500, seed=4)
        mixed = sample_mixup_pairs(data, MixupSpec(1.0), seed=9)
        originals = {tuple(row) for row in data.X}
        assert all(tuple(row) in originals for row in mixed.X)

    def test_labels_follow_pairs(self):
        data = sample_labeled(make_params(alpha=0.3), 2001, seed=8)
        mixed = sample_mixup_pairs(data, MixupSpec(0.5), seed=1)
        counts = data.class_counts()
        assert mixed.class_counts() == {1: counts[1] // 2, -1: counts[-1] // 2}
        plan = plan_pairs(data.y, MixupSpec(0.5), seed=1)
        np.testing.assert_array_equal(data.y[plan.first], plan.labels)
        np.testing.assert_array_equal(data.y[plan.second], plan.labels)
        assert np.all(plan.first != plan.second)

    def test_variance_contracts(self):
        params = make_params(alpha=0.5)
        X = sample_class(params, 1, 2 * 10 ** 6, seed=21)
        data = Dataset(X=X, y=np.ones(len(X), dtype=np.int64), params=params, seed=21)
        mixed = sample_mixup_pairs(data, MixupSpec(0.5), seed=2)
        assert len(mixed) == 10 ** 6
        np.testing.assert_allclose(mixed.X.var(axis=0), 0.5, atol=0.005)
        assert mixed.params.sigma_plus == pytest.approx(math.sqrt(0.5))

    def test_single_sample_class(self):
        params = make_params()
        data = Dataset(X=np.zeros((4, 2)), y=[1, -1, -1, -1], params=params, seed=0)
        with pytest.raises(InsufficientPairsError) as info:
            sample_mixup_pairs(data, MixupSpec(0.5), seed=0)
        assert info.value.label == 1

    def test_non_strict_reports_short_class(self):
        plan = plan_pairs(np.array([1, -1, -1]), MixupSpec(0.5), seed=0, strict=False)
        assert plan.short_classes == [1]
        np.testing.assert_array_equal(plan.labels, [-1])

    def test_uniform_lambda(self):
        data = sample_labeled(make_params(), 400, seed=3)
        plan = plan_pairs(data.y, MixupSpec(0.0, uniform=True), seed=5)
        assert np.all((plan.lams >= 0) & (plan.lams < 1))
        assert np.unique(plan.lams).size == plan.lams.size

    def test_uniform_lambda_keeps_source_params(self):
        params = make_params(sigma_plus=1.0)
        X = sample_class(params, 1, 200_000, seed=6)
        data = Dataset(X=X, y=np.ones(len(X), dtype=np.int64), params=params, seed=6)
        mixed = sample_mixup_pairs(data, MixupSpec(0.0, uniform=True), seed=1)
        assert mixed.params == params
        assert mixed.metadata["params_describe"] == "source"
        # E[lam^2 + (1 - lam)^2] = 2/3 for lam ~ U(0, 1)
        np.testing.assert_allclose(mixed.X.var(axis=0), 2.0 / 3.0, rtol=0.03)

    def test_fixed_lambda_describes_mixed_params(self):
        data = sample_labeled(make_params(), 400, seed=3)
        mixed = sample_mixup_pairs(data, MixupSpec(0.5), seed=5)
        assert mixed.metadata["params_describe"] == "mixed"
        assert mixed.params.sigma_minus == pytest.approx(math.sqrt(0.5))


class TestMixedClassSampling:

    def test_variance(self):
        params = make_params(sigma_minus=2.0)
        X = sample_mixed_class(params, MixupSpec(0.3), -1, 10 ** 6, seed=6)
        np.testing.assert_allclose(X.var(axis=0), 0.58 * 4.0, rtol=0.01)
        np.testing.assert_allclose(X.mean(axis=0), -1.0, atol=0.01)

    def test_plain_matches_class_draw(self):
        params = make_params()
        mixed = sample_mixed_class(params, MixupSpec(0.0), 1, 1000, seed=2)
        base = sample_class(params, 1, 1000, seed=2)
        np.testing.assert_array_equal(mixed, base)


class TestDataset:

    def test_split(self):
        data = sample_labeled(make_params(), 1000, seed=13)
        train, holdout = data.split(0.2)
        assert (len(train), len(holdout)) == (800, 200)
        again_train, again_holdout = data.split(0.2)
        np.testing.assert_array_equal(train.X, again_train.X)
        merged = np.sort(np.concatenate([train.X[:, 0], holdout.X[:, 0]]))
        np.testing.assert_array_equal(merged, np.sort(data.X[:, 0]))

    @pytest.mark.parametrize("fraction", [0.0, 1.0])
    def test_split_fraction_bounds(self, fraction):
        data = sample_labeled(make_params(), 10, seed=0)
        with pytest.raises(ParameterError):
            data.split(fraction)

    def test_rejects_bad_labels(self):
        with pytest.raises(ParameterError):
            Dataset(X=np.zeros((2, 2)), y=[1, 0], params=make_params(), seed=0)

    def test_samples_iterate_in_order(self):
        data = sample_labeled(make_params(), 5, seed=1)
        samples = list(data.samples)
        assert [s.y for s in samples] == list(data.y)
        assert samples[0].x == tuple(data.X[0])

    def test_csv_round_trip(self, tmp_path):
        params = make_params(d=3)
        data = sample_labeled(params, 50, seed=17)
        path = write_dataset_csv(data, tmp_path / "data.csv")
        with open(path, encoding="utf-8") as f:
            assert f.readline() == "x_0,x_1,x_2,y\n"
        loaded = read_dataset_csv(path, params, seed=17)
        np.testing.assert_array_equal(loaded.X, data.X)
        np.testing.assert_array_equal(loaded.y, data.y)
