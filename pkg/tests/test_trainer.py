"""FGSM, within-batch mixup and the training loop."""

import json

import numpy as np
import pytest

from analytic import PerturbationBudget
from classifier import LinearClassifier, worst_case_batch, worst_case_perturbation
from gaussian import (
    AttackMismatchError,
    Dataset,
    DimensionMismatchError,
    MissingClassError,
    MixupSpec,
    ModelParams,
    ParameterError,
    TrainingDivergedError,
    sample_labeled,
)
from trainer import (
    TrainConfig,
    TrainingLogger,
    class_risk_summary,
    fgsm_perturb,
    make_mixup_adversarial_batch,
    mix_batch,
    train,
)


def make_params(**overrides) -> ModelParams:
    base = dict(mu_plus=1.0, mu_minus=1.0, sigma_plus=1.0, sigma_minus=1.0, alpha=0.5, d=2)
    base.update(overrides)
    return ModelParams(**base)


class TestFgsm:

    def test_zero_epsilon(self):
        X = np.array([[0.5, -1.0], [2.0, 3.0]])
        out = fgsm_perturb(LinearClassifier(w=[1.0, 2.0], b=0.1), X, [1, -1], 0.0)
        np.testing.assert_array_equal(out, X)
        out[0, 0] = 99.0
        assert X[0, 0] == 0.5

    def test_example(self):
        out = fgsm_perturb(LinearClassifier(w=[2.0, -1.0], b=0.0), [[0.0, 0.0]], [1], 0.1)
        np.testing.assert_array_equal(out, [[-0.1, 0.1]])

    def test_equals_worst_case(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            d = int(rng.integers(1, 8))
            w = rng.normal(size=d)
            w[w == 0] = 1.0
            clf = LinearClassifier(w=w, b=float(rng.normal()))
            X = rng.normal(size=(1000, d)) * 2.0
            y = rng.choice([-1, 1], size=1000)
            eps = float(rng.uniform(0.01, 0.5))
            np.testing.assert_array_equal(fgsm_perturb(clf, X, y, eps), worst_case_batch(clf, X, y, eps))

    def test_single_sample_matches_perturbation(self):
        clf = LinearClassifier(w=[0.5, -3.0, 1.0], b=-0.2)
        x = np.array([0.3, 0.1, -0.4])
        expected = worst_case_perturbation(clf, x, -1, PerturbationBudget(0.25))
        np.testing.assert_array_equal(fgsm_perturb(clf, x, [-1], 0.25)[0], expected)

    def test_vanishing_gradient_raises(self):
        clf = LinearClassifier(w=[1.0, 1.0], b=0.0)
        with pytest.raises(AttackMismatchError) as info:
            fgsm_perturb(clf, [[0.1, 0.2], [800.0, 800.0]], [1, 1], 0.1)
        assert (info.value.rows, info.value.total) == (1, 2)

    def test_zero_weight_skips_check(self):
        clf = LinearClassifier(w=[0.0, 1.0], b=0.0)
        out = fgsm_perturb(clf, [[900.0, 900.0]], [1], 0.1)
        np.testing.assert_array_equal(out, [[900.0, 900.0]])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            fgsm_perturb(LinearClassifier(w=[1.0, 1.0], b=0.0), np.zeros((2, 3)), [1, -1], 0.1)

    def test_negative_epsilon(self):
        with pytest.raises(ParameterError):
            fgsm_perturb(LinearClassifier(w=[1.0], b=0.0), [[0.0]], [1], -0.1)


class TestMixupBatch:

    def test_midpoint(self):
        clf = LinearClassifier(w=[1.0, 1.0], b=0.0)
        batch = make_mixup_adversarial_batch(clf, [[1.0, 1.0], [3.0, 3.0]], [1, 1], 0.0, 0.5, seed=0)
        np.testing.assert_array_equal(batch.X, [[2.0, 2.0]])
        np.testing.assert_array_equal(batch.y, [1])
        assert not batch.underfilled

    def test_lambda_one_is_fgsm_on_subsample(self):
        rng = np.random.default_rng(1)
        clf = LinearClassifier(w=[0.7, -1.2, 0.4], b=0.05)
        X = rng.normal(size=(64, 3))
        y = rng.choice([-1, 1], size=64)
        batch = make_mixup_adversarial_batch(clf, X, y, 0.2, 1.0, seed=3)
        attacked = {(tuple(row), label) for row, label in zip(fgsm_perturb(clf, X, y, 0.2), y)}
        assert all((tuple(row), label) in attacked for row, label in zip(batch.X, batch.y))

    def test_perturbs_after_mixing(self):
        clf = LinearClassifier(w=[1.0, -1.0], b=0.0)
        batch = make_mixup_adversarial_batch(clf, [[1.0, 1.0], [3.0, 3.0]], [1, 1], 0.1, 0.5, seed=0)
        np.testing.assert_allclose(batch.X, [[1.9, 2.1]])

    def test_short_class_passes_through(self):
        X = np.array([[5.0, 5.0], [-1.0, -1.0], [-3.0, -3.0], [-2.0, 0.0]])
        y = np.array([1, -1, -1, -1])
        batch = mix_batch(X, y, MixupSpec(0.5), seed=0)
        assert batch.underfilled and batch.short_classes == [1]
        np.testing.assert_array_equal(batch.y, [-1, 1])
        np.testing.assert_array_equal(batch.X[1], [5.0, 5.0])

    def test_mixed_variance(self):
        params = make_params(sigma_plus=1.5)
        data = sample_labeled(params, 200_000, seed=4)
        batch = mix_batch(data.X, data.y, MixupSpec(0.3), seed=2)
        plus = batch.X[batch.y == 1]
        np.testing.assert_allclose(plus.var(axis=0), 0.58 * 1.5 ** 2, rtol=0.03)


def fast_config(**overrides) -> TrainConfig:
    base = dict(epochs=20, batch_size=128, learning_rate=1e-2, lr_decay_every=15, seed=0)
    base.update(overrides)
    return TrainConfig(**base)


class TestTrainConfig:

    @pytest.mark.parametrize("field,value", [
        ("regime", "pgd"),
        ("optimizer", "rmsprop"),
        ("epochs", 0),
        ("learning_rate", 0.0),
        ("epsilon", -0.1),
        ("lam", 1.5),
        ("momentum", 1.0),
    ])
    def test_rejects_invalid(self, field, value):
        with pytest.raises(ParameterError):
            TrainConfig(**{field: value})

    def test_defaults(self):
        config = TrainConfig()
        assert (config.batch_size, config.learning_rate, config.lr_decay_factor, config.lr_decay_every) == (
            256, 1e-3, 0.1, 50)
        assert config.lam == 0.5 and config.optimizer == "adam"


class TestTrain:

    def test_separable_natural(self):
        params = make_params(mu_plus=3.0, mu_minus=3.0, sigma_plus=0.1, sigma_minus=0.1)
        data = sample_labeled(params, 4000, seed=1)
        report = train(data, TrainConfig(seed=1))
        assert report.natural.r_plus < 0.001 and report.natural.r_minus < 0.001
        assert abs(report.classifier.threshold) < 0.2
        assert (report.n_train, report.n_holdout) == (3200, 800)
        assert len(report.epoch_losses) == 80

    def test_zero_epsilon_adversarial_equals_natural(self):
        data = sample_labeled(make_params(alpha=0.6), 3000, seed=2)
        natural = train(data, fast_config(regime="natural"))
        adversarial = train(data, fast_config(regime="adversarial", epsilon=0.0))
        np.testing.assert_array_equal(natural.classifier.w, adversarial.classifier.w)
        assert natural.classifier.b == adversarial.classifier.b
        assert natural.epoch_losses == adversarial.epoch_losses
        assert natural.summary() == adversarial.summary()

    def test_deterministic(self):
        data = sample_labeled(make_params(), 2000, seed=3)
        config = fast_config(regime="mixup_adversarial", epsilon=0.2)
        first, second = train(data, config), train(data, config)
        assert first.epoch_losses == second.epoch_losses
        np.testing.assert_array_equal(first.classifier.w, second.classifier.w)

    @pytest.mark.parametrize("regime", ["adversarial", "mixup_adversarial", "mixup_natural"])
    def test_regimes_learn(self, regime):
        data = sample_labeled(make_params(), 3000, seed=5)
        report = train(data, fast_config(regime=regime, epsilon=0.2))
        assert report.natural.r_plus < 0.2 and report.natural.r_minus < 0.2
        assert report.adversarial.r_plus >= report.natural.r_plus
        assert report.epoch_losses[-1] < report.epoch_losses[0]

    def test_sgd_momentum(self):
        data = sample_labeled(make_params(), 2000, seed=6)
        report = train(data, fast_config(optimizer="sgd", momentum=0.9, learning_rate=0.05))
        assert report.natural.r_plus < 0.2 and report.natural.r_minus < 0.2

    def test_divergence(self):
        data = sample_labeled(make_params(), 500, seed=7)
        X = data.X.copy()
        X[:, 0] = np.nan
        broken = Dataset(X=X, y=data.y, params=data.params, seed=data.seed)
        with pytest.raises(TrainingDivergedError) as info:
            train(broken, fast_config())
        assert info.value.epoch == 0

    def test_missing_class(self):
        params = make_params()
        data = Dataset(X=np.ones((10, 2)), y=np.ones(10, dtype=np.int64), params=params, seed=0)
        with pytest.raises(MissingClassError):
            train(data, fast_config())

    def test_epoch_log(self, tmp_path):
        data = sample_labeled(make_params(), 1000, seed=8)
        logger = TrainingLogger(str(tmp_path), run_id="run")
        train(data, fast_config(epochs=5), logger)
        entries = logger.read()
        assert [e["epoch"] for e in entries] == [0, 1, 2, 3, 4]
        assert entries[0]["regime"] == "natural"
        assert json.loads((tmp_path / "run.jsonl").read_text().splitlines()[0])["run_id"] == "run"

    def test_report_serializes(self):
        data = sample_labeled(make_params(alpha=0.7), 1000, seed=9)
        report = train(data, fast_config(epochs=3, regime="adversarial", epsilon=0.1))
        payload = json.loads(json.dumps(report.to_dict()))
        assert payload["config"]["regime"] == "adversarial"
        summary = class_risk_summary(report.adversarial)
        assert summary["max"] == max(report.adversarial.r_plus, report.adversarial.r_minus)
        assert summary["delta"] == pytest.approx(report.delta_adv)


@pytest.mark.slow
class TestTrainingAgainstTheory:

    def test_mixup_adversarial_narrows_gap(self):
        params = ModelParams(1.0, 1.0, 1.0, 1.0, 0.7, 10)
        adv, mixed, worse = [], [], 0
        for seed in range(10):
            data = sample_labeled(params, 20_000, seed=seed)
            at = train(data, TrainConfig(seed=seed, regime="adversarial", epsilon=0.3))
            mat = train(data, TrainConfig(seed=seed, regime="mixup_adversarial", epsilon=0.3))
            adv.append(at.delta_adv)
            mixed.append(mat.delta_adv)
            if max(mat.adversarial.r_plus, mat.adversarial.r_minus) > max(at.adversarial.r_plus,
                                                                          at.adversarial.r_minus):
                worse += 1
        assert np.mean(mixed) < np.mean(adv)
        assert worse <= 2

    def test_threshold_error_shrinks_with_n(self):
        params = make_params(d=2)
        medians = []
        for n in (1_000, 10_000, 100_000):
            errors = []
            for seed in range(5):
                data = sample_labeled(params, n, seed=seed)
                config = TrainConfig(epochs=500, batch_size=n, learning_rate=0.5, optimizer="sgd",
                                     momentum=0.9, lr_decay_every=10_000, seed=seed)
                errors.append(abs(train(data, config).classifier.threshold))
            medians.append(float(np.median(errors)))
        assert medians[0] > medians[1] > medians[2]

    def test_weights_are_nearly_uniform(self):
        params = ModelParams(0.5, 0.5, 1.0, 1.0, 0.5, 10)
        data = sample_labeled(params, 100_000, seed=0)
        config = TrainConfig(epochs=500, batch_size=100_000, learning_rate=0.5, optimizer="sgd",
                             momentum=0.9, lr_decay_every=10_000)
        w = train(data, config).classifier.w
        assert np.std(w) / np.mean(w) < 0.1
