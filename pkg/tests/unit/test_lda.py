# ABOUTME: Unit tests for Fisher linear discriminant analysis
# ABOUTME: Rayleigh-quotient optimality, closed form, ridge fallback and invariance

from __future__ import annotations

import logging

import numpy as np
import pytest

from maneuverml.classifiers import (
    DecisionConfig,
    LdaModel,
    LdaParams,
    fisher_direction,
    lda_fit,
    predict_labels,
)
from maneuverml.classifiers.lda import rayleigh_quotient, within_class_scatter
from maneuverml.errors import (
    ConfigError,
    DegenerateDirection,
    SingleClassTrain,
    TooFewClassRows,
)
from tests.fixtures import make_dataset, random_dataset


class TestLdaParams:
    def test_invalid_ridge_scale(self) -> None:
        with pytest.raises(ConfigError):
            LdaParams(ridge_scale=0.0)

    def test_invalid_condition_limit(self) -> None:
        with pytest.raises(ConfigError):
            LdaParams(condition_limit=1.0)


class TestLdaOptimality:
    """Check the fitted direction against the separation criterion."""

    def test_direction_beats_random_directions(self) -> None:
        rng = np.random.default_rng(31)
        for _ in range(20):
            train = random_dataset(rng, n_rows=60)
            model = lda_fit(train)
            best = rayleigh_quotient(
                model.direction, model.between_scatter, model.within_scatter
            )
            candidates = rng.normal(size=(1000, 4))
            candidates /= np.linalg.norm(candidates, axis=1, keepdims=True)
            sampled = [
                rayleigh_quotient(c, model.between_scatter, model.within_scatter)
                for c in candidates
            ]
            assert best >= max(sampled) * (1 - 1e-12)

    def test_direction_matches_closed_form(self) -> None:
        rng = np.random.default_rng(32)
        for _ in range(20):
            train = random_dataset(rng, n_rows=60)
            rows, labels = train.rows, train.labels
            mean_0 = rows[labels == 0].mean(axis=0)
            mean_1 = rows[labels == 1].mean(axis=0)
            within = within_class_scatter(rows, labels)
            expected = np.linalg.solve(within, mean_1 - mean_0)
            expected /= np.linalg.norm(expected)

            model = lda_fit(train)

            assert np.allclose(model.direction, expected, atol=1e-8)
            assert model.ridge == 0.0

    def test_class_one_projects_above_threshold(self) -> None:
        model = lda_fit(random_dataset(np.random.default_rng(3), n_rows=80))
        projected = model.class_means @ model.direction
        assert projected[0] < model.projected_threshold < projected[1]
        assert model.projected_threshold == pytest.approx(projected.mean())


class TestLdaFit:
    """Test fitting edge cases."""

    def test_affine_rescaling_keeps_predictions(self) -> None:
        rng = np.random.default_rng(33)
        train = random_dataset(rng, n_rows=80)
        test_rows = rng.normal(size=(200, 4))
        scale = np.array([10.0, 0.5, 3.0, 100.0])
        shift = np.array([-4.0, 2.0, 7.0, 1000.0])

        plain = lda_fit(train)
        moved = lda_fit(train.with_rows(train.rows * scale + shift))

        decision = DecisionConfig()
        assert np.array_equal(
            predict_labels(plain.score(test_rows), decision),
            predict_labels(moved.score(test_rows * scale + shift), decision),
        )

    def test_singular_scatter_uses_ridge(
        self, caplog: pytest.LogCaptureFixture
    ) -> None:
        rng = np.random.default_rng(34)
        base = random_dataset(rng, n_rows=40)
        rows = base.rows.copy()
        rows[:, 3] = rows[:, 0] * 2.0
        with caplog.at_level(logging.WARNING):
            model = lda_fit(base.with_rows(rows))
        assert model.regularized
        assert model.ridge > 0
        assert np.isclose(np.linalg.norm(model.direction), 1.0)
        assert "ridge" in caplog.text

    def test_identical_class_means_are_degenerate(self) -> None:
        rows = np.array(
            [[1.0, 0, 0, 0], [-1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, -1.0, 0, 0]]
        )
        with pytest.raises(DegenerateDirection):
            lda_fit(make_dataset(rows, [0, 0, 1, 1]))

    def test_class_with_one_row(self) -> None:
        rows = np.arange(16.0).reshape(4, 4) ** 1.5
        with pytest.raises(TooFewClassRows):
            lda_fit(make_dataset(rows, [0, 0, 0, 1]))

    def test_single_class(self) -> None:
        with pytest.raises(SingleClassTrain):
            lda_fit(make_dataset(np.eye(4), [1, 1, 1, 1]))

    def test_fisher_direction_is_unit_length(self) -> None:
        within = np.diag([1.0, 2.0, 3.0, 4.0])
        direction, ridge = fisher_direction(within, np.ones(4), np.zeros(4))
        assert ridge == 0.0
        assert np.isclose(np.linalg.norm(direction), 1.0)

    def test_document_round_trip(self) -> None:
        rng = np.random.default_rng(35)
        model = lda_fit(random_dataset(rng, n_rows=40))
        restored = LdaModel.from_document(model.to_document())
        rows = rng.normal(size=(100, 4))
        assert np.array_equal(restored.score(rows), model.score(rows))
