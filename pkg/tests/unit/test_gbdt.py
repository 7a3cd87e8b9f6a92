# ABOUTME: Unit tests for gradient-boosted regression trees
# ABOUTME: Tree shape limits, split rules, loss descent and document round trips

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
import pytest

from maneuverml.classifiers import GbdtModel, GbdtParams, RegressionTree, gbdt_fit
from maneuverml.classifiers.gbdt import LEAF, grow_tree, margin_loss
from maneuverml.errors import ConfigError, SingleClassTrain
from tests.fixtures import make_dataset, random_dataset, separable_dataset


def _leaf_of(tree: RegressionTree, row: np.ndarray) -> int:
    node = 0
    while tree.feature[node] != LEAF:
        goes_left = row[tree.feature[node]] <= tree.threshold[node]
        node = int(tree.left[node] if goes_left else tree.right[node])
    return node


class TestGbdtParams:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_trees": -1},
            {"max_depth": 0},
            {"learning_rate": 0.0},
            {"learning_rate": 1.5},
            {"min_samples_leaf": 0},
        ],
    )
    def test_invalid_params(self, kwargs: dict) -> None:
        with pytest.raises(ConfigError):
            GbdtParams(**kwargs)


class TestGrowTree:
    """Test a single residual tree."""

    def test_depth_never_exceeds_limit(self) -> None:
        rng = np.random.default_rng(41)
        rows = rng.normal(size=(200, 4))
        residuals = rng.normal(size=200)
        for max_depth in (1, 2, 3, 5):
            tree = grow_tree(rows, residuals, np.ones(200), max_depth, 1)
            assert tree.depth() <= max_depth

    def test_leaves_hold_at_least_min_samples(self) -> None:
        rng = np.random.default_rng(42)
        rows = rng.normal(size=(150, 4))
        residuals = rng.normal(size=150)
        tree = grow_tree(rows, residuals, np.ones(150), 6, 7)
        counts: dict[int, int] = {}
        for row in rows:
            leaf = _leaf_of(tree, row)
            counts[leaf] = counts.get(leaf, 0) + 1
        assert min(counts.values()) >= 7

    def test_single_step_recovers_threshold(self) -> None:
        rows = np.column_stack([np.arange(10.0), np.zeros((10, 3))])
        residuals = np.where(rows[:, 0] < 5, -1.0, 1.0)
        tree = grow_tree(rows, residuals, np.ones(10), 1, 1)
        assert tree.feature[0] == 0
        assert tree.threshold[0] == 4.5
        assert sorted(tree.leaf_values().tolist()) == [-1.0, 1.0]

    def test_constant_features_give_a_single_leaf(self) -> None:
        rows = np.ones((6, 4))
        residuals = np.array([1.0, -1.0, 2.0, 0.0, 1.0, 3.0])
        tree = grow_tree(rows, residuals, np.full(6, 2.0), 3, 1)
        assert tree.n_nodes == 1
        assert tree.value[0] == pytest.approx(0.5)

    def test_leaf_value_is_newton_step(self) -> None:
        rows = np.zeros((4, 4))
        residuals = np.array([0.5, 0.5, -0.25, 0.25])
        hessians = np.array([0.25, 0.25, 0.25, 0.25])
        tree = grow_tree(rows, residuals, hessians, 2, 1)
        assert tree.value[0] == pytest.approx(1.0)


class TestGbdtFit:
    """Test boosting on whole datasets."""

    def test_training_loss_never_increases(self) -> None:
        model = gbdt_fit(separable_dataset(200, seed=4), GbdtParams(n_trees=40))
        curve = np.asarray(model.training_curve)
        assert len(curve) == 41
        assert np.all(np.diff(curve) <= 1e-9)

    def test_base_score_is_log_odds(self) -> None:
        train = make_dataset(np.eye(4), [1, 0, 0, 0])
        model = gbdt_fit(train, GbdtParams(n_trees=0))
        assert model.base_score == pytest.approx(math.log(1 / 3))
        assert model.training_curve[0] == pytest.approx(
            margin_loss(np.full(4, model.base_score), train.labels.astype(float))
        )

    def test_every_tree_respects_depth(self) -> None:
        rng = np.random.default_rng(43)
        model = gbdt_fit(random_dataset(rng, n_rows=120), GbdtParams(n_trees=15))
        assert len(model.trees) == 15
        assert all(tree.depth() <= 3 for tree in model.trees)

    def test_fit_is_deterministic(self) -> None:
        rng = np.random.default_rng(44)
        train = random_dataset(rng, n_rows=80)
        first = gbdt_fit(train, GbdtParams(n_trees=10))
        second = gbdt_fit(train, GbdtParams(n_trees=10))
        assert first.to_document() == second.to_document()

    def test_single_class(self) -> None:
        with pytest.raises(SingleClassTrain):
            gbdt_fit(make_dataset(np.eye(4), [0, 0, 0, 0]), GbdtParams())

    def test_document_round_trip(self) -> None:
        rng = np.random.default_rng(45)
        model = gbdt_fit(random_dataset(rng, n_rows=60), GbdtParams(n_trees=8))
        restored = GbdtModel.from_document(model.to_document())
        rows = rng.normal(size=(100, 4))
        assert np.array_equal(restored.score(rows), model.score(rows))
        assert restored.training_curve == model.training_curve

    @pytest.mark.parametrize("transform", [np.exp, np.arctan, np.cbrt])
    def test_monotone_feature_transform_keeps_the_partition(
        self, transform: Callable[[np.ndarray], np.ndarray]
    ) -> None:
        rng = np.random.default_rng(46)
        train = random_dataset(rng, n_rows=90)
        warped = train.with_rows(transform(train.rows))
        params = GbdtParams(n_trees=12)
        plain, bent = gbdt_fit(train, params), gbdt_fit(warped, params)

        for tree, other in zip(plain.trees, bent.trees, strict=True):
            assert np.array_equal(tree.feature, other.feature)
            assert np.array_equal(tree.left, other.left)
            assert np.array_equal(tree.value, other.value)
        assert np.array_equal(plain.score(train.rows), bent.score(warped.rows))
