# ABOUTME: Unit tests for k-nearest-neighbour classification
# ABOUTME: Distance functions, k validation, vote scores and stable tie order

from __future__ import annotations

import numpy as np
import pytest

from maneuverml.classifiers import KnnModel, KnnParams, euclidean, knn_fit, manhattan
from maneuverml.classifiers.knn import pairwise_distances
from maneuverml.errors import BadK, ConfigError, DimensionMismatch, SingleClassTrain
from tests.fixtures import make_dataset, random_dataset


class TestDistances:
    def test_euclidean(self) -> None:
        assert euclidean(np.array([0.0, 0.0]), np.array([3.0, 4.0])) == 5.0

    def test_manhattan(self) -> None:
        assert manhattan(np.array([1.0, -1.0]), np.array([4.0, 3.0])) == 7.0

    def test_shape_mismatch(self) -> None:
        with pytest.raises(DimensionMismatch):
            euclidean(np.zeros(2), np.zeros(3))

    @pytest.mark.parametrize("metric", ["euclidean", "manhattan"])
    def test_matrix_agrees_with_pairwise_function(self, metric: str) -> None:
        rng = np.random.default_rng(1)
        queries, stored = rng.normal(size=(5, 4)), rng.normal(size=(7, 4))
        single = euclidean if metric == "euclidean" else manhattan
        matrix = pairwise_distances(queries, stored, metric)
        expected = [[single(q, s) for s in stored] for q in queries]
        assert np.allclose(matrix, expected, rtol=1e-12, atol=1e-12)


class TestKnnParams:
    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_k_must_be_odd_and_at_least_three(self, k: int) -> None:
        with pytest.raises(ConfigError):
            KnnParams(k=k)

    def test_unknown_metric(self) -> None:
        with pytest.raises(ConfigError):
            KnnParams(metric="cosine")  # type: ignore[arg-type]


class TestKnnFit:
    """Test neighbour storage and scoring."""

    def test_k_larger_than_training_split(self) -> None:
        with pytest.raises(BadK):
            knn_fit(make_dataset(np.eye(4), [0, 1, 0, 1]), k=5)

    def test_even_k_is_rejected_at_fit(self) -> None:
        with pytest.raises(BadK):
            knn_fit(make_dataset(np.eye(4), [0, 1, 0, 1]), k=2)

    def test_single_class(self) -> None:
        with pytest.raises(SingleClassTrain):
            knn_fit(make_dataset(np.eye(4), [0, 0, 0, 0]), k=3)

    def test_scores_are_multiples_of_one_over_k(self) -> None:
        rng = np.random.default_rng(4)
        model = knn_fit(random_dataset(rng, n_rows=50), k=5)
        scores = model.score(rng.normal(size=(100, 4)))
        assert np.allclose(scores * 5, np.round(scores * 5))
        assert np.all((scores >= 0.0) & (scores <= 1.0))

    def test_training_row_with_duplicates_keeps_its_label(self) -> None:
        rows = np.array(
            [
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [5.0, 5.0, 5.0, 5.0],
                [6.0, 6.0, 6.0, 6.0],
            ]
        )
        model = knn_fit(make_dataset(rows, [1, 1, 1, 0, 0]), k=3)
        assert model.score(rows[:1]).tolist() == [1.0]

    def test_equal_distances_keep_storage_order(self) -> None:
        rows = np.array(
            [
                [1.0, 0.0, 0.0, 0.0],
                [-1.0, 0.0, 0.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [0.0, -1.0, 0.0, 0.0],
            ]
        )
        model = knn_fit(make_dataset(rows, [1, 1, 0, 0]), k=3)
        assert model.neighbours(np.zeros((1, 4))).tolist() == [[0, 1, 2]]
        assert model.score(np.zeros((1, 4))).tolist() == pytest.approx([2 / 3])

    def test_manhattan_model_scores(self) -> None:
        rng = np.random.default_rng(6)
        train = random_dataset(rng, n_rows=30)
        model = knn_fit(train, k=3, metric="manhattan")
        assert model.metric == "manhattan"
        assert model.score(train.rows).shape == (30,)

    def test_document_round_trip(self) -> None:
        rng = np.random.default_rng(2)
        model = knn_fit(random_dataset(rng, n_rows=20), k=3)
        restored = KnnModel.from_document(model.to_document())
        queries = rng.normal(size=(100, 4))
        assert np.array_equal(restored.score(queries), model.score(queries))
