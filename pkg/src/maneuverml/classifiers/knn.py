# ABOUTME: K-nearest-neighbours classifier over the standardized feature space
# ABOUTME: Lazy learner; the score is the positive fraction among the k nearest rows

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Literal

import numpy as np

from maneuverml.errors import BadK, ConfigError, DimensionMismatch

from .decision import require_both_classes
from .interfaces import ModelDocument

if TYPE_CHECKING:
    from collections.abc import Callable

    from maneuverml.config.models import RunConfig
    from maneuverml.dataset.models import Dataset

__all__ = [
    "DISTANCE_METRICS",
    "KnnClassifier",
    "KnnModel",
    "KnnParams",
    "euclidean",
    "knn_fit",
    "manhattan",
    "pairwise_distances",
]

logger = logging.getLogger(__name__)

ALGORITHM = "knn"

DistanceMetric = Literal["euclidean", "manhattan"]
DISTANCE_METRICS: tuple[str, ...] = ("euclidean", "manhattan")

# Query rows scored per distance matrix
_QUERY_BLOCK = 512


def _pair(p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(p, dtype=float)
    b = np.asarray(q, dtype=float)
    if a.shape != b.shape:
        msg = f"cannot measure distance between shapes {a.shape} and {b.shape}"
        raise DimensionMismatch(msg)
    return a, b


def euclidean(p: np.ndarray, q: np.ndarray) -> float:
    """``sqrt(sum((p_i - q_i)^2))``"""
    a, b = _pair(p, q)
    return float(np.sqrt(np.sum((a - b) ** 2)))


def manhattan(p: np.ndarray, q: np.ndarray) -> float:
    """``sum(|p_i - q_i|)``"""
    a, b = _pair(p, q)
    return float(np.sum(np.abs(a - b)))


def _euclidean_matrix(queries: np.ndarray, stored: np.ndarray) -> np.ndarray:
    deltas = queries[:, np.newaxis, :] - stored[np.newaxis, :, :]
    return np.sqrt(np.sum(deltas**2, axis=2))


def _manhattan_matrix(queries: np.ndarray, stored: np.ndarray) -> np.ndarray:
    deltas = queries[:, np.newaxis, :] - stored[np.newaxis, :, :]
    return np.sum(np.abs(deltas), axis=2)


_MATRIX_METRICS: dict[str, Callable[[np.ndarray, np.ndarray], np.ndarray]] = {
    "euclidean": _euclidean_matrix,
    "manhattan": _manhattan_matrix,
}


def pairwise_distances(
    queries: np.ndarray, stored: np.ndarray, metric: str = "euclidean"
) -> np.ndarray:
    """Distance from every query row to every stored row, ``n_queries x n_stored``."""
    return _MATRIX_METRICS[metric](queries, stored)


@dataclass(frozen=True)
class KnnParams:
    k: int = 5
    metric: DistanceMetric = "euclidean"

    def __post_init__(self) -> None:
        if self.k < 3 or self.k % 2 == 0:
            msg = f"knn.k must be an odd integer >= 3, got {self.k}"
            raise ConfigError(msg)
        if self.metric not in DISTANCE_METRICS:
            msg = f"knn.metric must be one of {DISTANCE_METRICS}, got {self.metric!r}"
            raise ConfigError(msg)


@dataclass(frozen=True, eq=False)
class KnnModel:
    """Stored training rows and labels; k is odd so votes never tie."""

    k: int
    stored_rows: np.ndarray
    stored_labels: np.ndarray
    metric: DistanceMetric = "euclidean"

    algorithm = ALGORITHM

    @property
    def n_features(self) -> int:
        return int(self.stored_rows.shape[1])

    @property
    def n_train(self) -> int:
        return int(self.stored_rows.shape[0])

    def neighbours(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the k nearest stored rows; equal distances keep storage order."""
        nearest = np.empty((len(rows), self.k), dtype=np.intp)
        for start in range(0, len(rows), _QUERY_BLOCK):
            block = rows[start : start + _QUERY_BLOCK]
            distances = pairwise_distances(block, self.stored_rows, self.metric)
            order = np.argsort(distances, axis=1, kind="stable")
            nearest[start : start + len(block)] = order[:, : self.k]
        return nearest

    def score(self, rows: np.ndarray) -> np.ndarray:
        votes = self.stored_labels[self.neighbours(rows)]
        return votes.sum(axis=1) / self.k

    def to_document(self) -> ModelDocument:
        return {
            "k": int(self.k),
            "metric": self.metric,
            "stored_rows": self.stored_rows.tolist(),
            "stored_labels": self.stored_labels.tolist(),
        }

    @classmethod
    def from_document(cls, document: ModelDocument) -> KnnModel:
        return cls(
            k=int(document["k"]),
            stored_rows=np.array(document["stored_rows"], dtype=float),
            stored_labels=np.array(document["stored_labels"], dtype=np.int64),
            metric=document.get("metric", "euclidean"),
        )


def knn_fit(
    train: Dataset, k: int, metric: DistanceMetric = "euclidean"
) -> KnnModel:
    """
    Store the training split for neighbour lookups.

    Raises:
        BadK: If k is even, below 3, or larger than the training split
        SingleClassTrain: If the split holds one class only
    """
    if k < 3 or k % 2 == 0 or k > train.n_rows:
        msg = f"k must be odd, >= 3 and <= {train.n_rows} training rows, got {k}"
        raise BadK(msg)
    require_both_classes(train, ALGORITHM)
    logger.info("Fitted knn with k=%d (%s) on %d rows", k, metric, train.n_rows)
    return KnnModel(
        k=k,
        stored_rows=np.array(train.rows),
        stored_labels=np.array(train.labels),
        metric=metric,
    )


class KnnClassifier:
    """Classifier plugin for k-nearest neighbours."""

    name = ALGORITHM
    scaled = True

    def fit(self, train: Dataset, config: RunConfig) -> KnnModel:
        return knn_fit(train, config.knn.k, config.knn.metric)

    def from_document(self, document: dict[str, Any]) -> KnnModel:
        return KnnModel.from_document(document)
