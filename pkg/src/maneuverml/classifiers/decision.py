# ABOUTME: Sigmoid squashing and the thresholded decision rule for fitted models
# ABOUTME: A row is predicted positive when its score reaches the threshold

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from maneuverml.errors import ConfigError, DimensionMismatch, SingleClassTrain

if TYPE_CHECKING:
    from maneuverml.dataset.models import Dataset

    from .interfaces import TrainedModel

__all__ = [
    "DecisionConfig",
    "predict_label",
    "predict_labels",
    "predict_score",
    "predict_scores",
    "require_both_classes",
    "sigmoid",
    "sigmoid_array",
]

_LOW = np.nextafter(0.0, 1.0)
_HIGH = np.nextafter(1.0, 0.0)


@dataclass(frozen=True)
class DecisionConfig:
    """Score threshold turning a model score into a label."""

    score_threshold: float = 0.5

    def __post_init__(self) -> None:
        threshold = self.score_threshold
        if not (math.isfinite(threshold) and 0.0 < threshold < 1.0):
            msg = f"decision.score_threshold must be in (0, 1), got {threshold}"
            raise ConfigError(msg)


def sigmoid_array(z: np.ndarray) -> np.ndarray:
    """
    Elementwise logistic function ``1 / (1 + exp(-z))``.

    Evaluated without overflow for large ``|z|`` and clamped to the open
    interval (0, 1).
    """
    values = np.asarray(z, dtype=float)
    out = np.empty_like(values)
    positive = values >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-values[positive]))
    exp_z = np.exp(values[~positive])
    out[~positive] = exp_z / (1.0 + exp_z)
    return np.clip(out, _LOW, _HIGH)


def sigmoid(z: float) -> float:
    return float(sigmoid_array(np.array([z]))[0])


def _as_batch(model: TrainedModel, rows: np.ndarray) -> np.ndarray:
    matrix = np.asarray(rows, dtype=float)
    if matrix.ndim != 2 or matrix.shape[1] != model.n_features:
        msg = (
            f"{model.algorithm} expects rows of {model.n_features} features, "
            f"got shape {matrix.shape}"
        )
        raise DimensionMismatch(msg)
    return matrix


def predict_scores(model: TrainedModel, rows: np.ndarray) -> np.ndarray:
    """Score a batch after checking its dimension."""
    return model.score(_as_batch(model, rows))


def predict_score(model: TrainedModel, row: np.ndarray) -> float:
    """
    Score one row.

    Raises:
        DimensionMismatch: If the row length differs from the model's features
    """
    vector = np.asarray(row, dtype=float)
    if vector.ndim != 1:
        msg = f"expected a single row, got shape {vector.shape}"
        raise DimensionMismatch(msg)
    return float(predict_scores(model, vector[np.newaxis, :])[0])


def predict_labels(scores: np.ndarray, config: DecisionConfig) -> np.ndarray:
    """Label 1 where ``score >= score_threshold``."""
    return (np.asarray(scores) >= config.score_threshold).astype(np.int64)


def predict_label(model: TrainedModel, row: np.ndarray, config: DecisionConfig) -> int:
    return int(predict_score(model, row) >= config.score_threshold)


def require_both_classes(train: Dataset, algorithm: str) -> tuple[int, int]:
    """
    Return the class counts of a training split.

    Raises:
        SingleClassTrain: If either class is absent
    """
    negatives, positives = train.class_counts()
    if negatives == 0 or positives == 0:
        present = 1 if positives else 0
        msg = (
            f"{algorithm} needs both classes in the training split, "
            f"only class {present} is present"
        )
        raise SingleClassTrain(msg)
    return negatives, positives
