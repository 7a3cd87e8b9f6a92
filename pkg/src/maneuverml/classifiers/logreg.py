# ABOUTME: Logistic regression fitted by full-batch gradient descent
# ABOUTME: Zero-initialized, optional L2 penalty on the weights only

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from maneuverml.errors import ConfigError, DivergenceDetected

from .decision import require_both_classes, sigmoid_array
from .interfaces import ModelDocument

if TYPE_CHECKING:
    from maneuverml.config.models import RunConfig
    from maneuverml.dataset.models import Dataset

__all__ = [
    "LogRegClassifier",
    "LogRegModel",
    "LogRegParams",
    "logistic_gradient",
    "logistic_loss",
    "logreg_fit",
]

logger = logging.getLogger(__name__)

ALGORITHM = "logreg"


@dataclass(frozen=True)
class LogRegParams:
    learning_rate: float = 0.1
    n_iters: int = 2000
    l2: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.learning_rate) and self.learning_rate > 0):
            msg = f"logreg.learning_rate must be > 0, got {self.learning_rate}"
            raise ConfigError(msg)
        if self.n_iters < 0:
            msg = f"logreg.n_iters must be >= 0, got {self.n_iters}"
            raise ConfigError(msg)
        if not (math.isfinite(self.l2) and self.l2 >= 0):
            msg = f"logreg.l2 must be >= 0, got {self.l2}"
            raise ConfigError(msg)


@dataclass(frozen=True)
class LogRegModel:
    """
    Fitted logistic regression.

    Attributes:
        intercept: Regression constant
        weights: One coefficient per feature
        training_curve: Loss before the first step and after every iteration
    """

    intercept: float
    weights: tuple[float, ...]
    training_curve: tuple[float, ...] = ()

    algorithm = ALGORITHM

    @property
    def n_features(self) -> int:
        return len(self.weights)

    def margin(self, rows: np.ndarray) -> np.ndarray:
        return self.intercept + rows @ np.asarray(self.weights)

    def score(self, rows: np.ndarray) -> np.ndarray:
        return sigmoid_array(self.margin(rows))

    def to_document(self) -> ModelDocument:
        return {
            "intercept": float(self.intercept),
            "weights": [float(w) for w in self.weights],
            "training_curve": [float(v) for v in self.training_curve],
        }

    @classmethod
    def from_document(cls, document: ModelDocument) -> LogRegModel:
        return cls(
            intercept=float(document["intercept"]),
            weights=tuple(float(w) for w in document["weights"]),
            training_curve=tuple(float(v) for v in document.get("training_curve", ())),
        )


def logistic_loss(
    intercept: float,
    weights: np.ndarray,
    rows: np.ndarray,
    labels: np.ndarray,
    l2: float = 0.0,
) -> float:
    """Mean binary cross-entropy plus ``l2 / 2 * |w|^2``."""
    z = intercept + rows @ weights
    loss = np.mean(np.logaddexp(0.0, z) - labels * z)
    return float(loss + 0.5 * l2 * float(weights @ weights))


def logistic_gradient(
    intercept: float,
    weights: np.ndarray,
    rows: np.ndarray,
    labels: np.ndarray,
    l2: float = 0.0,
) -> tuple[float, np.ndarray]:
    """Analytic gradient of logistic_loss as ``(d_intercept, d_weights)``."""
    residual = sigmoid_array(intercept + rows @ weights) - labels
    n_rows = len(labels)
    return (
        float(residual.sum() / n_rows),
        rows.T @ residual / n_rows + l2 * weights,
    )


def logreg_fit(train: Dataset, params: LogRegParams) -> LogRegModel:
    """
    Minimize mean cross-entropy by full-batch gradient descent.

    Args:
        train: Standardized training split
        params: Learning rate, iteration count and L2 strength

    Returns:
        Fitted model whose training_curve has ``n_iters + 1`` entries

    Raises:
        SingleClassTrain: If the split holds one class only
        DivergenceDetected: If the loss becomes non-finite
    """
    require_both_classes(train, ALGORITHM)
    rows = train.rows
    labels = train.labels.astype(float)
    intercept = 0.0
    weights = np.zeros(train.n_features)

    curve = [logistic_loss(intercept, weights, rows, labels, params.l2)]
    for iteration in range(params.n_iters):
        d_intercept, d_weights = logistic_gradient(
            intercept, weights, rows, labels, params.l2
        )
        intercept -= params.learning_rate * d_intercept
        weights = weights - params.learning_rate * d_weights
        loss = logistic_loss(intercept, weights, rows, labels, params.l2)
        if not math.isfinite(loss):
            msg = f"logistic loss became non-finite at iteration {iteration + 1}"
            raise DivergenceDetected(msg)
        curve.append(loss)

    logger.info(
        "Fitted logreg on %d rows: loss %.6f -> %.6f over %d iterations",
        train.n_rows,
        curve[0],
        curve[-1],
        params.n_iters,
    )
    return LogRegModel(
        intercept=float(intercept),
        weights=tuple(weights.tolist()),
        training_curve=tuple(curve),
    )


class LogRegClassifier:
    """Classifier plugin for logistic regression."""

    name = ALGORITHM
    scaled = True

    def fit(self, train: Dataset, config: RunConfig) -> LogRegModel:
        return logreg_fit(train, config.logreg)

    def from_document(self, document: dict[str, Any]) -> LogRegModel:
        return LogRegModel.from_document(document)
