# ABOUTME: Two-class Fisher linear discriminant with a midpoint decision threshold
# ABOUTME: Falls back to ridge regularization when the within-class scatter is singular

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from maneuverml.errors import ConfigError, DegenerateDirection, TooFewClassRows

from .decision import require_both_classes, sigmoid_array
from .interfaces import ModelDocument

if TYPE_CHECKING:
    from maneuverml.config.models import RunConfig
    from maneuverml.dataset.models import Dataset

__all__ = [
    "LdaClassifier",
    "LdaModel",
    "LdaParams",
    "between_class_scatter",
    "fisher_direction",
    "lda_fit",
    "rayleigh_quotient",
    "within_class_scatter",
]

logger = logging.getLogger(__name__)

ALGORITHM = "lda"


@dataclass(frozen=True)
class LdaParams:
    """
    Regularization fallback settings.

    Attributes:
        ridge_scale: Ridge is ``ridge_scale * trace(S_w) / d`` when applied
        condition_limit: Condition number above which S_w counts as singular
    """

    ridge_scale: float = 1e-6
    condition_limit: float = 1e12

    def __post_init__(self) -> None:
        if not (math.isfinite(self.ridge_scale) and self.ridge_scale > 0):
            msg = f"lda.ridge_scale must be > 0, got {self.ridge_scale}"
            raise ConfigError(msg)
        if not self.condition_limit > 1:
            msg = f"lda.condition_limit must be > 1, got {self.condition_limit}"
            raise ConfigError(msg)


def within_class_scatter(rows: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Sum over both classes of the centred outer-product sums."""
    scatter = np.zeros((rows.shape[1], rows.shape[1]))
    for cls in (0, 1):
        centred = rows[labels == cls] - rows[labels == cls].mean(axis=0)
        scatter += centred.T @ centred
    return scatter


def between_class_scatter(mean_1: np.ndarray, mean_0: np.ndarray) -> np.ndarray:
    delta = mean_1 - mean_0
    return np.outer(delta, delta)


def rayleigh_quotient(
    direction: np.ndarray, between: np.ndarray, within: np.ndarray
) -> float:
    """Separation criterion ``w^T S_b w / w^T S_w w``."""
    w = np.asarray(direction, dtype=float)
    return float((w @ between @ w) / (w @ within @ w))


def fisher_direction(
    within: np.ndarray,
    mean_1: np.ndarray,
    mean_0: np.ndarray,
    params: LdaParams | None = None,
) -> tuple[np.ndarray, float]:
    """
    Solve ``S_w w = m1 - m0`` and normalize to unit length.

    When S_w is singular or ill-conditioned the system is solved against
    ``S_w + eps * I`` instead.

    Returns:
        ``(direction, ridge)`` where ridge is 0.0 unless regularization was used

    Raises:
        DegenerateDirection: If the solution is zero or non-finite
    """
    params = params or LdaParams()
    delta = mean_1 - mean_0
    dim = len(delta)
    ridge = 0.0

    solution: np.ndarray | None = None
    with np.errstate(divide="ignore", invalid="ignore"):
        condition = np.linalg.cond(within)
    if condition <= params.condition_limit:
        try:
            solution = np.linalg.solve(within, delta)
        except np.linalg.LinAlgError:
            solution = None
    if solution is None:
        ridge = params.ridge_scale * float(np.trace(within)) / dim
        if ridge <= 0:
            ridge = params.ridge_scale
        solution = np.linalg.solve(within + ridge * np.eye(dim), delta)
        logger.warning("Within-class scatter is singular; applied ridge %g", ridge)

    norm = float(np.linalg.norm(solution))
    if not (math.isfinite(norm) and norm > 0):
        msg = "class means coincide; no discriminant direction exists"
        raise DegenerateDirection(msg)
    return solution / norm, ridge


@dataclass(frozen=True, eq=False)
class LdaModel:
    """
    Fitted discriminant.

    Class 1 projects above ``projected_threshold``, the midpoint of the two
    projected class means. Equal class priors are assumed.
    """

    direction: np.ndarray
    class_means: np.ndarray
    projected_threshold: float
    within_scatter: np.ndarray
    between_scatter: np.ndarray
    ridge: float = 0.0

    algorithm = ALGORITHM

    @property
    def n_features(self) -> int:
        return len(self.direction)

    @property
    def regularized(self) -> bool:
        return self.ridge > 0

    def project(self, rows: np.ndarray) -> np.ndarray:
        return rows @ self.direction

    def score(self, rows: np.ndarray) -> np.ndarray:
        return sigmoid_array(self.project(rows) - self.projected_threshold)

    def to_document(self) -> ModelDocument:
        return {
            "direction": self.direction.tolist(),
            "class_means": self.class_means.tolist(),
            "projected_threshold": float(self.projected_threshold),
            "within_scatter": self.within_scatter.tolist(),
            "between_scatter": self.between_scatter.tolist(),
            "ridge": float(self.ridge),
        }

    @classmethod
    def from_document(cls, document: ModelDocument) -> LdaModel:
        return cls(
            direction=np.array(document["direction"], dtype=float),
            class_means=np.array(document["class_means"], dtype=float),
            projected_threshold=float(document["projected_threshold"]),
            within_scatter=np.array(document["within_scatter"], dtype=float),
            between_scatter=np.array(document["between_scatter"], dtype=float),
            ridge=float(document.get("ridge", 0.0)),
        )


def lda_fit(train: Dataset, params: LdaParams | None = None) -> LdaModel:
    """
    Fit the Fisher discriminant of a two-class training split.

    Raises:
        SingleClassTrain: If the split holds one class only
        TooFewClassRows: If a class has fewer than two rows
        DegenerateDirection: If the class means coincide
    """
    params = params or LdaParams()
    counts = require_both_classes(train, ALGORITHM)
    if min(counts) < 2:
        msg = f"lda needs at least 2 rows per class, got {counts[0]} and {counts[1]}"
        raise TooFewClassRows(msg)

    rows, labels = train.rows, train.labels
    mean_0 = rows[labels == 0].mean(axis=0)
    mean_1 = rows[labels == 1].mean(axis=0)
    within = within_class_scatter(rows, labels)
    direction, ridge = fisher_direction(within, mean_1, mean_0, params)

    if direction @ mean_1 < direction @ mean_0:
        direction = -direction
    projected_0 = float(direction @ mean_0)
    projected_1 = float(direction @ mean_1)
    if projected_1 == projected_0:
        msg = "class means project to the same point"
        raise DegenerateDirection(msg)

    logger.info(
        "Fitted lda on %d rows (ridge=%g, projected means %.6f / %.6f)",
        train.n_rows,
        ridge,
        projected_0,
        projected_1,
    )
    return LdaModel(
        direction=direction,
        class_means=np.vstack([mean_0, mean_1]),
        projected_threshold=(projected_0 + projected_1) / 2.0,
        within_scatter=within,
        between_scatter=between_class_scatter(mean_1, mean_0),
        ridge=ridge,
    )


class LdaClassifier:
    """Classifier plugin for linear discriminant analysis."""

    name = ALGORITHM
    scaled = True

    def fit(self, train: Dataset, config: RunConfig) -> LdaModel:
        return lda_fit(train, config.lda)

    def from_document(self, document: dict[str, Any]) -> LdaModel:
        return LdaModel.from_document(document)
