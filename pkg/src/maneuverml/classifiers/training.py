# ABOUTME: Fits a classifier plugin on a training split, standardizing when required
# ABOUTME: Scaled models carry their scaler so they score raw feature rows

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from maneuverml.dataset.scaling import apply_scaler, fit_scaler, scale_rows

if TYPE_CHECKING:
    import numpy as np

    from maneuverml.config.models import RunConfig
    from maneuverml.dataset.models import Dataset, ScalerParams

    from .interfaces import Classifier, ModelDocument, TrainedModel

__all__ = ["ScaledModel", "fit_classifier", "training_curve", "unwrap"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScaledModel:
    """A model fitted on standardized rows, paired with the scaler that made them."""

    model: TrainedModel
    scaler: ScalerParams

    @property
    def algorithm(self) -> str:
        return self.model.algorithm

    @property
    def n_features(self) -> int:
        return self.model.n_features

    def score(self, rows: np.ndarray) -> np.ndarray:
        return self.model.score(scale_rows(rows, self.scaler))

    def to_document(self) -> ModelDocument:
        return self.model.to_document()


def unwrap(model: TrainedModel) -> TrainedModel:
    """The underlying model of a ScaledModel, or the model itself."""
    return model.model if isinstance(model, ScaledModel) else model


def training_curve(model: TrainedModel) -> tuple[float, ...]:
    """Loss history recorded during fitting; empty for lazy learners."""
    return tuple(getattr(unwrap(model), "training_curve", ()))


def fit_classifier(
    classifier: Classifier, train: Dataset, config: RunConfig
) -> TrainedModel:
    """
    Fit one classifier on raw training rows.

    The scaler of a ``scaled`` classifier is fitted on ``train`` alone; the
    returned model accepts raw rows.
    """
    if not classifier.scaled:
        return classifier.fit(train, config)
    scaler = fit_scaler(train)
    model = classifier.fit(apply_scaler(train, scaler), config)
    logger.debug("Wrapped %s with a fitted scaler", classifier.name)
    return ScaledModel(model=model, scaler=scaler)
