# ABOUTME: Structural protocols shared by every classifier implementation
# ABOUTME: Plugins provide Classifier objects; fitting one yields a TrainedModel

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Dict, Protocol, runtime_checkable

if TYPE_CHECKING:
    import numpy as np

    from maneuverml.config.models import RunConfig
    from maneuverml.dataset.models import Dataset

# YAML-safe mapping produced by TrainedModel.to_document
ModelDocument = Dict[str, Any]


@runtime_checkable
class TrainedModel(Protocol):
    """
    A fitted, immutable binary classifier.

    Models are safe to share across threads for scoring.
    """

    @property
    def algorithm(self) -> str:
        """Algorithm tag recorded in the model document."""
        ...

    @property
    def n_features(self) -> int:
        """Row dimension accepted by score."""
        ...

    def score(self, rows: np.ndarray) -> np.ndarray:
        """
        Score a batch of rows.

        Args:
            rows: ``n x n_features`` matrix in the space the model was fitted in

        Returns:
            One score in [0, 1] per row
        """
        ...

    def to_document(self) -> ModelDocument:
        """Model parameters as YAML-safe builtins."""
        ...


@runtime_checkable
class Classifier(Protocol):
    """
    Protocol for classifier plugins.

    A classifier turns a training split into a TrainedModel and rebuilds
    models from their saved documents. ``scaled`` classifiers receive
    standardized rows; the scaler is fitted on the training split and stored
    with the model.
    """

    name: str
    scaled: bool

    def fit(self, train: Dataset, config: RunConfig) -> TrainedModel:
        """
        Fit a model on a training split.

        Args:
            train: Training rows (standardized when ``scaled`` is True)
            config: Run configuration holding this classifier's hyperparameters

        Returns:
            Fitted model
        """
        ...

    def from_document(self, document: ModelDocument) -> TrainedModel:
        """Rebuild a model from the ``model`` block of its document."""
        ...
