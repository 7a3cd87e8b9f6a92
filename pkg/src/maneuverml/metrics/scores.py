# ABOUTME: Confusion counts and the derived classification metrics
# ABOUTME: Zero denominators yield a flagged fallback value rather than an error

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Literal

import numpy as np

from maneuverml.errors import EmptyInput, LabelDomainError, LengthMismatch, ZeroSupport

from .models import ClassMetrics, ConfusionMatrix, Ratio

if TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = [
    "AverageMode",
    "accuracy",
    "as_binary",
    "averaged",
    "class_metrics",
    "confusion",
    "f1",
    "f1_from_matrix",
    "fpr",
    "precision",
    "recall",
    "specificity",
]

logger = logging.getLogger(__name__)

AverageMode = Literal["macro", "weighted"]


def as_binary(values: Sequence[int] | np.ndarray, name: str) -> np.ndarray:
    array = np.asarray(values)
    if not np.isin(array, (0, 1)).all():
        msg = f"{name} must only hold 0 and 1"
        raise LabelDomainError(None, msg)
    return array.astype(np.int64)


def confusion(
    y_true: Sequence[int] | np.ndarray, y_pred: Sequence[int] | np.ndarray
) -> ConfusionMatrix:
    """
    Count agreement between truth and prediction, class 1 positive.

    Raises:
        LengthMismatch: If the sequences differ in length
        EmptyInput: If they are empty
    """
    if len(y_true) != len(y_pred):
        msg = f"y_true has {len(y_true)} labels, y_pred has {len(y_pred)}"
        raise LengthMismatch(msg)
    if len(y_true) == 0:
        msg = "cannot build a confusion matrix from no labels"
        raise EmptyInput(msg)
    truth = as_binary(y_true, "y_true")
    pred = as_binary(y_pred, "y_pred")
    return ConfusionMatrix(
        tp=int(np.sum((truth == 1) & (pred == 1))),
        fp=int(np.sum((truth == 0) & (pred == 1))),
        tn=int(np.sum((truth == 0) & (pred == 0))),
        fn=int(np.sum((truth == 1) & (pred == 0))),
    )


def _ratio(numerator: int, denominator: int, fallback: float = 0.0) -> Ratio:
    if denominator == 0:
        return Ratio(fallback, degenerate=True)
    return Ratio(numerator / denominator)


def precision(cm: ConfusionMatrix, positive_class: int = 1) -> Ratio:
    """``TP / (TP + FP)`` for the designated class; 0 flagged when undefined."""
    view = cm.for_class(positive_class)
    return _ratio(view.tp, view.tp + view.fp)


def recall(cm: ConfusionMatrix, positive_class: int = 1) -> Ratio:
    """``TP / (TP + FN)`` for the designated class; 0 flagged when undefined."""
    view = cm.for_class(positive_class)
    return _ratio(view.tp, view.tp + view.fn)


def specificity(cm: ConfusionMatrix) -> Ratio:
    """``TN / (TN + FP)``; 0 flagged when there are no true negatives."""
    return _ratio(cm.tn, cm.tn + cm.fp)


def fpr(cm: ConfusionMatrix) -> Ratio:
    """``1 - specificity``; 1 flagged when there are no true negatives."""
    spec = specificity(cm)
    if spec.degenerate:
        return Ratio(1.0, degenerate=True)
    return Ratio(1.0 - spec.value)


def accuracy(cm: ConfusionMatrix) -> float:
    return (cm.tp + cm.tn) / cm.total if cm.total else 0.0


def f1(p: float, r: float) -> float:
    """Harmonic mean ``2pr / (p + r)``, 0 when both are 0."""
    if p + r == 0:
        return 0.0
    return 2.0 * p * r / (p + r)


def f1_from_matrix(cm: ConfusionMatrix, positive_class: int = 1) -> float:
    """``TP / (TP + (FP + FN) / 2)`` for the designated class."""
    view = cm.for_class(positive_class)
    denominator = view.tp + 0.5 * (view.fp + view.fn)
    return view.tp / denominator if denominator else 0.0


def averaged(
    per_class: Sequence[float], supports: Sequence[int], mode: AverageMode
) -> float:
    """
    Combine a two-class metric.

    ``macro`` is the unweighted mean; ``weighted`` weights each class by its
    true-class support.

    Raises:
        ZeroSupport: If the supports are negative or both zero
    """
    if len(per_class) != 2 or len(supports) != 2:
        msg = "averaging needs exactly one value and one support per class"
        raise LengthMismatch(msg)
    if min(supports) < 0 or sum(supports) == 0:
        msg = f"class supports {tuple(supports)} cannot weight an average"
        raise ZeroSupport(msg)
    if mode == "macro":
        return (per_class[0] + per_class[1]) / 2.0
    if mode == "weighted":
        total = supports[0] + supports[1]
        return (per_class[0] * supports[0] + per_class[1] * supports[1]) / total
    msg = f"averaging mode must be 'macro' or 'weighted', got {mode!r}"
    raise ValueError(msg)


def class_metrics(cm: ConfusionMatrix) -> tuple[ClassMetrics, ClassMetrics]:
    """Precision, recall, F1 and support for class 0 and class 1."""
    supports = cm.supports
    result = []
    for cls in (0, 1):
        p = precision(cm, cls)
        r = recall(cm, cls)
        if p.degenerate or r.degenerate:
            logger.debug("Degenerate denominator for class %d metrics: %s", cls, cm)
        result.append(
            ClassMetrics(p.value, r.value, f1(p.value, r.value), supports[cls])
        )
    return result[0], result[1]
