# ABOUTME: ROC curve construction over every distinct score threshold and its AUC
# ABOUTME: Thresholding is inclusive, matching the decision rule of the classifiers

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from maneuverml.errors import (
    EmptyInput,
    InvalidCurve,
    LengthMismatch,
    SingleClassTruth,
)

from .models import RocCurve, RocPoint
from .scores import as_binary

if TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = ["auc", "roc", "roc_auc"]


def roc(
    y_true: Sequence[int] | np.ndarray, scores: Sequence[float] | np.ndarray
) -> RocCurve:
    """
    Build the ROC curve of a score vector.

    Thresholds are a sentinel above the highest score followed by the distinct
    scores in descending order; at each, a row is positive iff
    ``score >= threshold``. Tied scores therefore produce a single point.

    Raises:
        LengthMismatch: If the inputs differ in length
        EmptyInput: If they are empty
        SingleClassTruth: If y_true holds only one class
    """
    if len(y_true) != len(scores):
        msg = f"y_true has {len(y_true)} labels, scores has {len(scores)}"
        raise LengthMismatch(msg)
    if len(y_true) == 0:
        msg = "cannot build a ROC curve from no scores"
        raise EmptyInput(msg)
    truth = as_binary(y_true, "y_true")
    values = np.asarray(scores, dtype=float)
    if not np.isfinite(values).all():
        msg = "scores must be finite"
        raise InvalidCurve(msg)
    positives = int(truth.sum())
    negatives = len(truth) - positives
    if positives == 0 or negatives == 0:
        msg = "ROC needs both classes in y_true"
        raise SingleClassTruth(msg)

    order = np.argsort(-values, kind="stable")
    ordered = values[order]
    last_of_group = np.r_[np.flatnonzero(np.diff(ordered) != 0), len(ordered) - 1]
    true_positives = np.cumsum(truth[order])[last_of_group]
    false_positives = last_of_group + 1 - true_positives

    top = float(ordered[0])
    sentinel = top + 1.0 if top + 1.0 > top else float("inf")
    points = [RocPoint(0.0, 0.0, sentinel)]
    points.extend(
        RocPoint(float(fp / negatives), float(tp / positives), float(ordered[i]))
        for fp, tp, i in zip(
            false_positives, true_positives, last_of_group, strict=True
        )
    )
    return RocCurve(points=tuple(points))


def auc(curve: RocCurve) -> float:
    """
    Trapezoidal area under the curve.

    Equals the probability that a random positive outscores a random negative,
    counting ties as one half.
    """
    x = np.asarray(curve.fprs)
    y = np.asarray(curve.tprs)
    return float(np.sum(np.diff(x) * (y[1:] + y[:-1]) / 2.0))


def roc_auc(
    y_true: Sequence[int] | np.ndarray, scores: Sequence[float] | np.ndarray
) -> float:
    return auc(roc(y_true, scores))
