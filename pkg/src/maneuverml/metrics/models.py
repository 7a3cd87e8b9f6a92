# ABOUTME: Confusion matrix, ROC curve and per-algorithm report records
# ABOUTME: All records are immutable and validate their own invariants

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import pairwise
from typing import NamedTuple

from maneuverml.errors import InvalidCurve

__all__ = [
    "AlgorithmReport",
    "ClassMetrics",
    "ConfusionMatrix",
    "MetricsReport",
    "Ratio",
    "RocCurve",
    "RocPoint",
]


class Ratio(NamedTuple):
    """A metric value plus whether its denominator was zero."""

    value: float
    degenerate: bool = False


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts of a binary prediction, class 1 positive."""

    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "tn", "fn"):
            if getattr(self, name) < 0:
                msg = f"confusion count {name} must be >= 0"
                raise ValueError(msg)

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    @property
    def supports(self) -> tuple[int, int]:
        """True-class counts ``(class 0, class 1)``."""
        return self.tn + self.fp, self.tp + self.fn

    def swapped(self) -> ConfusionMatrix:
        """The same counts seen with class 0 as the positive class."""
        return ConfusionMatrix(tp=self.tn, fp=self.fn, tn=self.tp, fn=self.fp)

    def for_class(self, positive_class: int) -> ConfusionMatrix:
        return self if positive_class == 1 else self.swapped()


class RocPoint(NamedTuple):
    fpr: float
    tpr: float
    threshold: float


@dataclass(frozen=True)
class RocCurve:
    """
    Ordered ROC points from the strictest threshold to the loosest.

    Starts at (0, 0), ends at (1, 1), and never decreases in fpr or tpr.
    """

    points: tuple[RocPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(RocPoint(*p) for p in self.points)
        object.__setattr__(self, "points", points)
        if len(points) < 2:
            msg = f"ROC curve needs at least 2 points, got {len(points)}"
            raise InvalidCurve(msg)
        if points[0][:2] != (0.0, 0.0) or points[-1][:2] != (1.0, 1.0):
            msg = "ROC curve must start at (0, 0) and end at (1, 1)"
            raise InvalidCurve(msg)
        for before, after in pairwise(points):
            if after.fpr < before.fpr or after.tpr < before.tpr:
                msg = f"ROC curve decreases between {before} and {after}"
                raise InvalidCurve(msg)
        if any(not (0.0 <= v <= 1.0) for p in points for v in (p.fpr, p.tpr)):
            msg = "ROC rates must lie in [0, 1]"
            raise InvalidCurve(msg)

    @property
    def fprs(self) -> tuple[float, ...]:
        return tuple(p.fpr for p in self.points)

    @property
    def tprs(self) -> tuple[float, ...]:
        return tuple(p.tpr for p in self.points)

    def __len__(self) -> int:
        return len(self.points)


class ClassMetrics(NamedTuple):
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class AlgorithmReport:
    """
    Every metric of one fitted model on the test split.

    ``f1`` is the F1 of the positive (maneuver) class. ``degenerate`` names the
    metrics whose denominator was zero.
    """

    algorithm: str
    confusion: ConfusionMatrix
    accuracy: float
    precision_macro: float
    precision_weighted: float
    recall_macro: float
    recall_weighted: float
    f1: float
    f1_macro: float
    f1_weighted: float
    specificity: float
    fpr: float
    auc: float
    roc: RocCurve
    per_class: tuple[ClassMetrics, ClassMetrics]
    degenerate: tuple[str, ...] = field(default=())

    def scalars(self) -> dict[str, float]:
        """Headline metrics keyed by name, in report order."""
        return {
            "accuracy": self.accuracy,
            "precision_macro": self.precision_macro,
            "precision_weighted": self.precision_weighted,
            "recall_macro": self.recall_macro,
            "recall_weighted": self.recall_weighted,
            "f1": self.f1,
            "f1_macro": self.f1_macro,
            "f1_weighted": self.f1_weighted,
            "specificity": self.specificity,
            "fpr": self.fpr,
            "auc": self.auc,
        }


@dataclass(frozen=True)
class MetricsReport:
    """Reports of every evaluated model, ordered by algorithm name."""

    score_threshold: float
    test_rows: int
    supports: tuple[int, int]
    algorithms: tuple[AlgorithmReport, ...]

    def get(self, algorithm: str) -> AlgorithmReport:
        for report in self.algorithms:
            if report.algorithm == algorithm:
                return report
        raise KeyError(algorithm)

    def by_f1(self) -> list[AlgorithmReport]:
        """Reports ordered by descending F1, ties by algorithm name."""
        return sorted(self.algorithms, key=lambda r: (-r.f1, r.algorithm))
