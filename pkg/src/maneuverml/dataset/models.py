# ABOUTME: Immutable learning dataset, scaler parameters and split specification
# ABOUTME: Dataset arrays are copied and frozen read-only at construction

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from maneuverml.errors import (
    ConfigError,
    LabelDomainError,
    NonFiniteFeature,
    SchemaError,
)
from maneuverml.features.models import FEATURE_NAMES

if TYPE_CHECKING:
    from collections.abc import Sequence

__all__ = ["Dataset", "ScalerParams", "SplitSpec"]

MAX_SEED = 2**64 - 1


def _frozen(array: np.ndarray) -> np.ndarray:
    copy = np.array(array, copy=True)
    copy.setflags(write=False)
    return copy


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Feature matrix with labels and row identifiers.

    Attributes:
        feature_names: Column names, FEATURE_NAMES order
        rows: ``n_rows x n_features`` float matrix (read-only)
        labels: Binary label per row (read-only)
        ids: Record identifier per row
    """

    feature_names: tuple[str, ...]
    rows: np.ndarray
    labels: np.ndarray
    ids: tuple[str, ...]

    def __post_init__(self) -> None:
        rows = np.asarray(self.rows, dtype=float)
        labels = np.asarray(self.labels)
        ids = tuple(self.ids)
        names = tuple(self.feature_names)
        if rows.ndim != 2 or rows.shape[1] != len(names):
            msg = f"rows must be n x {len(names)}, got shape {rows.shape}"
            raise SchemaError(None, msg)
        if not (rows.shape[0] == len(labels) == len(ids)):
            msg = (
                f"rows ({rows.shape[0]}), labels ({len(labels)}) and "
                f"ids ({len(ids)}) differ in length"
            )
            raise SchemaError(None, msg)
        bad = np.argwhere(~np.isfinite(rows))
        if len(bad):
            row, column = bad[0]
            raise NonFiniteFeature(ids[row], names[column])
        if len(labels) and not np.isin(labels, (0, 1)).all():
            msg = f"labels must be 0 or 1, found {sorted(set(labels.tolist()))}"
            raise LabelDomainError(None, msg)
        object.__setattr__(self, "feature_names", names)
        object.__setattr__(self, "rows", _frozen(rows))
        object.__setattr__(self, "labels", _frozen(labels.astype(np.int64)))
        object.__setattr__(self, "ids", ids)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            self.feature_names == other.feature_names
            and self.ids == other.ids
            and np.array_equal(self.rows, other.rows)
            and np.array_equal(self.labels, other.labels)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def n_rows(self) -> int:
        return int(self.rows.shape[0])

    @property
    def n_features(self) -> int:
        return int(self.rows.shape[1])

    def class_counts(self) -> tuple[int, int]:
        """Number of rows labelled 0 and 1."""
        positives = int(self.labels.sum())
        return self.n_rows - positives, positives

    def subset(self, indices: Sequence[int] | np.ndarray) -> Dataset:
        """New dataset holding the given rows, in the given order."""
        index = np.asarray(indices, dtype=np.intp)
        return Dataset(
            feature_names=self.feature_names,
            rows=self.rows[index],
            labels=self.labels[index],
            ids=tuple(self.ids[i] for i in index),
        )

    def with_rows(self, rows: np.ndarray) -> Dataset:
        """New dataset with replaced feature values and the same labels and ids."""
        return Dataset(self.feature_names, rows, self.labels, self.ids)

    @classmethod
    def empty_like(cls, feature_names: Sequence[str] = FEATURE_NAMES) -> Dataset:
        return cls(tuple(feature_names), np.empty((0, len(feature_names))), [], ())


@dataclass(frozen=True)
class ScalerParams:
    """
    Per-column z-score parameters fitted on a training split.

    Constant columns get ``std_dev = 1`` and are listed in ``constant_columns``.
    """

    means: tuple[float, ...]
    std_devs: tuple[float, ...]
    constant_columns: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "means", tuple(float(m) for m in self.means))
        object.__setattr__(self, "std_devs", tuple(float(s) for s in self.std_devs))
        object.__setattr__(self, "constant_columns", tuple(self.constant_columns))
        if len(self.means) != len(self.std_devs):
            msg = "means and std_devs must have equal length"
            raise ValueError(msg)
        if any(not (math.isfinite(s) and s > 0) for s in self.std_devs):
            msg = f"std_devs must be positive, got {self.std_devs}"
            raise ValueError(msg)

    def to_document(self) -> dict[str, Any]:
        return {
            "means": list(self.means),
            "std_devs": list(self.std_devs),
            "constant_columns": list(self.constant_columns),
        }

    @classmethod
    def from_document(cls, document: dict[str, Any]) -> ScalerParams:
        return cls(
            means=tuple(document["means"]),
            std_devs=tuple(document["std_devs"]),
            constant_columns=tuple(document.get("constant_columns", ())),
        )


@dataclass(frozen=True)
class SplitSpec:
    """Train/test partition settings."""

    test_fraction: float = 0.2
    seed: int = 0
    stratified: bool = True

    def __post_init__(self) -> None:
        if not 0.0 < self.test_fraction < 1.0:
            msg = f"split.test_fraction must be in (0, 1), got {self.test_fraction}"
            raise ConfigError(msg)
        if not 0 <= self.seed <= MAX_SEED:
            msg = f"split.seed must be an unsigned 64-bit integer, got {self.seed}"
            raise ConfigError(msg)

    def to_document(self) -> dict[str, Any]:
        return {
            "test_fraction": float(self.test_fraction),
            "seed": int(self.seed),
            "stratified": bool(self.stratified),
        }
