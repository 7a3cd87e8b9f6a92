# ABOUTME: Gradient-boosted regression trees on logistic loss
# ABOUTME: Exhaustive midpoint split search, Newton leaf values, flat-array trees

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from maneuverml.errors import ConfigError

from .decision import require_both_classes, sigmoid_array
from .interfaces import ModelDocument

if TYPE_CHECKING:
    from maneuverml.config.models import RunConfig
    from maneuverml.dataset.models import Dataset

__all__ = [
    "GbdtClassifier",
    "GbdtModel",
    "GbdtParams",
    "RegressionTree",
    "gbdt_fit",
    "grow_tree",
    "margin_loss",
]

logger = logging.getLogger(__name__)

ALGORITHM = "gbdt"
LEAF = -1
# Below this hessian mass a leaf predicts 0
_MIN_HESSIAN = 1e-12


@dataclass(frozen=True)
class GbdtParams:
    n_trees: int = 100
    max_depth: int = 3
    learning_rate: float = 0.1
    min_samples_leaf: int = 2

    def __post_init__(self) -> None:
        if self.n_trees < 0:
            msg = f"gbdt.n_trees must be >= 0, got {self.n_trees}"
            raise ConfigError(msg)
        if self.max_depth < 1:
            msg = f"gbdt.max_depth must be >= 1, got {self.max_depth}"
            raise ConfigError(msg)
        if not (math.isfinite(self.learning_rate) and 0 < self.learning_rate <= 1):
            msg = f"gbdt.learning_rate must be in (0, 1], got {self.learning_rate}"
            raise ConfigError(msg)
        if self.min_samples_leaf < 1:
            msg = f"gbdt.min_samples_leaf must be >= 1, got {self.min_samples_leaf}"
            raise ConfigError(msg)


@dataclass(frozen=True, eq=False)
class RegressionTree:
    """
    Binary regression tree stored as parallel node arrays.

    Node 0 is the root. Split nodes send ``x[feature] <= threshold`` to
    ``left``; leaf nodes have ``feature == LEAF`` and carry ``value``.
    """

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray

    @property
    def n_nodes(self) -> int:
        return len(self.feature)

    def depth(self) -> int:
        def walk(node: int) -> int:
            if self.feature[node] == LEAF:
                return 0
            return 1 + max(walk(self.left[node]), walk(self.right[node]))

        return walk(0)

    def leaf_values(self) -> np.ndarray:
        return self.value[self.feature == LEAF]

    def predict(self, rows: np.ndarray) -> np.ndarray:
        node = np.zeros(len(rows), dtype=np.intp)
        active = self.feature[node] != LEAF
        while active.any():
            index = np.flatnonzero(active)
            current = node[index]
            goes_left = (
                rows[index, self.feature[current]] <= self.threshold[current]
            )
            node[index] = np.where(goes_left, self.left[current], self.right[current])
            active = self.feature[node] != LEAF
        return self.value[node]

    def to_document(self) -> dict[str, list[Any]]:
        return {
            "feature": self.feature.tolist(),
            "threshold": self.threshold.tolist(),
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "value": self.value.tolist(),
        }

    @classmethod
    def from_document(cls, document: dict[str, list[Any]]) -> RegressionTree:
        return cls(
            feature=np.array(document["feature"], dtype=np.intp),
            threshold=np.array(document["threshold"], dtype=float),
            left=np.array(document["left"], dtype=np.intp),
            right=np.array(document["right"], dtype=np.intp),
            value=np.array(document["value"], dtype=float),
        )


@dataclass
class _TreeBuilder:
    rows: np.ndarray
    residuals: np.ndarray
    hessians: np.ndarray
    max_depth: int
    min_samples_leaf: int
    feature: list[int] = field(default_factory=list)
    threshold: list[float] = field(default_factory=list)
    left: list[int] = field(default_factory=list)
    right: list[int] = field(default_factory=list)
    value: list[float] = field(default_factory=list)

    def _new_node(self) -> int:
        self.feature.append(LEAF)
        self.threshold.append(0.0)
        self.left.append(LEAF)
        self.right.append(LEAF)
        self.value.append(0.0)
        return len(self.feature) - 1

    def _leaf_value(self, index: np.ndarray) -> float:
        hessian = float(self.hessians[index].sum())
        if hessian < _MIN_HESSIAN:
            return 0.0
        return float(self.residuals[index].sum()) / hessian

    def _best_split(self, index: np.ndarray) -> tuple[int, float, np.ndarray] | None:
        n = len(index)
        residuals = self.residuals[index]
        total = residuals.sum()
        left_sizes = np.arange(1, n)
        sized = (left_sizes >= self.min_samples_leaf) & (
            n - left_sizes >= self.min_samples_leaf
        )

        best: tuple[int, float, np.ndarray] | None = None
        best_gain = 0.0
        for feature in range(self.rows.shape[1]):
            values = self.rows[index, feature]
            order = np.argsort(values, kind="stable")
            ordered = values[order]
            left_sums = np.cumsum(residuals[order])[:-1]
            right_sums = total - left_sums
            gains = (
                left_sums**2 / left_sizes
                + right_sums**2 / (n - left_sizes)
                - total**2 / n
            )
            valid = sized & (ordered[:-1] < ordered[1:])
            if not valid.any():
                continue
            gains = np.where(valid, gains, -np.inf)
            position = int(np.argmax(gains))
            if gains[position] > best_gain:
                low, high = ordered[position], ordered[position + 1]
                threshold = low + (high - low) / 2.0
                if threshold >= high:
                    threshold = low
                best_gain = float(gains[position])
                best = (feature, float(threshold), values <= threshold)
        return best

    def build(self, index: np.ndarray, depth: int) -> int:
        node = self._new_node()
        split = None
        if depth < self.max_depth and len(index) >= 2 * self.min_samples_leaf:
            split = self._best_split(index)
        if split is None:
            self.value[node] = self._leaf_value(index)
            return node
        feature, threshold, goes_left = split
        self.feature[node] = feature
        self.threshold[node] = threshold
        self.left[node] = self.build(index[goes_left], depth + 1)
        self.right[node] = self.build(index[~goes_left], depth + 1)
        return node

    def tree(self) -> RegressionTree:
        return RegressionTree(
            feature=np.array(self.feature, dtype=np.intp),
            threshold=np.array(self.threshold, dtype=float),
            left=np.array(self.left, dtype=np.intp),
            right=np.array(self.right, dtype=np.intp),
            value=np.array(self.value, dtype=float),
        )


def grow_tree(
    rows: np.ndarray,
    residuals: np.ndarray,
    hessians: np.ndarray,
    max_depth: int,
    min_samples_leaf: int,
) -> RegressionTree:
    """
    Fit one regression tree to residuals.

    Splits maximize the squared-error reduction of the residuals; among equal
    gains the lowest feature index and then the lowest threshold win. Leaves
    hold the one-step Newton estimate ``sum(residual) / sum(hessian)``.
    """
    builder = _TreeBuilder(rows, residuals, hessians, max_depth, min_samples_leaf)
    builder.build(np.arange(len(rows)), depth=0)
    return builder.tree()


def margin_loss(margins: np.ndarray, labels: np.ndarray) -> float:
    """Mean logistic loss of raw margins."""
    return float(np.mean(np.logaddexp(0.0, margins) - labels * margins))


@dataclass(frozen=True, eq=False)
class GbdtModel:
    """
    Boosted ensemble: ``score = sigmoid(base_score + learning_rate * sum(trees))``.

    ``training_curve[0]`` is the loss at the base score, followed by one entry
    per stage.
    """

    base_score: float
    learning_rate: float
    max_depth: int
    n_trees: int
    trees: tuple[RegressionTree, ...] = ()
    training_curve: tuple[float, ...] = ()
    n_features_in: int = 4

    algorithm = ALGORITHM

    @property
    def n_features(self) -> int:
        return self.n_features_in

    def margin(self, rows: np.ndarray) -> np.ndarray:
        margins = np.full(len(rows), self.base_score)
        for tree in self.trees:
            margins = margins + self.learning_rate * tree.predict(rows)
        return margins

    def score(self, rows: np.ndarray) -> np.ndarray:
        return sigmoid_array(self.margin(rows))

    def to_document(self) -> ModelDocument:
        return {
            "base_score": float(self.base_score),
            "learning_rate": float(self.learning_rate),
            "max_depth": int(self.max_depth),
            "n_trees": int(self.n_trees),
            "n_features": int(self.n_features_in),
            "trees": [tree.to_document() for tree in self.trees],
            "training_curve": [float(v) for v in self.training_curve],
        }

    @classmethod
    def from_document(cls, document: ModelDocument) -> GbdtModel:
        return cls(
            base_score=float(document["base_score"]),
            learning_rate=float(document["learning_rate"]),
            max_depth=int(document["max_depth"]),
            n_trees=int(document["n_trees"]),
            trees=tuple(RegressionTree.from_document(t) for t in document["trees"]),
            training_curve=tuple(float(v) for v in document.get("training_curve", ())),
            n_features_in=int(document["n_features"]),
        )


def gbdt_fit(train: Dataset, params: GbdtParams) -> GbdtModel:
    """
    Stagewise functional gradient descent on logistic loss.

    Starts from the log-odds of the positive rate and adds one shrunken tree
    per stage, each fitted to ``y - sigmoid(margin)``. Raw features are used;
    trees only depend on feature order.

    Raises:
        SingleClassTrain: If the split holds one class only
    """
    negatives, positives = require_both_classes(train, ALGORITHM)
    rows = train.rows
    labels = train.labels.astype(float)
    base_score = math.log(positives / negatives)

    margins = np.full(train.n_rows, base_score)
    curve = [margin_loss(margins, labels)]
    trees: list[RegressionTree] = []
    for stage in range(params.n_trees):
        probabilities = sigmoid_array(margins)
        tree = grow_tree(
            rows,
            labels - probabilities,
            probabilities * (1.0 - probabilities),
            params.max_depth,
            params.min_samples_leaf,
        )
        trees.append(tree)
        margins = margins + params.learning_rate * tree.predict(rows)
        curve.append(margin_loss(margins, labels))
        logger.debug(
            "gbdt stage %d: %d nodes, loss %.6f", stage + 1, tree.n_nodes, curve[-1]
        )

    logger.info(
        "Fitted gbdt on %d rows: %d trees, loss %.6f -> %.6f",
        train.n_rows,
        len(trees),
        curve[0],
        curve[-1],
    )
    return GbdtModel(
        base_score=base_score,
        learning_rate=params.learning_rate,
        max_depth=params.max_depth,
        n_trees=params.n_trees,
        trees=tuple(trees),
        training_curve=tuple(curve),
        n_features_in=train.n_features,
    )


class GbdtClassifier:
    """Classifier plugin for gradient-boosted trees."""

    name = ALGORITHM
    scaled = False

    def fit(self, train: Dataset, config: RunConfig) -> GbdtModel:
        return gbdt_fit(train, config.gbdt)

    def from_document(self, document: dict[str, Any]) -> GbdtModel:
        return GbdtModel.from_document(document)
