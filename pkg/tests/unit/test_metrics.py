# ABOUTME: Unit tests for confusion counts and the derived classification metrics
# ABOUTME: Random label vectors are checked against loop-based recomputation

from __future__ import annotations

import numpy as np
import pytest

from maneuverml.errors import EmptyInput, LabelDomainError, LengthMismatch, ZeroSupport
from maneuverml.metrics import (
    ConfusionMatrix,
    accuracy,
    averaged,
    class_metrics,
    confusion,
    f1,
    f1_from_matrix,
    fpr,
    precision,
    recall,
    specificity,
)


def _count(truth: list[int], pred: list[int], t: int, p: int) -> int:
    return sum(1 for a, b in zip(truth, pred) if a == t and b == p)


class TestConfusion:
    """Test confusion counting."""

    def test_counts_match_brute_force(self) -> None:
        rng = np.random.default_rng(61)
        for _ in range(500):
            n = int(rng.integers(1, 60))
            truth = rng.integers(0, 2, size=n).tolist()
            pred = rng.integers(0, 2, size=n).tolist()

            cm = confusion(truth, pred)

            assert cm == ConfusionMatrix(
                tp=_count(truth, pred, 1, 1),
                fp=_count(truth, pred, 0, 1),
                tn=_count(truth, pred, 0, 0),
                fn=_count(truth, pred, 1, 0),
            )
            assert cm.total == n
            assert accuracy(cm) == pytest.approx(
                sum(a == b for a, b in zip(truth, pred)) / n
            )

    def test_length_mismatch(self) -> None:
        with pytest.raises(LengthMismatch):
            confusion([0, 1], [0])

    def test_empty_input(self) -> None:
        with pytest.raises(EmptyInput):
            confusion([], [])

    def test_non_binary_labels(self) -> None:
        with pytest.raises(LabelDomainError):
            confusion([0, 2], [0, 1])

    def test_swapped_view(self) -> None:
        cm = ConfusionMatrix(tp=5, fp=2, tn=7, fn=1)
        assert cm.swapped() == ConfusionMatrix(tp=7, fp=1, tn=5, fn=2)
        assert cm.supports == (9, 6)


class TestRatios:
    """Test precision, recall and the rates derived from them."""

    def test_random_matrices_match_definitions(self) -> None:
        rng = np.random.default_rng(62)
        for _ in range(500):
            tp, fp, tn, fn = (int(v) for v in rng.integers(0, 20, size=4))
            cm = ConfusionMatrix(tp, fp, tn, fn)

            expected_p = tp / (tp + fp) if tp + fp else 0.0
            expected_r = tp / (tp + fn) if tp + fn else 0.0
            assert precision(cm).value == pytest.approx(expected_p)
            assert recall(cm).value == pytest.approx(expected_r)
            assert precision(cm, 0).value == pytest.approx(
                tn / (tn + fn) if tn + fn else 0.0
            )
            assert recall(cm, 0).value == pytest.approx(
                tn / (tn + fp) if tn + fp else 0.0
            )
            assert f1(expected_p, expected_r) == pytest.approx(
                f1_from_matrix(cm), abs=1e-12
            )
            assert f1(precision(cm, 0).value, recall(cm, 0).value) == pytest.approx(
                f1_from_matrix(cm, 0), abs=1e-12
            )

    def test_zero_denominator_is_flagged(self) -> None:
        cm = ConfusionMatrix(tp=0, fp=0, tn=4, fn=3)
        assert precision(cm).degenerate
        assert precision(cm).value == 0.0
        assert not recall(cm).degenerate

    def test_fpr_without_negatives_is_one(self) -> None:
        cm = ConfusionMatrix(tp=3, fp=0, tn=0, fn=1)
        assert specificity(cm).degenerate
        assert fpr(cm) == (1.0, True)

    def test_fpr_complements_specificity(self) -> None:
        cm = ConfusionMatrix(tp=3, fp=1, tn=3, fn=1)
        assert specificity(cm).value == 0.75
        assert fpr(cm).value == 0.25

    def test_f1_of_zero_scores(self) -> None:
        assert f1(0.0, 0.0) == 0.0
        assert f1_from_matrix(ConfusionMatrix(0, 0, 5, 0)) == 0.0


class TestAveraging:
    def test_macro_is_plain_mean(self) -> None:
        assert averaged([0.2, 0.8], [10, 30], "macro") == 0.5

    def test_weighted_uses_supports(self) -> None:
        assert averaged([0.2, 0.8], [10, 30], "weighted") == pytest.approx(0.65)

    def test_equal_supports_make_weighted_equal_macro(self) -> None:
        rng = np.random.default_rng(81)
        for _ in range(200):
            per_class = rng.uniform(0.0, 1.0, size=2).tolist()
            support = int(rng.integers(1, 1000))
            assert averaged(per_class, [support, support], "weighted") == (
                pytest.approx(averaged(per_class, [support, support], "macro"))
            )

    def test_zero_supports(self) -> None:
        with pytest.raises(ZeroSupport):
            averaged([0.5, 0.5], [0, 0], "weighted")

    def test_unknown_mode(self) -> None:
        with pytest.raises(ValueError, match="averaging mode"):
            averaged([0.5, 0.5], [1, 1], "micro")  # type: ignore[arg-type]

    def test_class_metrics(self) -> None:
        negative, positive = class_metrics(ConfusionMatrix(tp=6, fp=2, tn=8, fn=4))
        assert positive.precision == 0.75
        assert positive.recall == 0.6
        assert positive.support == 10
        assert negative.precision == pytest.approx(8 / 12)
        assert negative.recall == 0.8
        assert negative.support == 10
