# ABOUTME: Unit tests for ROC curves, AUC and the ROC chart and table
# ABOUTME: AUC is checked against pairwise ranking on heavily tied scores

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from maneuverml.errors import (
    EmptyCurveSet,
    EmptyInput,
    InvalidCurve,
    LengthMismatch,
    SingleClassTruth,
)
from maneuverml.metrics import (
    ROC_CSV_HEADER,
    RocCurve,
    auc,
    render_roc,
    roc,
    roc_auc,
    write_roc,
)


def _pairwise_auc(truth: np.ndarray, scores: np.ndarray) -> float:
    positives = scores[truth == 1]
    negatives = scores[truth == 0]
    wins = 0.0
    for p in positives:
        for n in negatives:
            wins += 1.0 if p > n else 0.5 if p == n else 0.0
    return wins / (len(positives) * len(negatives))


def _random_case(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    n = int(rng.integers(2, 201))
    truth = rng.integers(0, 2, size=n)
    truth[0], truth[1] = 0, 1
    scores = rng.integers(0, 6, size=n) / 5.0
    return truth, scores


class TestRoc:
    """Test curve construction."""

    def test_auc_matches_pair_counting(self) -> None:
        rng = np.random.default_rng(71)
        for _ in range(100):
            truth, scores = _random_case(rng)
            assert roc_auc(truth, scores) == pytest.approx(
                _pairwise_auc(truth, scores), abs=1e-12
            )

    @pytest.mark.parametrize(
        "transform",
        [np.exp, np.arctan, lambda s: 3.0 * s**3 + s - 7.0],
        ids=["exp", "arctan", "cubic"],
    )
    def test_auc_depends_only_on_score_order(
        self, transform: Callable[[np.ndarray], np.ndarray]
    ) -> None:
        rng = np.random.default_rng(75)
        for _ in range(100):
            truth, scores = _random_case(rng)
            scores = scores + rng.normal(0.0, 0.05, size=len(scores)) * (
                rng.uniform(size=len(scores)) < 0.5
            )
            assert roc_auc(truth, transform(scores)) == pytest.approx(
                roc_auc(truth, scores), abs=1e-12
            )

    def test_curve_shape(self) -> None:
        rng = np.random.default_rng(72)
        for _ in range(50):
            truth, scores = _random_case(rng)
            curve = roc(truth, scores)
            assert curve.points[0][:2] == (0.0, 0.0)
            assert curve.points[-1][:2] == (1.0, 1.0)
            assert np.all(np.diff(curve.fprs) >= 0)
            assert np.all(np.diff(curve.tprs) >= 0)
            assert len(curve) == len(np.unique(scores)) + 1

    def test_sentinel_sits_above_the_top_score(self) -> None:
        curve = roc([0, 1, 1], [0.25, 0.75, 0.5])
        thresholds = [p.threshold for p in curve.points]
        assert thresholds == [1.75, 0.75, 0.5, 0.25]

    def test_sentinel_is_infinite_for_huge_scores(self) -> None:
        curve = roc([0, 1], [0.0, 1e300])
        assert curve.points[0].threshold == float("inf")

    def test_perfect_ranking(self) -> None:
        curve = roc([0, 0, 1, 1], [0.1, 0.2, 0.8, 0.9])
        assert auc(curve) == 1.0
        assert curve.points[2][:2] == (0.0, 1.0)

    def test_all_tied_scores_give_the_diagonal(self) -> None:
        curve = roc([0, 1, 0, 1], [0.5, 0.5, 0.5, 0.5])
        assert [p[:2] for p in curve.points] == [(0.0, 0.0), (1.0, 1.0)]
        assert auc(curve) == 0.5

    def test_single_class_truth(self) -> None:
        with pytest.raises(SingleClassTruth):
            roc([1, 1, 1], [0.1, 0.5, 0.9])

    def test_length_mismatch(self) -> None:
        with pytest.raises(LengthMismatch):
            roc([0, 1], [0.5])

    def test_empty_input(self) -> None:
        with pytest.raises(EmptyInput):
            roc([], [])

    def test_non_finite_scores(self) -> None:
        with pytest.raises(InvalidCurve):
            roc([0, 1], [0.5, float("nan")])

    def test_curve_validation(self) -> None:
        with pytest.raises(InvalidCurve):
            RocCurve(points=((0.0, 0.0, 2.0), (0.5, 0.4, 1.0), (0.4, 1.0, 0.5)))
        with pytest.raises(InvalidCurve):
            RocCurve(points=((0.0, 0.0, 1.0),))


class TestRenderRoc:
    """Test the ROC chart and table."""

    @pytest.fixture
    def curves(self) -> list[tuple[str, RocCurve]]:
        return [
            ("gbdt", roc([0, 0, 1, 1], [0.125, 0.5, 0.375, 0.75])),
            ("logreg", roc([0, 0, 1, 1], [0.3, 0.2, 0.6, 0.7])),
        ]

    def test_output_is_deterministic(self, curves: list) -> None:
        assert render_roc(curves) == render_roc(list(curves))

    def test_svg_draws_each_curve_and_the_diagonal(self, curves: list) -> None:
        svg = render_roc(curves).svg
        assert svg.startswith("<?xml")
        assert svg.count('class="roc-curve"') == 2
        assert 'data-algorithm="gbdt"' in svg
        assert 'class="chance"' in svg
        assert "stroke-dasharray" in svg
        assert "AUC 0.7500" in svg
        assert "AUC 1.0000" in svg

    def test_csv_has_one_row_per_point(self, curves: list) -> None:
        lines = render_roc(curves).csv.splitlines()
        assert lines[0] == ROC_CSV_HEADER
        assert len(lines) == 1 + sum(len(c) for _, c in curves)
        assert lines[1].startswith("gbdt,1.75,0.0,0.0")

    def test_no_curves(self) -> None:
        with pytest.raises(EmptyCurveSet):
            render_roc([])

    def test_write_roc(self, curves: list, tmp_path: Path) -> None:
        artifacts = render_roc(curves)
        svg_path, csv_path = write_roc(artifacts, tmp_path / "report")
        assert svg_path.name == "roc.svg"
        assert csv_path.read_text(encoding="utf-8") == artifacts.csv
