# ABOUTME: Assembles per-model metric reports and their versioned YAML document
# ABOUTME: Also loads the published reference results shipped with the package

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any

import yaml

from maneuverml.classifiers.decision import predict_labels, predict_scores
from maneuverml.constants import SCHEMA_VERSION
from maneuverml.errors import EmptyInput

from .models import AlgorithmReport, MetricsReport
from .roc import auc, roc
from .scores import (
    accuracy,
    averaged,
    class_metrics,
    confusion,
    fpr,
    precision,
    recall,
    specificity,
)

if TYPE_CHECKING:
    from collections.abc import Sequence

    from maneuverml.classifiers.decision import DecisionConfig
    from maneuverml.classifiers.interfaces import TrainedModel
    from maneuverml.dataset.models import Dataset

__all__ = [
    "REFERENCE_FILE",
    "build_report",
    "dump_report",
    "evaluate_model",
    "load_reference_results",
    "percent",
    "report_document",
    "write_report",
]

logger = logging.getLogger(__name__)

REFERENCE_FILE = Path(__file__).parent / "reference.yaml"
# Decimal places kept in report documents
REPORT_DECIMALS = 4


def evaluate_model(
    model: TrainedModel, test: Dataset, config: DecisionConfig
) -> AlgorithmReport:
    """
    Compute every metric of one model on a test split.

    Raises:
        EmptyInput: If the test split has no rows
        SingleClassTruth: If the test split holds one class only
    """
    if test.n_rows == 0:
        msg = "cannot evaluate on an empty test split"
        raise EmptyInput(msg)
    scores = predict_scores(model, test.rows)
    labels = predict_labels(scores, config)
    cm = confusion(test.labels, labels)
    supports = cm.supports
    per_class = class_metrics(cm)

    degenerate = [
        name
        for name, ratio in (
            ("precision_0", precision(cm, 0)),
            ("precision_1", precision(cm, 1)),
            ("recall_0", recall(cm, 0)),
            ("recall_1", recall(cm, 1)),
            ("specificity", specificity(cm)),
        )
        if ratio.degenerate
    ]
    if degenerate:
        logger.warning(
            "%s: zero denominator in %s", model.algorithm, ", ".join(degenerate)
        )

    precisions = [c.precision for c in per_class]
    recalls = [c.recall for c in per_class]
    f1s = [c.f1 for c in per_class]
    curve = roc(test.labels, scores)
    return AlgorithmReport(
        algorithm=model.algorithm,
        confusion=cm,
        accuracy=accuracy(cm),
        precision_macro=averaged(precisions, supports, "macro"),
        precision_weighted=averaged(precisions, supports, "weighted"),
        recall_macro=averaged(recalls, supports, "macro"),
        recall_weighted=averaged(recalls, supports, "weighted"),
        f1=per_class[1].f1,
        f1_macro=averaged(f1s, supports, "macro"),
        f1_weighted=averaged(f1s, supports, "weighted"),
        specificity=specificity(cm).value,
        fpr=fpr(cm).value,
        auc=auc(curve),
        roc=curve,
        per_class=per_class,
        degenerate=tuple(degenerate),
    )


def build_report(
    models: Sequence[TrainedModel], test: Dataset, config: DecisionConfig
) -> MetricsReport:
    """
    Evaluate every model on the same test split.

    Reports are ordered by algorithm name, whatever the input order.
    """
    reports = sorted(
        (evaluate_model(model, test, config) for model in models),
        key=lambda r: r.algorithm,
    )
    negatives, positives = test.class_counts()
    logger.info("Evaluated %d model(s) on %d test rows", len(reports), test.n_rows)
    return MetricsReport(
        score_threshold=config.score_threshold,
        test_rows=test.n_rows,
        supports=(negatives, positives),
        algorithms=tuple(reports),
    )


def _rounded(value: float) -> float:
    return round(float(value), REPORT_DECIMALS)


def _algorithm_document(report: AlgorithmReport) -> dict[str, Any]:
    cm = report.confusion
    return {
        "algorithm": report.algorithm,
        "confusion": {"tp": cm.tp, "fp": cm.fp, "tn": cm.tn, "fn": cm.fn},
        **{name: _rounded(value) for name, value in report.scalars().items()},
        "per_class": {
            str(cls): {
                "precision": _rounded(metrics.precision),
                "recall": _rounded(metrics.recall),
                "f1": _rounded(metrics.f1),
                "support": metrics.support,
            }
            for cls, metrics in enumerate(report.per_class)
        },
        "degenerate": list(report.degenerate),
        "roc_points": len(report.roc),
    }


def report_document(report: MetricsReport) -> dict[str, Any]:
    """Versioned document of a report with scalars rounded to 4 decimals."""
    return {
        "schema_version": SCHEMA_VERSION,
        "score_threshold": float(report.score_threshold),
        "test_rows": report.test_rows,
        "supports": {"0": report.supports[0], "1": report.supports[1]},
        "algorithms": [_algorithm_document(r) for r in report.algorithms],
    }


def dump_report(report: MetricsReport) -> str:
    return yaml.safe_dump(report_document(report), sort_keys=False)


def write_report(report: MetricsReport, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_report(report), encoding="utf-8", newline="\n")
    logger.info("Wrote metrics report to %s", path)


def load_reference_results() -> dict[str, dict[str, Any]]:
    """
    Published reference results keyed by algorithm tag.

    Each entry has a display ``label`` and fractional ``precision_macro``,
    ``precision_weighted``, ``recall_macro``, ``recall_weighted`` and ``f1``.
    These are documentation only; the corpus behind them is unavailable.
    """
    document = yaml.safe_load(REFERENCE_FILE.read_text(encoding="utf-8"))
    return {
        entry["algorithm"]: {k: v for k, v in entry.items() if k != "algorithm"}
        for entry in document["results"]
    }


def percent(value: float) -> str:
    """Whole-number percentage as used in human-readable summaries."""
    return f"{value * 100:.0f}%"
