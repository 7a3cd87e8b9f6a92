# ABOUTME: Metrics package: confusion-based scores, ROC/AUC, reports and ROC rendering
# ABOUTME: Every operation is pure apart from the explicit write_* helpers

from .models import (
    AlgorithmReport,
    ClassMetrics,
    ConfusionMatrix,
    MetricsReport,
    Ratio,
    RocCurve,
    RocPoint,
)
from .render import ROC_CSV_HEADER, RocArtifacts, render_roc, write_roc
from .report import (
    build_report,
    dump_report,
    evaluate_model,
    load_reference_results,
    percent,
    report_document,
    write_report,
)
from .roc import auc, roc, roc_auc
from .scores import (
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

__all__ = [
    "ROC_CSV_HEADER",
    "AlgorithmReport",
    "ClassMetrics",
    "ConfusionMatrix",
    "MetricsReport",
    "Ratio",
    "RocArtifacts",
    "RocCurve",
    "RocPoint",
    "accuracy",
    "auc",
    "averaged",
    "build_report",
    "class_metrics",
    "confusion",
    "dump_report",
    "evaluate_model",
    "f1",
    "f1_from_matrix",
    "fpr",
    "load_reference_results",
    "percent",
    "precision",
    "recall",
    "render_roc",
    "report_document",
    "roc",
    "roc_auc",
    "specificity",
    "write_report",
    "write_roc",
]
