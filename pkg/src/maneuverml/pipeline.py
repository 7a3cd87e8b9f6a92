# ABOUTME: Pipeline stages behind the CLI commands, one function per stage
# ABOUTME: Stages hand off through the files named in the paths configuration

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from maneuverml.classifiers.serialization import (
    load_model,
    read_model_document,
    write_model,
)
from maneuverml.classifiers.training import fit_classifier, training_curve
from maneuverml.constants import REPORT_FILE, TRAJECTORY_GLOB, model_file_name
from maneuverml.dataset import build_dataset, read_csv, split, split_indices, write_csv
from maneuverml.errors import ConfigError, ManeuverError, MissingModel, SplitMismatch
from maneuverml.features import extract_all, maneuver_label
from maneuverml.metrics import build_report, render_roc, write_report, write_roc
from maneuverml.trajectory import (
    corpus_seeds,
    generate_synthetic,
    load_corpus,
    write_trajectory,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping, Sequence
    from pathlib import Path

    from maneuverml.classifiers.interfaces import (
        Classifier,
        ModelDocument,
        TrainedModel,
    )
    from maneuverml.config.models import RunConfig
    from maneuverml.dataset import Dataset, SplitSpec
    from maneuverml.metrics import MetricsReport

__all__ = [
    "EvaluationResult",
    "FeatureStatistics",
    "SynthResult",
    "TrainResult",
    "ValidationCheck",
    "build_dataset_file",
    "evaluate_models",
    "feature_statistics",
    "load_models",
    "synthesize_corpus",
    "train_models",
    "validate_run",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SynthResult:
    directory: Path
    paths: tuple[Path, ...]
    labels: tuple[int, ...]

    @property
    def maneuvers(self) -> int:
        return sum(self.labels)

    @property
    def cruises(self) -> int:
        return len(self.labels) - self.maneuvers


@dataclass(frozen=True)
class FeatureStatistics:
    name: str
    minimum: float
    mean: float
    maximum: float
    std: float


@dataclass(frozen=True)
class TrainResult:
    model: TrainedModel
    path: Path
    train_rows: int

    @property
    def curve(self) -> tuple[float, ...]:
        return training_curve(self.model)


@dataclass(frozen=True)
class EvaluationResult:
    report: MetricsReport
    report_path: Path
    roc_svg: Path
    roc_csv: Path


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    detail: str


def synthesize_corpus(config: RunConfig, out_dir: Path, count: int) -> SynthResult:
    """
    Write ``count`` synthetic trajectories as ``traj-NNNNN.csv``.

    Per-file seeds derive from ``synth.seed``, so the corpus is a pure
    function of the configuration and count. Labels use the feature
    configuration's maneuver threshold.

    Raises:
        ConfigError: If count is below 1
    """
    if count < 1:
        msg = f"count must be >= 1, got {count}"
        raise ConfigError(msg)

    out_dir.mkdir(parents=True, exist_ok=True)
    width = max(5, len(str(count - 1)))
    paths: list[Path] = []
    labels: list[int] = []
    for index, seed in enumerate(corpus_seeds(config.synth.seed, count)):
        vehicle_id = f"traj-{index:0{width}d}"
        trajectory = generate_synthetic(config.synth.copy(seed=seed), vehicle_id)
        path = out_dir / f"{vehicle_id}.csv"
        write_trajectory(trajectory, path)
        paths.append(path)
        labels.append(maneuver_label(trajectory, config.feature))

    result = SynthResult(directory=out_dir, paths=tuple(paths), labels=tuple(labels))
    logger.info(
        "Wrote %d synthetic trajectories to %s (%d maneuver, %d cruise)",
        count,
        out_dir,
        result.maneuvers,
        result.cruises,
    )
    return result


def build_dataset_file(config: RunConfig) -> Dataset:
    """Corpus directory to feature dataset CSV; returns the dataset written."""
    trajectories = load_corpus(
        config.paths.corpus_dir,
        strict=config.corpus.strict,
        workers=config.corpus.workers,
    )
    dataset = build_dataset(extract_all(trajectories, config.feature))
    config.paths.dataset_file.parent.mkdir(parents=True, exist_ok=True)
    write_csv(dataset, config.paths.dataset_file)
    logger.info(
        "Wrote %d dataset rows to %s", dataset.n_rows, config.paths.dataset_file
    )
    return dataset


def feature_statistics(dataset: Dataset) -> list[FeatureStatistics]:
    """Per-column minimum, mean, maximum and population standard deviation."""
    rows = dataset.rows
    return [
        FeatureStatistics(
            name=name,
            minimum=float(np.min(rows[:, column])),
            mean=float(np.mean(rows[:, column])),
            maximum=float(np.max(rows[:, column])),
            std=float(np.std(rows[:, column])),
        )
        for column, name in enumerate(dataset.feature_names)
    ]


def train_models(
    config: RunConfig, classifiers: Sequence[Classifier]
) -> list[TrainResult]:
    """
    Split the dataset, fit every classifier on the training side and save it.

    Classifiers are fitted in the order given; every one sees the same split.
    """
    dataset = read_csv(config.paths.dataset_file)
    train, test = split(dataset, config.split)
    logger.info(
        "Split %d rows into %d train / %d test",
        dataset.n_rows,
        train.n_rows,
        test.n_rows,
    )

    results: list[TrainResult] = []
    for classifier in classifiers:
        logger.info("Fitting %s on %d rows", classifier.name, train.n_rows)
        model = fit_classifier(classifier, train, config)
        path = write_model(model, config.paths.model_dir, config.split)
        results.append(TrainResult(model=model, path=path, train_rows=train.n_rows))
    return results


def _check_training_split(
    document: Mapping[str, Any], spec: SplitSpec, path: Path
) -> None:
    recorded = document.get("split")
    if recorded is None:
        msg = f"{path.name} records no training split; run train again"
        raise SplitMismatch(msg)
    if recorded != spec.to_document():
        msg = (
            f"{path.name} was trained with split {recorded}, but the configured "
            f"split is {spec.to_document()}; the test rows would overlap training"
        )
        raise SplitMismatch(msg)


def _read_checked(
    path: Path,
    loaders: Mapping[str, Callable[[ModelDocument], TrainedModel]],
    split_spec: SplitSpec | None,
) -> TrainedModel:
    document = read_model_document(path)
    if split_spec is not None:
        _check_training_split(document, split_spec, path)
    return load_model(document, loaders, path.name)


def load_models(
    model_dir: Path,
    loaders: Mapping[str, Callable[[ModelDocument], TrainedModel]],
    algorithms: Sequence[str] | None = None,
    split_spec: SplitSpec | None = None,
) -> list[TrainedModel]:
    """
    Read saved models from a directory.

    With ``algorithms`` unset, every known algorithm with a model file is read
    and the rest are skipped. Named algorithms must all be present. With
    ``split_spec`` set, every model must record that same training split.

    Raises:
        MissingModel: If a named model is absent, or no model at all is found
        SplitMismatch: If a model was trained on another split
    """
    if algorithms is not None:
        return [
            _read_checked(model_dir / model_file_name(name), loaders, split_spec)
            for name in algorithms
        ]

    models = [
        _read_checked(path, loaders, split_spec)
        for name in loaders
        if (path := model_dir / model_file_name(name)).is_file()
    ]
    if not models:
        msg = f"no trained models found in {model_dir}; run train first"
        raise MissingModel(msg)
    return models


def evaluate_models(
    config: RunConfig,
    loaders: Mapping[str, Callable[[ModelDocument], TrainedModel]],
    algorithms: Sequence[str] | None = None,
) -> EvaluationResult:
    """
    Score saved models on the test split and write the report and ROC files.

    The test split is recomputed from the dataset with the configured split
    settings. Every model must record that same split, so no test row was
    seen in training.
    """
    models = load_models(
        config.paths.model_dir, loaders, algorithms, split_spec=config.split
    )
    dataset = read_csv(config.paths.dataset_file)
    _, test = split(dataset, config.split)

    report = build_report(models, test, config.decision)
    report_dir = config.paths.report_dir
    report_path = report_dir / REPORT_FILE
    write_report(report, report_path)
    artifacts = render_roc([(r.algorithm, r.roc) for r in report.algorithms])
    roc_svg, roc_csv = write_roc(artifacts, report_dir)
    return EvaluationResult(
        report=report, report_path=report_path, roc_svg=roc_svg, roc_csv=roc_csv
    )


def _check(name: str, passed: bool, detail: str) -> ValidationCheck:
    log = logger.debug if passed else logger.warning
    log("Validation %s: %s (%s)", name, "passed" if passed else "failed", detail)
    return ValidationCheck(name=name, passed=passed, detail=detail)


def validate_run(
    config: RunConfig, classifiers: Sequence[Classifier]
) -> list[ValidationCheck]:
    """
    Dry-run the configuration and corpus without training anything.

    Checks stop at the first failure that makes later checks meaningless.
    """
    checks = [
        _check(
            "configuration",
            True,
            f"maneuver threshold {config.feature.maneuver_threshold:g}, "
            f"score threshold {config.decision.score_threshold:g}",
        ),
        _check(
            "classifiers",
            bool(classifiers),
            ", ".join(c.name for c in classifiers) or "none registered",
        ),
    ]

    corpus_dir = config.paths.corpus_dir
    if not corpus_dir.is_dir():
        checks.append(_check("corpus directory", False, f"{corpus_dir} not found"))
        return checks
    n_files = len(list(corpus_dir.glob(TRAJECTORY_GLOB)))
    checks.append(_check("corpus directory", n_files > 0, f"{n_files} file(s)"))

    trajectories = load_corpus(corpus_dir, strict=False, workers=config.corpus.workers)
    checks.append(
        _check(
            "corpus files",
            bool(trajectories) and len(trajectories) == n_files,
            f"{len(trajectories)} of {n_files} parsed",
        )
    )
    if not trajectories:
        return checks

    try:
        records = extract_all(trajectories, config.feature)
        dataset = build_dataset(records)
    except ManeuverError as e:
        checks.append(_check("features", False, f"{e.code}: {e}"))
        return checks
    checks.append(_check("features", True, f"{dataset.n_rows} row(s)"))

    negatives, positives = dataset.class_counts()
    checks.append(
        _check(
            "label balance",
            negatives > 0 and positives > 0,
            f"{positives} maneuver / {negatives} cruise",
        )
    )

    try:
        train_idx, test_idx = split_indices(dataset.labels, config.split)
    except ManeuverError as e:
        checks.append(_check("split", False, f"{e.code}: {e}"))
        return checks
    checks.append(
        _check("split", True, f"{len(train_idx)} train / {len(test_idx)} test")
    )
    if any(c.name == "knn" for c in classifiers):
        checks.append(
            _check(
                "knn neighbours",
                config.knn.k <= len(train_idx),
                f"k={config.knn.k}, {len(train_idx)} training rows",
            )
        )
    return checks
