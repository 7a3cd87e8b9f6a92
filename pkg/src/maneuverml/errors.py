# ABOUTME: Exception hierarchy shared by every maneuverml module
# ABOUTME: Each error carries a stable code and the CLI exit status it maps to

from __future__ import annotations

__all__ = [
    "BadK",
    "ConfigError",
    "CorpusFileError",
    "CorpusNotFound",
    "DatasetError",
    "DegenerateDirection",
    "DegenerateSplit",
    "DimensionMismatch",
    "DivergenceDetected",
    "EmptyCorpus",
    "EmptyCurveSet",
    "EmptyInput",
    "FeatureError",
    "InvalidCurve",
    "LabelDomainError",
    "LengthMismatch",
    "MalformedRow",
    "ManeuverError",
    "MetricsError",
    "MissingDataset",
    "MissingModel",
    "ModelError",
    "NonFiniteFeature",
    "NonMonotonicTime",
    "ParseError",
    "RangeViolation",
    "SchemaError",
    "SchemaVersionMismatch",
    "SeriesTooShort",
    "SingleClassTrain",
    "SingleClassTruth",
    "SplitMismatch",
    "TooFewClassRows",
    "TooShort",
    "TrajectoryError",
    "UnknownAlgorithmTag",
    "ValidationFailed",
    "ZeroSupport",
]

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_MISSING = 3


class ManeuverError(Exception):
    """Base class for all errors raised by maneuverml.

    Attributes:
        code: Stable machine-readable identifier printed by the CLI
        exit_code: Process exit status used when the error reaches the CLI
    """

    code = "MANEUVER_ERROR"
    exit_code = EXIT_FAILURE


class ConfigError(ManeuverError):
    code = "CONFIG"
    exit_code = EXIT_USAGE


# Parsing


class ParseError(ManeuverError):
    """An input file line could not be accepted."""

    code = "PARSE"

    def __init__(self, line: int | None, detail: str) -> None:
        self.line = line
        self.detail = detail
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{detail}")


class MalformedRow(ParseError):
    code = "MALFORMED_ROW"


class SchemaError(ParseError):
    code = "SCHEMA"


class LabelDomainError(ParseError):
    code = "LABEL_DOMAIN"


# Trajectories


class TrajectoryError(ParseError):
    code = "TRAJECTORY"


class RangeViolation(TrajectoryError):
    code = "RANGE_VIOLATION"


class NonMonotonicTime(TrajectoryError):
    code = "NON_MONOTONIC_TIME"


class TooShort(TrajectoryError):
    code = "TOO_SHORT"


class CorpusFileError(ManeuverError):
    """A corpus file failed to parse; wraps the underlying parse error."""

    code = "CORPUS_FILE"

    def __init__(self, filename: str, cause: ManeuverError) -> None:
        self.filename = filename
        self.cause = cause
        super().__init__(f"{filename}: {cause.code}: {cause}")


class CorpusNotFound(ManeuverError):
    code = "CORPUS_NOT_FOUND"
    exit_code = EXIT_MISSING


# Features


class FeatureError(ManeuverError):
    code = "FEATURE"


class SeriesTooShort(FeatureError):
    code = "SERIES_TOO_SHORT"

    def __init__(self, feature: str, length: int, required: int) -> None:
        self.feature = feature
        self.length = length
        self.required = required
        super().__init__(
            f"{feature}: series has {length} sample(s), needs at least {required}"
        )


# Datasets


class DatasetError(ManeuverError):
    code = "DATASET"


class EmptyCorpus(DatasetError):
    code = "EMPTY_CORPUS"


class NonFiniteFeature(DatasetError):
    code = "NON_FINITE_FEATURE"

    def __init__(self, record_id: str, column: str) -> None:
        self.record_id = record_id
        self.column = column
        super().__init__(f"record '{record_id}' has a non-finite {column}")


class DegenerateSplit(DatasetError):
    code = "DEGENERATE_SPLIT"


class MissingDataset(DatasetError):
    code = "MISSING_DATASET"
    exit_code = EXIT_MISSING


# Models


class ModelError(ManeuverError):
    code = "MODEL"


class SingleClassTrain(ModelError):
    code = "SINGLE_CLASS_TRAIN"


class TooFewClassRows(ModelError):
    code = "TOO_FEW_CLASS_ROWS"


class DivergenceDetected(ModelError):
    code = "DIVERGENCE"


class DimensionMismatch(ModelError):
    code = "DIMENSION_MISMATCH"


class BadK(ModelError):
    code = "BAD_K"


class DegenerateDirection(ModelError):
    code = "DEGENERATE_DIRECTION"


class SchemaVersionMismatch(ModelError):
    code = "SCHEMA_VERSION"


class UnknownAlgorithmTag(ModelError):
    code = "UNKNOWN_ALGORITHM"


class MissingModel(ModelError):
    code = "MISSING_MODEL"
    exit_code = EXIT_MISSING


class SplitMismatch(ConfigError):
    """A saved model was trained on a different split than the one configured."""

    code = "SPLIT_MISMATCH"


# Metrics


class MetricsError(ManeuverError):
    code = "METRICS"


class LengthMismatch(MetricsError):
    code = "LENGTH_MISMATCH"


class EmptyInput(MetricsError):
    code = "EMPTY_INPUT"


class ZeroSupport(MetricsError):
    code = "ZERO_SUPPORT"


class SingleClassTruth(MetricsError):
    code = "SINGLE_CLASS_TRUTH"


class EmptyCurveSet(MetricsError):
    code = "EMPTY_CURVE_SET"


class InvalidCurve(MetricsError):
    code = "INVALID_CURVE"


# Commands


class ValidationFailed(ManeuverError):
    """One or more dry-run checks of the validate command failed."""

    code = "VALIDATION_FAILED"
