# ABOUTME: Run configuration record assembled from the merged YAML sections
# ABOUTME: Validates every block, coerces scalar types and rejects unknown keys

from __future__ import annotations

import math
from dataclasses import MISSING, dataclass, field, fields, replace
from pathlib import Path
from typing import (
    Any,
    Dict,
    Literal,
    Protocol,
    get_args,
    get_origin,
    get_type_hints,
    runtime_checkable,
)

from maneuverml.classifiers.decision import DecisionConfig
from maneuverml.classifiers.gbdt import GbdtParams
from maneuverml.classifiers.knn import KnnParams
from maneuverml.classifiers.lda import LdaParams
from maneuverml.classifiers.logreg import LogRegParams
from maneuverml.dataset.models import SplitSpec
from maneuverml.errors import ConfigError
from maneuverml.features.models import FeatureConfig
from maneuverml.trajectory.models import SynthConfig

__all__ = [
    "ConfigurationDict",
    "ConfigurationProvider",
    "CorpusConfig",
    "LoggingConfig",
    "PathsConfig",
    "RunConfig",
]

# Configuration dictionary type for YAML data
ConfigurationDict = Dict[str, Any]

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@runtime_checkable
class ConfigurationProvider(Protocol):
    """
    Protocol for plugins that contribute default configuration.

    Providers return raw YAML text; the configuration factory parses and
    merges every provider's contribution in registration order.
    """

    def get_default_configuration(self) -> str:
        """YAML text of this provider's defaults."""
        ...

    def get_configuration_id(self) -> str:
        """Identifier used in log messages and error reports."""
        ...


@dataclass(frozen=True)
class PathsConfig:
    """Artifact locations handed from one pipeline stage to the next."""

    corpus_dir: Path = Path("data/corpus")
    dataset_file: Path = Path("data/dataset.csv")
    model_dir: Path = Path("data/models")
    report_dir: Path = Path("data/report")

    def __post_init__(self) -> None:
        for f in fields(self):
            object.__setattr__(self, f.name, Path(getattr(self, f.name)).expanduser())


@dataclass(frozen=True)
class CorpusConfig:
    """
    Corpus loading behaviour.

    Attributes:
        strict: Abort on the first unreadable file instead of skipping it
        workers: Parser threads; 1 parses sequentially
    """

    strict: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        if self.workers < 1:
            msg = f"corpus.workers must be >= 1, got {self.workers}"
            raise ConfigError(msg)


@dataclass(frozen=True)
class LoggingConfig:
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    name: str = "maneuverml"

    def __post_init__(self) -> None:
        level = self.level.upper()
        if level not in _LOG_LEVELS:
            msg = f"logging.level must be one of {_LOG_LEVELS}, got {self.level!r}"
            raise ConfigError(msg)
        object.__setattr__(self, "level", level)


# Section name to record type, in document order
_SECTIONS: dict[str, type] = {
    "feature": FeatureConfig,
    "split": SplitSpec,
    "decision": DecisionConfig,
    "logreg": LogRegParams,
    "knn": KnnParams,
    "lda": LdaParams,
    "gbdt": GbdtParams,
    "synth": SynthConfig,
    "paths": PathsConfig,
    "corpus": CorpusConfig,
    "logging": LoggingConfig,
}


def _coerce_float(value: Any, path: str) -> float:
    # PyYAML reads exponent literals without a dot (1e12) as strings
    if isinstance(value, bool):
        msg = f"{path} must be a number, got {value!r}"
        raise ConfigError(msg)
    try:
        number = float(value)
    except (TypeError, ValueError):
        msg = f"{path} must be a number, got {value!r}"
        raise ConfigError(msg) from None
    if math.isnan(number):
        msg = f"{path} must not be NaN"
        raise ConfigError(msg)
    return number


def _coerce_int(value: Any, path: str) -> int:
    if isinstance(value, bool):
        msg = f"{path} must be an integer, got {value!r}"
        raise ConfigError(msg)
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(value, str) and value.strip().lstrip("+").isdigit():
        return int(value)
    msg = f"{path} must be an integer, got {value!r}"
    raise ConfigError(msg)


def _coerce(value: Any, hint: Any, path: str) -> Any:
    """Convert a YAML value to the declared field type."""
    origin = get_origin(hint)
    if hint is float:
        return _coerce_float(value, path)
    if hint is int:
        return _coerce_int(value, path)
    if hint is bool:
        if not isinstance(value, bool):
            msg = f"{path} must be true or false, got {value!r}"
            raise ConfigError(msg)
        return value
    if hint is str or origin is Literal:
        if not isinstance(value, str):
            msg = f"{path} must be a string, got {value!r}"
            raise ConfigError(msg)
        return value
    if hint is Path:
        if not isinstance(value, (str, Path)):
            msg = f"{path} must be a path, got {value!r}"
            raise ConfigError(msg)
        return Path(value)
    if origin is tuple:
        item_types = get_args(hint)
        if not isinstance(value, (list, tuple)) or len(value) != len(item_types):
            msg = f"{path} must be a list of {len(item_types)} values, got {value!r}"
            raise ConfigError(msg)
        pairs = zip(value, item_types, strict=True)
        return tuple(
            _coerce(item, item_type, f"{path}[{i}]")
            for i, (item, item_type) in enumerate(pairs)
        )
    return value


def _build_section(name: str, record_type: type, data: Any) -> Any:
    """Validate one section mapping and construct its record."""
    if data is None:
        data = {}
    if not isinstance(data, dict):
        msg = f"{name} must be a mapping, got {type(data).__name__}"
        raise ConfigError(msg)

    hints = get_type_hints(record_type)
    known = {f.name: f for f in fields(record_type)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        msg = f"unknown configuration key {name}.{unknown[0]}"
        raise ConfigError(msg)

    values: dict[str, Any] = {}
    for key, f in known.items():
        path = f"{name}.{key}"
        if key not in data or data[key] is None:
            if f.default is MISSING and f.default_factory is MISSING:
                msg = f"{path} is required"
                raise ConfigError(msg)
            continue
        values[key] = _coerce(data[key], hints[key], path)
    return record_type(**values)


def _section_document(record: Any) -> dict[str, Any]:
    document: dict[str, Any] = {}
    for f in fields(record):
        value = getattr(record, f.name)
        if isinstance(value, Path):
            value = str(value)
        elif isinstance(value, tuple):
            value = list(value)
        document[f.name] = value
    return document


@dataclass(frozen=True)
class RunConfig:
    """
    Every constant of one pipeline run.

    Built from the merged configuration document with ``from_dict``; each
    block validates itself on construction. ``plugins`` is passed through
    untouched for externally registered classifiers.
    """

    feature: FeatureConfig
    split: SplitSpec = field(default_factory=SplitSpec)
    decision: DecisionConfig = field(default_factory=DecisionConfig)
    logreg: LogRegParams = field(default_factory=LogRegParams)
    knn: KnnParams = field(default_factory=KnnParams)
    lda: LdaParams = field(default_factory=LdaParams)
    gbdt: GbdtParams = field(default_factory=GbdtParams)
    synth: SynthConfig = field(default_factory=SynthConfig)
    paths: PathsConfig = field(default_factory=PathsConfig)
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    plugins: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: ConfigurationDict | None) -> RunConfig:
        """
        Build a validated run configuration from a merged document.

        Raises:
            ConfigError: For unknown sections or keys, wrongly typed values,
                a missing ``feature.maneuver_threshold``, or any block
                invariant violation
        """
        data = data or {}
        if not isinstance(data, dict):
            msg = "configuration document must be a mapping"
            raise ConfigError(msg)
        unknown = sorted(set(data) - set(_SECTIONS) - {"plugins"})
        if unknown:
            msg = f"unknown configuration section {unknown[0]}"
            raise ConfigError(msg)

        sections = {
            name: _build_section(name, record_type, data.get(name))
            for name, record_type in _SECTIONS.items()
        }
        plugins = data.get("plugins") or {}
        if not isinstance(plugins, dict):
            msg = "plugins must be a mapping"
            raise ConfigError(msg)
        return cls(**sections, plugins=dict(plugins))

    def to_dict(self) -> ConfigurationDict:
        """YAML-safe document that ``from_dict`` rebuilds into an equal config."""
        document = {name: _section_document(getattr(self, name)) for name in _SECTIONS}
        if self.plugins:
            document["plugins"] = dict(self.plugins)
        return document

    def with_seed(self, seed: int) -> RunConfig:
        """Copy with one seed driving both the synthetic corpus and the split."""
        return replace(
            self,
            synth=replace(self.synth, seed=seed),
            split=replace(self.split, seed=seed),
        )
