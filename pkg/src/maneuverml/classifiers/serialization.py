# ABOUTME: Versioned YAML model documents: save, load, read and write
# ABOUTME: Floats round-trip exactly, so reloaded models score bit-for-bit alike

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any

import yaml

from maneuverml.constants import SCHEMA_VERSION, model_file_name
from maneuverml.dataset.models import ScalerParams
from maneuverml.errors import (
    MissingModel,
    SchemaError,
    SchemaVersionMismatch,
    UnknownAlgorithmTag,
)

from .gbdt import GbdtModel
from .knn import KnnModel
from .lda import LdaModel
from .logreg import LogRegModel
from .training import ScaledModel

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping
    from pathlib import Path

    from maneuverml.dataset.models import SplitSpec

    from .interfaces import ModelDocument, TrainedModel

__all__ = [
    "BUILTIN_LOADERS",
    "dump_model",
    "load_model",
    "parse_model",
    "parse_model_document",
    "read_model",
    "read_model_document",
    "save_model",
    "write_model",
]

logger = logging.getLogger(__name__)

BUILTIN_LOADERS: dict[str, Callable[[ModelDocument], TrainedModel]] = {
    "logreg": LogRegModel.from_document,
    "knn": KnnModel.from_document,
    "lda": LdaModel.from_document,
    "gbdt": GbdtModel.from_document,
}


def save_model(model: TrainedModel, split: SplitSpec | None = None) -> dict[str, Any]:
    """
    Build the versioned document of a fitted model.

    Layout: ``schema_version``, ``algorithm``, ``scaler`` (null for unscaled
    models), ``split`` (the train/test settings, when given) and the
    algorithm-specific ``model`` block.
    """
    scaler = model.scaler.to_document() if isinstance(model, ScaledModel) else None
    document: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "algorithm": model.algorithm,
        "scaler": scaler,
    }
    if split is not None:
        document["split"] = split.to_document()
    document["model"] = model.to_document()
    return document


def load_model(
    document: Mapping[str, Any],
    loaders: Mapping[str, Callable[[ModelDocument], TrainedModel]] | None = None,
    source: str = "model document",
) -> TrainedModel:
    """
    Rebuild a model from its document.

    Args:
        document: Mapping produced by save_model
        loaders: Algorithm tag to loader; defaults to the built-in classifiers
        source: Name used in error messages, usually the file name

    Raises:
        SchemaVersionMismatch: If the document was written by another schema
        UnknownAlgorithmTag: If no loader handles the algorithm tag
        SchemaError: If the model or scaler block is missing or malformed
    """
    loaders = BUILTIN_LOADERS if loaders is None else loaders
    version = document.get("schema_version")
    if version != SCHEMA_VERSION:
        msg = f"model schema_version {version!r} is not supported ({SCHEMA_VERSION})"
        raise SchemaVersionMismatch(msg)
    algorithm = document.get("algorithm")
    if algorithm not in loaders:
        msg = f"unknown algorithm tag {algorithm!r}; known: {sorted(loaders)}"
        raise UnknownAlgorithmTag(msg)

    try:
        model = loaders[algorithm](document["model"])
        scaler = document.get("scaler")
        if scaler is None:
            return model
        return ScaledModel(model=model, scaler=ScalerParams.from_document(scaler))
    except (KeyError, IndexError, TypeError, ValueError, AttributeError) as e:
        msg = f"{source}: malformed {algorithm} model ({type(e).__name__}: {e})"
        raise SchemaError(None, msg) from e


def dump_model(model: TrainedModel, split: SplitSpec | None = None) -> str:
    return yaml.safe_dump(save_model(model, split), sort_keys=False)


def parse_model_document(text: str, source: str = "model document") -> dict[str, Any]:
    """
    Parse the YAML text of a model file into its document mapping.

    Raises:
        SchemaError: If the text is not YAML or not a mapping
    """
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" at line {mark.line + 1}" if mark is not None else ""
        problem = getattr(e, "problem", None) or e
        msg = f"{source}: not a YAML document{where} ({problem})"
        raise SchemaError(None, msg) from e
    if not isinstance(document, dict):
        msg = f"{source}: model document must be a YAML mapping"
        raise SchemaError(None, msg)
    return document


def parse_model(
    text: str,
    loaders: Mapping[str, Callable[[ModelDocument], TrainedModel]] | None = None,
    source: str = "model document",
) -> TrainedModel:
    return load_model(parse_model_document(text, source), loaders, source)


def write_model(
    model: TrainedModel, directory: Path, split: SplitSpec | None = None
) -> Path:
    """Write ``<algorithm>.model.yaml`` into a directory and return its path."""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / model_file_name(model.algorithm)
    path.write_text(dump_model(model, split), encoding="utf-8", newline="\n")
    logger.info("Wrote %s model to %s", model.algorithm, path)
    return path


def read_model_document(path: Path) -> dict[str, Any]:
    """
    Read the document mapping of one model file.

    Raises:
        MissingModel: If the file does not exist
        SchemaError: If the file is not a YAML mapping
    """
    if not path.is_file():
        msg = f"model file not found: {path}"
        raise MissingModel(msg)
    try:
        text = path.read_text(encoding="utf-8")
    except (UnicodeDecodeError, OSError) as e:
        msg = f"{path.name}: cannot read model file ({e})"
        raise SchemaError(None, msg) from e
    return parse_model_document(text, path.name)


def read_model(
    path: Path,
    loaders: Mapping[str, Callable[[ModelDocument], TrainedModel]] | None = None,
) -> TrainedModel:
    """
    Read one model file.

    Raises:
        MissingModel: If the file does not exist
        SchemaError: If the file does not hold a well-formed model document
    """
    return load_model(read_model_document(path), loaders, path.name)
