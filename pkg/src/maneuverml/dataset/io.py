# ABOUTME: Dataset CSV boundary between the build-dataset and train stages
# ABOUTME: Floats use repr so read_csv(write_csv(ds)) reproduces ds exactly

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import TextIO

import numpy as np

from maneuverml.errors import (
    EmptyCorpus,
    LabelDomainError,
    MalformedRow,
    MissingDataset,
    SchemaError,
)
from maneuverml.features.models import FEATURE_NAMES

from .models import Dataset

__all__ = [
    "DATASET_HEADER",
    "parse_csv",
    "read_csv",
    "serialize_csv",
    "write_csv",
]

logger = logging.getLogger(__name__)

DATASET_HEADER = ",".join(("id", *FEATURE_NAMES, "maneuver"))
_COLUMNS = DATASET_HEADER.split(",")


def serialize_csv(dataset: Dataset) -> str:
    """Render a dataset as CSV text with LF line endings."""
    lines = [DATASET_HEADER]
    for record_id, row, label in zip(
        dataset.ids, dataset.rows.tolist(), dataset.labels.tolist(), strict=True
    ):
        if "," in record_id or "".join(record_id.splitlines()) != record_id:
            msg = f"record id {record_id!r} cannot be written to CSV"
            raise SchemaError(None, msg)
        values = ",".join(repr(float(value)) for value in row)
        lines.append(f"{record_id},{values},{label}")
    return "\n".join(lines) + "\n"


def write_csv(dataset: Dataset, sink: Path | TextIO) -> None:
    """Write a dataset to a path or an open text stream."""
    text = serialize_csv(dataset)
    if not isinstance(sink, Path):
        sink.write(text)
        return
    sink.parent.mkdir(parents=True, exist_ok=True)
    sink.write_text(text, encoding="utf-8", newline="\n")
    logger.debug("Wrote %d dataset rows to %s", dataset.n_rows, sink)


def _parse_label(field: str, line: int) -> int:
    text = field.strip()
    try:
        value = float(text)
    except ValueError:
        msg = f"maneuver {field!r} is not a number"
        raise MalformedRow(line, msg) from None
    if value not in (0.0, 1.0):
        msg = f"maneuver must be 0 or 1, found {field!r}"
        raise LabelDomainError(line, msg)
    return int(value)


def _parse_feature(field: str, name: str, line: int) -> float:
    try:
        value = float(field.strip())
    except ValueError:
        msg = f"{name} {field!r} is not a number"
        raise MalformedRow(line, msg) from None
    if not math.isfinite(value):
        msg = f"{name} {field!r} is not finite"
        raise MalformedRow(line, msg)
    return value


def parse_csv(text: str | TextIO) -> Dataset:
    """
    Parse dataset CSV text.

    Raises:
        SchemaError: Header differs from DATASET_HEADER
        MalformedRow: Wrong arity or non-numeric field
        LabelDomainError: Label outside {0, 1}
        EmptyCorpus: Header without data rows
    """
    content = text if isinstance(text, str) else text.read()
    lines = content.splitlines()
    if not lines or lines[0].strip() != DATASET_HEADER:
        found = lines[0] if lines else ""
        msg = f"expected header '{DATASET_HEADER}', found {found!r}"
        raise SchemaError(1, msg)

    ids: list[str] = []
    rows: list[list[float]] = []
    labels: list[int] = []
    for line_number, raw in enumerate(lines[1:], start=2):
        fields = raw.split(",")
        if len(fields) != len(_COLUMNS):
            msg = f"expected {len(_COLUMNS)} fields, found {len(fields)}"
            raise MalformedRow(line_number, msg)
        ids.append(fields[0])
        rows.append(
            [
                _parse_feature(field, name, line_number)
                for field, name in zip(fields[1:-1], FEATURE_NAMES, strict=True)
            ]
        )
        labels.append(_parse_label(fields[-1], line_number))

    if not rows:
        msg = "dataset file has a header but no rows"
        raise EmptyCorpus(msg)

    return Dataset(
        feature_names=FEATURE_NAMES,
        rows=np.array(rows, dtype=float),
        labels=np.array(labels, dtype=np.int64),
        ids=tuple(ids),
    )


def read_csv(source: Path | TextIO) -> Dataset:
    """
    Read a dataset from a path or an open text stream.

    Raises:
        MissingDataset: If the path does not exist
    """
    if not isinstance(source, Path):
        return parse_csv(source)
    if not source.is_file():
        msg = f"dataset file not found: {source}"
        raise MissingDataset(msg)
    dataset = parse_csv(source.read_text(encoding="utf-8"))
    logger.debug("Read %d dataset rows from %s", dataset.n_rows, source)
    return dataset
