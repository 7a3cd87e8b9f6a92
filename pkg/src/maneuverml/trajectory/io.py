# ABOUTME: Trajectory CSV parsing, serialization and corpus directory loading
# ABOUTME: Every parse error names the offending line; corpus order is by filename

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import TYPE_CHECKING, TextIO

from maneuverml.constants import TRAJECTORY_GLOB
from maneuverml.errors import (
    CorpusFileError,
    CorpusNotFound,
    MalformedRow,
    ManeuverError,
    NonMonotonicTime,
    RangeViolation,
    TooShort,
)

from .models import Trajectory, TrajectoryPoint

if TYPE_CHECKING:
    from collections.abc import Iterable

__all__ = [
    "TRAJECTORY_HEADER",
    "load_corpus",
    "parse_trajectory",
    "read_trajectory",
    "serialize_trajectory",
    "write_trajectory",
]

logger = logging.getLogger(__name__)

TRAJECTORY_HEADER = "timestamp,lat,lon,alt"
_FIELDS = TRAJECTORY_HEADER.split(",")


def _parse_number(field: str, name: str, line: int) -> float:
    text = field.strip()
    try:
        value = float(text)
    except ValueError:
        msg = f"{name} {field!r} is not a number"
        raise MalformedRow(line, msg) from None
    if not math.isfinite(value):
        msg = f"{name} {field!r} is not finite"
        raise MalformedRow(line, msg)
    return value


def parse_trajectory(text: str | TextIO, vehicle_id: str) -> Trajectory:
    """
    Parse one trajectory from CSV text.

    The first line must be exactly ``timestamp,lat,lon,alt``; every following
    line holds one sample. LF and CRLF line endings are accepted; blank lines
    and comments are rejected.

    Args:
        text: CSV content or a readable text stream
        vehicle_id: Identifier recorded on the resulting trajectory

    Returns:
        Trajectory preserving file order

    Raises:
        MalformedRow: Wrong header, wrong arity or non-numeric field
        RangeViolation: Coordinate outside its valid range
        NonMonotonicTime: Timestamp not strictly increasing
        TooShort: Fewer than two samples
    """
    content = text if isinstance(text, str) else text.read()
    lines = content.splitlines()

    if not lines or lines[0].strip() != TRAJECTORY_HEADER:
        found = lines[0] if lines else ""
        msg = f"expected header '{TRAJECTORY_HEADER}', found {found!r}"
        raise MalformedRow(1, msg)

    points: list[TrajectoryPoint] = []
    for line_number, raw in enumerate(lines[1:], start=2):
        fields = raw.split(",")
        if len(fields) != len(_FIELDS):
            msg = f"expected {len(_FIELDS)} fields, found {len(fields)}"
            raise MalformedRow(line_number, msg)
        timestamp, lat, lon, alt = (
            _parse_number(field, name, line_number)
            for field, name in zip(fields, _FIELDS, strict=True)
        )
        point = TrajectoryPoint(timestamp, lat, lon, alt)
        problem = point.range_problem()
        if problem is not None:
            raise RangeViolation(line_number, problem)
        if points and timestamp <= points[-1].timestamp:
            msg = (
                f"timestamp {timestamp!r} does not follow "
                f"{points[-1].timestamp!r}"
            )
            raise NonMonotonicTime(line_number, msg)
        points.append(point)

    if len(points) < 2:
        msg = f"trajectory has {len(points)} sample(s), needs at least 2"
        raise TooShort(len(lines), msg)

    return Trajectory(vehicle_id=vehicle_id, points=tuple(points))


def serialize_trajectory(trajectory: Trajectory) -> str:
    """Render a trajectory in the CSV form accepted by parse_trajectory."""
    rows = [TRAJECTORY_HEADER]
    rows.extend(
        f"{p.timestamp!r},{p.latitude!r},{p.longitude!r},{p.altitude!r}"
        for p in trajectory.points
    )
    return "\n".join(rows) + "\n"


def read_trajectory(path: Path) -> Trajectory:
    """
    Read one trajectory file; the vehicle id is the filename stem.

    Raises:
        MalformedRow: If the file is not UTF-8 or cannot be read, besides every
            error of parse_trajectory
    """
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        msg = f"{path.name} is not valid UTF-8 (byte {e.start})"
        raise MalformedRow(None, msg) from e
    except OSError as e:
        msg = f"cannot read {path.name}: {e.strerror or e}"
        raise MalformedRow(None, msg) from e
    return parse_trajectory(text, path.stem)


def write_trajectory(trajectory: Trajectory, path: Path) -> None:
    """Write one trajectory file in UTF-8 with LF line endings."""
    path.write_text(serialize_trajectory(trajectory), encoding="utf-8", newline="\n")


def _read_for_corpus(path: Path) -> Trajectory | CorpusFileError:
    try:
        return read_trajectory(path)
    except ManeuverError as e:
        return CorpusFileError(path.name, e)


def load_corpus(
    directory: Path, *, strict: bool = True, workers: int = 1
) -> list[Trajectory]:
    """
    Load every ``*.csv`` trajectory in a directory.

    Files are parsed independently (in a thread pool when ``workers > 1``);
    the result is always ordered by filename.

    Args:
        directory: Corpus directory
        strict: Abort on the first bad file when True, otherwise log and skip
        workers: Number of parser threads

    Returns:
        Trajectories sorted by lexicographic filename

    Raises:
        CorpusNotFound: If the directory does not exist
        CorpusFileError: In strict mode, for the first file that fails to parse
    """
    if not directory.is_dir():
        msg = f"corpus directory not found: {directory}"
        raise CorpusNotFound(msg)

    paths = sorted(directory.glob(TRAJECTORY_GLOB), key=lambda p: p.name)
    logger.debug("Loading %d trajectory files from %s", len(paths), directory)

    results: Iterable[Trajectory | CorpusFileError]
    if workers > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_read_for_corpus, paths))
    else:
        results = [_read_for_corpus(path) for path in paths]

    trajectories: list[Trajectory] = []
    skipped = 0
    for result in results:
        if isinstance(result, CorpusFileError):
            if strict:
                raise result
            logger.warning("Skipping corpus file %s", result)
            skipped += 1
            continue
        trajectories.append(result)

    logger.info(
        "Loaded %d trajectories (%d skipped) from %s",
        len(trajectories),
        skipped,
        directory,
    )
    return trajectories
