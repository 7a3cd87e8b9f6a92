# ABOUTME: Trajectory package: data models, CSV boundary and synthetic generator
# ABOUTME: Corpus boundary of the system

from .io import (
    TRAJECTORY_HEADER,
    load_corpus,
    parse_trajectory,
    read_trajectory,
    serialize_trajectory,
    write_trajectory,
)
from .models import SynthConfig, Trajectory, TrajectoryPoint
from .synth import corpus_seeds, generate_synthetic

__all__ = [
    "TRAJECTORY_HEADER",
    "SynthConfig",
    "Trajectory",
    "TrajectoryPoint",
    "corpus_seeds",
    "generate_synthetic",
    "load_corpus",
    "parse_trajectory",
    "read_trajectory",
    "serialize_trajectory",
    "write_trajectory",
]
