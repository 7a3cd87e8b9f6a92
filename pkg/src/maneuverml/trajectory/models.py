# ABOUTME: Immutable trajectory data models and the synthetic generator settings
# ABOUTME: Validates coordinate ranges and time ordering at construction

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from maneuverml.errors import ConfigError, NonMonotonicTime, RangeViolation, TooShort

__all__ = ["SynthConfig", "Trajectory", "TrajectoryPoint"]

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class TrajectoryPoint:
    """One recorded sample of a vehicle track.

    Latitude and longitude are degrees; altitude is unitless "as recorded" and
    every altitude threshold is expressed in the same unit.
    """

    timestamp: float
    latitude: float
    longitude: float
    altitude: float

    def range_problem(self) -> str | None:
        """Describe the first violated coordinate range, or None if valid."""
        values = (self.timestamp, self.latitude, self.longitude, self.altitude)
        if not all(math.isfinite(v) for v in values):
            return "non-finite value"
        if self.timestamp < 0:
            return f"timestamp {self.timestamp!r} is negative"
        if not -90.0 <= self.latitude <= 90.0:
            return f"latitude {self.latitude!r} outside [-90, 90]"
        if not -180.0 <= self.longitude <= 180.0:
            return f"longitude {self.longitude!r} outside [-180, 180]"
        if self.altitude < 0:
            return f"altitude {self.altitude!r} is negative"
        return None


@dataclass(frozen=True)
class Trajectory:
    """Time-ordered samples for one vehicle.

    Construction validates every point, strict timestamp ordering and the
    two-point minimum, so no invalid trajectory can exist.
    """

    vehicle_id: str
    points: tuple[TrajectoryPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        for index, point in enumerate(self.points):
            problem = point.range_problem()
            if problem is not None:
                raise RangeViolation(None, f"point {index}: {problem}")
            if index and point.timestamp <= self.points[index - 1].timestamp:
                msg = f"point {index}: timestamp {point.timestamp!r} not increasing"
                raise NonMonotonicTime(None, msg)
        if len(self.points) < 2:
            msg = f"trajectory '{self.vehicle_id}' has {len(self.points)} point(s)"
            raise TooShort(None, msg)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def timestamps(self) -> np.ndarray:
        return np.array([p.timestamp for p in self.points], dtype=float)

    @property
    def latitudes(self) -> np.ndarray:
        return np.array([p.latitude for p in self.points], dtype=float)

    @property
    def longitudes(self) -> np.ndarray:
        return np.array([p.longitude for p in self.points], dtype=float)

    @property
    def altitudes(self) -> np.ndarray:
        return np.array([p.altitude for p in self.points], dtype=float)

    @classmethod
    def from_arrays(
        cls,
        vehicle_id: str,
        timestamps: Any,
        latitudes: Any,
        longitudes: Any,
        altitudes: Any,
    ) -> Trajectory:
        """Build a trajectory from four equally long numeric sequences."""
        raw = (timestamps, latitudes, longitudes, altitudes)
        columns = [np.asarray(c, dtype=float) for c in raw]
        lengths = {len(c) for c in columns}
        if len(lengths) != 1:
            msg = f"column lengths differ: {sorted(lengths)}"
            raise ValueError(msg)
        points = tuple(
            TrajectoryPoint(float(t), float(la), float(lo), float(al))
            for t, la, lo, al in zip(*columns, strict=True)
        )
        return cls(vehicle_id=vehicle_id, points=points)


@dataclass(frozen=True)
class SynthConfig:
    """Settings for the synthetic trajectory generator.

    The altitude profile is either a flat cruise at ``cruise_altitude`` or, with
    probability ``maneuver_fraction``, a cruise with one triangular excursion
    whose peak is drawn from ``altitude_peak_range``. Altitude noise has standard
    deviation ``noise_scale * altitude_noise_gain``.
    """

    n_points: int = 60
    maneuver_fraction: float = 0.5
    altitude_peak_range: tuple[float, float] = (12000.0, 16000.0)
    noise_scale: float = 0.001
    seed: int = 0
    cruise_altitude: float = 9000.0
    altitude_noise_gain: float = 100000.0
    step_seconds: float = 1.0
    drift_degrees: float = 0.01

    def __post_init__(self) -> None:
        peak_range = tuple(self.altitude_peak_range)
        object.__setattr__(self, "altitude_peak_range", peak_range)
        if self.n_points < 2:
            msg = f"synth.n_points must be >= 2, got {self.n_points}"
            raise ConfigError(msg)
        if not 0.0 <= self.maneuver_fraction <= 1.0:
            msg = (
                "synth.maneuver_fraction must be in [0, 1], "
                f"got {self.maneuver_fraction}"
            )
            raise ConfigError(msg)
        if len(self.altitude_peak_range) != 2:
            msg = "synth.altitude_peak_range must be a [low, high] pair"
            raise ConfigError(msg)
        low, high = self.altitude_peak_range
        if low > high:
            msg = f"synth.altitude_peak_range low {low} exceeds high {high}"
            raise ConfigError(msg)
        if low < 0 or self.cruise_altitude < 0:
            msg = "synth altitudes must be non-negative"
            raise ConfigError(msg)
        if self.noise_scale < 0 or self.altitude_noise_gain < 0:
            msg = "synth.noise_scale and synth.altitude_noise_gain must be >= 0"
            raise ConfigError(msg)
        if self.step_seconds <= 0:
            msg = f"synth.step_seconds must be > 0, got {self.step_seconds}"
            raise ConfigError(msg)
        if not 0 <= self.seed <= MAX_SEED:
            msg = f"synth.seed must be an unsigned 64-bit integer, got {self.seed}"
            raise ConfigError(msg)

    def copy(self, **changes: Any) -> SynthConfig:
        """Create a new SynthConfig with specified changes."""
        current_values = asdict(self)
        current_values.update(changes)
        return SynthConfig(**current_values)
