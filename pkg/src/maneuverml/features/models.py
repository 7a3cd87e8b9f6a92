# ABOUTME: Feature extraction settings and the per-trajectory feature record
# ABOUTME: FEATURE_NAMES fixes the column order used by every dataset

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any, Literal

from maneuverml.errors import ConfigError

__all__ = ["FEATURE_NAMES", "FeatureConfig", "FeatureRecord", "LabelMode"]

FEATURE_NAMES: tuple[str, ...] = (
    "max_altitude",
    "vertical_acceleration",
    "horizontal_speed",
    "distance",
)

LabelMode = Literal["raw", "differenced"]


@dataclass(frozen=True)
class FeatureConfig:
    """
    Constants of the feature pipeline.

    ``maneuver_threshold`` has no default: the labelling threshold is arbitrary
    and must be pinned explicitly. Speeds and distances stay in degrees.

    Attributes:
        maneuver_threshold: Altitude above which a trajectory counts as a maneuver
        speed_scale: Constant multiplied into every per-step horizontal speed
        speed_diff_order: Difference order applied to lat/lon for speed
        accel_diff_order: Difference order applied to altitude for acceleration
        time_aware: Divide altitude differences by the mean step duration^order
        label_mode: ``raw`` compares max|alt|, ``differenced`` max|diff(alt)|
    """

    maneuver_threshold: float
    speed_scale: float = 1.0
    speed_diff_order: int = 1
    accel_diff_order: int = 2
    time_aware: bool = False
    label_mode: LabelMode = "raw"

    def __post_init__(self) -> None:
        threshold = self.maneuver_threshold
        if not (math.isfinite(threshold) and threshold > 0):
            msg = (
                "feature.maneuver_threshold must be > 0, "
                f"got {self.maneuver_threshold}"
            )
            raise ConfigError(msg)
        if not (math.isfinite(self.speed_scale) and self.speed_scale > 0):
            msg = f"feature.speed_scale must be > 0, got {self.speed_scale}"
            raise ConfigError(msg)
        for name in ("speed_diff_order", "accel_diff_order"):
            if getattr(self, name) < 1:
                msg = f"feature.{name} must be >= 1, got {getattr(self, name)}"
                raise ConfigError(msg)
        if self.label_mode not in ("raw", "differenced"):
            msg = (
                "feature.label_mode must be 'raw' or 'differenced', "
                f"got {self.label_mode!r}"
            )
            raise ConfigError(msg)

    def copy(self, **changes: Any) -> FeatureConfig:
        """Create a new FeatureConfig with specified changes."""
        current_values = asdict(self)
        current_values.update(changes)
        return FeatureConfig(**current_values)


@dataclass(frozen=True)
class FeatureRecord:
    """One learning row: four explanatory features and the maneuver label."""

    vehicle_id: str
    max_altitude: float
    vertical_acceleration: float
    horizontal_speed: float
    distance: float
    maneuver: int

    def as_row(self) -> tuple[float, float, float, float]:
        """Feature values in FEATURE_NAMES order."""
        return (
            self.max_altitude,
            self.vertical_acceleration,
            self.horizontal_speed,
            self.distance,
        )
