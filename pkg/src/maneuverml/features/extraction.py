# ABOUTME: Discrete differencing and the four trajectory features plus maneuver label
# ABOUTME: Pure functions over immutable trajectories, safe to map over a corpus

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from maneuverml.errors import SeriesTooShort

from .models import FeatureConfig, FeatureRecord

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from maneuverml.trajectory.models import Trajectory

__all__ = [
    "discrete_diff",
    "extract_all",
    "extract_features",
    "horizontal_speed",
    "maneuver_label",
    "max_altitude",
    "path_distance",
    "vertical_acceleration",
]

logger = logging.getLogger(__name__)


def discrete_diff(
    series: Sequence[float] | np.ndarray, n: int, feature: str = "series"
) -> np.ndarray:
    """
    Compute the n-th discrete difference of a series.

    First order is ``out[i] = s[i+1] - s[i]``; higher orders iterate it, so the
    output has ``len(series) - n`` elements.

    Args:
        series: Input samples
        n: Difference order (>= 1)
        feature: Name reported in SeriesTooShort

    Returns:
        Differenced series

    Raises:
        SeriesTooShort: If ``len(series) <= n``
    """
    values = np.asarray(series, dtype=float)
    if n < 1:
        msg = f"difference order must be >= 1, got {n}"
        raise ValueError(msg)
    if len(values) <= n:
        raise SeriesTooShort(feature, len(values), n + 1)
    return np.diff(values, n=n)


def horizontal_speed(trajectory: Trajectory, config: FeatureConfig) -> float:
    """Mean of ``speed_scale * sqrt(dlat^2 + dlon^2)`` over differenced steps."""
    order = config.speed_diff_order
    dlat = discrete_diff(trajectory.latitudes, order, "horizontal_speed")
    dlon = discrete_diff(trajectory.longitudes, order, "horizontal_speed")
    steps = np.sqrt(dlat**2 + dlon**2) * config.speed_scale
    return float(np.mean(steps))


def path_distance(trajectory: Trajectory) -> float:
    """Total planar path length in degrees over consecutive sample pairs."""
    dlat = discrete_diff(trajectory.latitudes, 1, "distance")
    dlon = discrete_diff(trajectory.longitudes, 1, "distance")
    return float(np.sum(np.sqrt(dlat**2 + dlon**2)))


def vertical_acceleration(trajectory: Trajectory, config: FeatureConfig) -> float:
    """
    Signed mean of the order-``accel_diff_order`` difference of altitude.

    Index-based by default. With ``time_aware`` each difference window is divided
    by its mean step duration raised to the difference order.
    """
    order = config.accel_diff_order
    diffs = discrete_diff(trajectory.altitudes, order, "vertical_acceleration")
    if config.time_aware:
        steps = np.diff(trajectory.timestamps)
        window_dt = np.convolve(steps, np.full(order, 1.0 / order), mode="valid")
        diffs = diffs / window_dt**order
    return float(np.mean(diffs))


def max_altitude(trajectory: Trajectory) -> float:
    return float(np.max(trajectory.altitudes))


def maneuver_label(trajectory: Trajectory, config: FeatureConfig) -> int:
    """
    Label a trajectory 1 when its maximum absolute altitude exceeds the threshold.

    The comparison is strict. In ``differenced`` label mode the first difference
    of altitude is thresholded instead of the raw series.
    """
    series = trajectory.altitudes
    if config.label_mode == "differenced":
        series = discrete_diff(series, 1, "maneuver")
    return int(float(np.max(np.abs(series))) > config.maneuver_threshold)


def extract_features(trajectory: Trajectory, config: FeatureConfig) -> FeatureRecord:
    """
    Assemble the feature record of one trajectory.

    Raises:
        SeriesTooShort: Naming the first feature whose precondition fails
    """
    return FeatureRecord(
        vehicle_id=trajectory.vehicle_id,
        max_altitude=max_altitude(trajectory),
        vertical_acceleration=vertical_acceleration(trajectory, config),
        horizontal_speed=horizontal_speed(trajectory, config),
        distance=path_distance(trajectory),
        maneuver=maneuver_label(trajectory, config),
    )


def extract_all(
    trajectories: Iterable[Trajectory], config: FeatureConfig
) -> list[FeatureRecord]:
    """Extract feature records for a corpus, preserving input order."""
    records = [extract_features(t, config) for t in trajectories]
    logger.debug("Extracted features for %d trajectories", len(records))
    return records
