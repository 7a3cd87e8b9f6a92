# ABOUTME: Feature package: differencing, trajectory features and maneuver label
# ABOUTME: Re-exports the feature operations and their configuration types

from .extraction import (
    discrete_diff,
    extract_all,
    extract_features,
    horizontal_speed,
    maneuver_label,
    max_altitude,
    path_distance,
    vertical_acceleration,
)
from .models import FEATURE_NAMES, FeatureConfig, FeatureRecord

__all__ = [
    "FEATURE_NAMES",
    "FeatureConfig",
    "FeatureRecord",
    "discrete_diff",
    "extract_all",
    "extract_features",
    "horizontal_speed",
    "maneuver_label",
    "max_altitude",
    "path_distance",
    "vertical_acceleration",
]
