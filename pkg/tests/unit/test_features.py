# ABOUTME: Unit tests for discrete differencing, the four features and the label
# ABOUTME: Checks every feature against a loop-based recomputation on random tracks

from __future__ import annotations

import math

import numpy as np
import pytest

from maneuverml.errors import ConfigError, SeriesTooShort
from maneuverml.features import (
    FEATURE_NAMES,
    FeatureConfig,
    discrete_diff,
    extract_all,
    extract_features,
    horizontal_speed,
    maneuver_label,
    max_altitude,
    path_distance,
    vertical_acceleration,
)
from maneuverml.features.models import LabelMode
from maneuverml.trajectory import Trajectory
from tests.fixtures import make_trajectory, random_trajectory


def _diff(values: list[float], order: int) -> list[float]:
    for _ in range(order):
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return values


def _mean(values: list[float]) -> float:
    return sum(values) / len(values)


def _speed(lats: list[float], lons: list[float], order: int, scale: float) -> float:
    dlat, dlon = _diff(lats, order), _diff(lons, order)
    return _mean([scale * math.sqrt(a * a + b * b) for a, b in zip(dlat, dlon)])


def _distance(lats: list[float], lons: list[float]) -> float:
    return sum(
        math.sqrt((lats[i + 1] - lats[i]) ** 2 + (lons[i + 1] - lons[i]) ** 2)
        for i in range(len(lats) - 1)
    )


def _acceleration(
    alts: list[float], times: list[float], order: int, time_aware: bool
) -> float:
    diffs = _diff(alts, order)
    if time_aware:
        steps = _diff(times, 1)
        diffs = [
            d / (sum(steps[i : i + order]) / order) ** order
            for i, d in enumerate(diffs)
        ]
    return _mean(diffs)


class TestDiscreteDiff:
    """Test the n-th order difference."""

    def test_first_order(self) -> None:
        assert discrete_diff([1.0, 4.0, 9.0, 16.0], 1).tolist() == [3.0, 5.0, 7.0]

    def test_second_order_of_quadratic_is_constant(self) -> None:
        assert discrete_diff([1.0, 4.0, 9.0, 16.0], 2).tolist() == [2.0, 2.0]

    def test_output_length(self) -> None:
        assert len(discrete_diff(np.arange(10.0), 3)) == 7

    def test_too_short_series_names_the_feature(self) -> None:
        with pytest.raises(SeriesTooShort) as exc_info:
            discrete_diff([1.0, 2.0], 2, "vertical_acceleration")
        assert "vertical_acceleration" in str(exc_info.value)

    def test_order_below_one_is_rejected(self) -> None:
        with pytest.raises(ValueError, match="order"):
            discrete_diff([1.0, 2.0, 3.0], 0)


class TestFeatureConfig:
    def test_threshold_must_be_positive(self) -> None:
        with pytest.raises(ConfigError):
            FeatureConfig(maneuver_threshold=0.0)

    @pytest.mark.parametrize(
        "changes",
        [
            {"speed_scale": 0.0},
            {"speed_diff_order": 0},
            {"accel_diff_order": 0},
            {"label_mode": "smoothed"},
        ],
    )
    def test_invalid_settings_raise(self, changes: dict) -> None:
        with pytest.raises(ConfigError):
            FeatureConfig(maneuver_threshold=1.0).copy(**changes)


class TestFeatureOracle:
    """Compare vectorized features with plain-Python recomputation."""

    @pytest.mark.parametrize(
        "config",
        [
            FeatureConfig(maneuver_threshold=10000.0),
            FeatureConfig(
                maneuver_threshold=500.0,
                speed_scale=111.0,
                speed_diff_order=2,
                accel_diff_order=1,
                label_mode="differenced",
            ),
        ],
    )
    def test_features_match_brute_force(self, config: FeatureConfig) -> None:
        rng = np.random.default_rng(20240601)
        for index in range(1000):
            trajectory = random_trajectory(rng, f"r{index}")
            lats = trajectory.latitudes.tolist()
            lons = trajectory.longitudes.tolist()
            alts = trajectory.altitudes.tolist()
            times = trajectory.timestamps.tolist()

            assert discrete_diff(alts, 1).tolist() == pytest.approx(
                _diff(alts, 1), rel=1e-12, abs=1e-9
            )
            assert horizontal_speed(trajectory, config) == pytest.approx(
                _speed(lats, lons, config.speed_diff_order, config.speed_scale),
                rel=1e-12,
                abs=1e-12,
            )
            assert path_distance(trajectory) == pytest.approx(
                _distance(lats, lons), rel=1e-12, abs=1e-12
            )
            assert vertical_acceleration(trajectory, config) == pytest.approx(
                _acceleration(alts, times, config.accel_diff_order, False),
                rel=1e-12,
                abs=1e-9,
            )
            assert max_altitude(trajectory) == max(alts)

            series = alts if config.label_mode == "raw" else _diff(alts, 1)
            expected = int(max(abs(v) for v in series) > config.maneuver_threshold)
            assert maneuver_label(trajectory, config) == expected

    def test_time_aware_acceleration_matches_brute_force(self) -> None:
        config = FeatureConfig(maneuver_threshold=1.0, time_aware=True)
        rng = np.random.default_rng(99)
        for index in range(200):
            trajectory = random_trajectory(rng, f"r{index}")
            expected = _acceleration(
                trajectory.altitudes.tolist(),
                trajectory.timestamps.tolist(),
                config.accel_diff_order,
                True,
            )
            assert vertical_acceleration(trajectory, config) == pytest.approx(
                expected, rel=1e-9, abs=1e-9
            )


class TestFeatureValues:
    """Test features on hand-computed trajectories."""

    def test_vertical_acceleration_keeps_its_sign(self) -> None:
        climbing = make_trajectory([0.0, 1.0, 4.0, 9.0])
        descending = make_trajectory([9.0, 8.0, 5.0, 0.0])
        config = FeatureConfig(maneuver_threshold=1.0)
        assert vertical_acceleration(climbing, config) == 2.0
        assert vertical_acceleration(descending, config) == -2.0

    def test_time_aware_uses_step_duration(self) -> None:
        trajectory = make_trajectory(
            [0.0, 4.0, 16.0, 36.0], timestamps=[0.0, 2.0, 4.0, 6.0]
        )
        index_based = FeatureConfig(maneuver_threshold=1.0)
        timed = index_based.copy(time_aware=True)
        assert vertical_acceleration(trajectory, index_based) == 8.0
        assert vertical_acceleration(trajectory, timed) == 2.0

    def test_speed_and_distance_of_straight_line(self) -> None:
        trajectory = make_trajectory(
            [0.0, 0.0, 0.0], latitudes=[0.0, 3.0, 6.0], longitudes=[0.0, 4.0, 8.0]
        )
        config = FeatureConfig(maneuver_threshold=1.0, speed_scale=2.0)
        assert path_distance(trajectory) == 10.0
        assert horizontal_speed(trajectory, config) == 10.0

    def test_label_threshold_is_strict(self) -> None:
        trajectory = make_trajectory([100.0, 200.0])
        assert maneuver_label(trajectory, FeatureConfig(maneuver_threshold=200.0)) == 0
        assert maneuver_label(trajectory, FeatureConfig(maneuver_threshold=199.0)) == 1

    def test_two_points_are_too_short_for_acceleration(self) -> None:
        trajectory = make_trajectory([1.0, 2.0])
        with pytest.raises(SeriesTooShort) as exc_info:
            extract_features(trajectory, FeatureConfig(maneuver_threshold=1.0))
        assert exc_info.value.code == "SERIES_TOO_SHORT"


class TestExtractFeatures:
    def test_record_columns_follow_feature_names(self) -> None:
        trajectory = make_trajectory([9000.0, 12000.0, 9000.0], vehicle_id="v1")
        record = extract_features(trajectory, FeatureConfig(maneuver_threshold=11000.0))

        assert record.vehicle_id == "v1"
        assert record.maneuver == 1
        assert record.as_row() == tuple(getattr(record, n) for n in FEATURE_NAMES)

    def test_extract_all_preserves_order(self) -> None:
        trajectories = [
            make_trajectory([1.0, 2.0, 3.0], vehicle_id=name) for name in "cab"
        ]
        records = extract_all(trajectories, FeatureConfig(maneuver_threshold=1.0))
        assert [r.vehicle_id for r in records] == ["c", "a", "b"]


def _with_coordinates(
    trajectory: Trajectory, latitudes: np.ndarray, longitudes: np.ndarray
) -> Trajectory:
    return Trajectory.from_arrays(
        trajectory.vehicle_id,
        trajectory.timestamps,
        latitudes,
        longitudes,
        trajectory.altitudes,
    )


class TestFeatureProperties:
    """Relations every trajectory must satisfy, checked on random tracks."""

    def test_speed_is_linear_in_scale(self) -> None:
        rng = np.random.default_rng(51)
        unit = FeatureConfig(maneuver_threshold=1.0)
        for index in range(300):
            trajectory = random_trajectory(rng, f"r{index}")
            scale = float(rng.uniform(0.01, 200.0))
            scaled = unit.copy(speed_scale=scale)
            assert horizontal_speed(trajectory, scaled) == pytest.approx(
                scale * horizontal_speed(trajectory, unit), rel=1e-12
            )

    def test_distance_ignores_direction_of_travel(self) -> None:
        rng = np.random.default_rng(52)
        for index in range(300):
            trajectory = random_trajectory(rng, f"r{index}")
            reversed_track = _with_coordinates(
                trajectory, trajectory.latitudes[::-1], trajectory.longitudes[::-1]
            )
            assert path_distance(reversed_track) == pytest.approx(
                path_distance(trajectory), rel=1e-12
            )

    def test_speed_and_distance_ignore_translation(self) -> None:
        rng = np.random.default_rng(53)
        config = FeatureConfig(maneuver_threshold=1.0, speed_diff_order=2)
        for index in range(300):
            trajectory = random_trajectory(rng, f"r{index}")
            moved = _with_coordinates(
                trajectory,
                trajectory.latitudes + rng.uniform(-1.0, 1.0),
                trajectory.longitudes + rng.uniform(-1.0, 1.0),
            )
            assert path_distance(moved) == pytest.approx(
                path_distance(trajectory), rel=1e-9, abs=1e-9
            )
            assert horizontal_speed(moved, config) == pytest.approx(
                horizontal_speed(trajectory, config), rel=1e-9, abs=1e-9
            )

    @pytest.mark.parametrize("label_mode", ["raw", "differenced"])
    def test_label_never_rises_with_threshold(self, label_mode: LabelMode) -> None:
        rng = np.random.default_rng(54)
        for index in range(200):
            trajectory = random_trajectory(rng, f"r{index}")
            thresholds = np.sort(rng.uniform(1.0, 25000.0, size=6))
            labels = [
                maneuver_label(
                    trajectory,
                    FeatureConfig(maneuver_threshold=float(t), label_mode=label_mode),
                )
                for t in thresholds
            ]
            assert labels == sorted(labels, reverse=True)
