# ABOUTME: Deterministic synthetic trajectory generator for labelled test corpora
# ABOUTME: Produces flat-cruise or single-excursion altitude profiles with noise

from __future__ import annotations

import numpy as np

from .models import SynthConfig, Trajectory

__all__ = ["corpus_seeds", "generate_synthetic"]


def generate_synthetic(
    config: SynthConfig, vehicle_id: str | None = None
) -> Trajectory:
    """
    Generate one trajectory as a pure function of the configuration.

    Every random draw is taken in a fixed order regardless of branch, so the
    same config always yields a bitwise-identical trajectory.

    Args:
        config: Generator settings, including the seed
        vehicle_id: Identifier for the trajectory (defaults to ``synth-<seed>``)

    Returns:
        Generated trajectory
    """
    rng = np.random.default_rng(config.seed)
    n = config.n_points
    index = np.arange(n, dtype=float)

    lat0 = rng.uniform(-60.0, 60.0)
    lon0 = rng.uniform(-170.0, 170.0)
    dlat, dlon = rng.uniform(-config.drift_degrees, config.drift_degrees, size=2)
    lat_noise = rng.normal(0.0, config.noise_scale, size=n)
    lon_noise = rng.normal(0.0, config.noise_scale, size=n)
    alt_sigma = config.noise_scale * config.altitude_noise_gain
    alt_noise = rng.normal(0.0, alt_sigma, size=n)
    is_maneuver = rng.random() < config.maneuver_fraction
    low, high = config.altitude_peak_range
    peak = rng.uniform(low, high)
    centre = rng.integers(0, n)

    timestamps = index * config.step_seconds
    latitudes = np.clip(lat0 + dlat * index + lat_noise, -90.0, 90.0)
    longitudes = np.clip(lon0 + dlon * index + lon_noise, -180.0, 180.0)

    altitudes = np.full(n, config.cruise_altitude)
    if is_maneuver:
        half_width = max(1.0, n / 6.0)
        bump = np.clip(1.0 - np.abs(index - centre) / half_width, 0.0, 1.0)
        altitudes = altitudes + (peak - config.cruise_altitude) * bump
    altitudes = np.clip(altitudes + alt_noise, 0.0, None)

    return Trajectory.from_arrays(
        vehicle_id or f"synth-{config.seed}",
        timestamps,
        latitudes,
        longitudes,
        altitudes,
    )


def corpus_seeds(seed: int, count: int) -> list[int]:
    """Derive ``count`` independent per-trajectory seeds from one corpus seed."""
    return [
        int(np.random.SeedSequence([seed, i]).generate_state(1, dtype=np.uint64)[0])
        for i in range(count)
    ]
