"""ABOUTME: Central constants module for maneuverml configuration and artifact paths.
ABOUTME: Provides consistent access to environment variables and file names."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Final

# Environment variable names
MANEUVERML_PROFILE_ENV: Final[str] = "MANEUVERML_PROFILE"
MANEUVERML_CONFIG_ENV: Final[str] = "MANEUVERML_CONFIG"
# MANEUVERML__SECTION__KEY=value overrides one configuration value
ENV_OVERRIDE_PREFIX: Final[str] = "MANEUVERML__"

# Profile names
DEFAULT_PROFILE: Final[str] = "development"
VALID_PROFILES: Final[tuple[str, ...]] = ("development", "production", "test")

# Document formats
SCHEMA_VERSION: Final[int] = 1

# Artifact file names
MODEL_SUFFIX: Final[str] = ".model.yaml"
REPORT_FILE: Final[str] = "report.yaml"
ROC_CSV_FILE: Final[str] = "roc.csv"
ROC_SVG_FILE: Final[str] = "roc.svg"
TRAJECTORY_GLOB: Final[str] = "*.csv"


def get_profile() -> str:
    """Get the active profile from environment variable.

    Returns:
        Profile name, defaults to 'development' if not set or invalid.
    """
    profile = os.getenv(MANEUVERML_PROFILE_ENV, DEFAULT_PROFILE).lower()
    if profile not in VALID_PROFILES:
        return DEFAULT_PROFILE
    return profile


def get_config_file() -> str | None:
    """Get the user configuration file named by the environment, if any."""
    return os.environ.get(MANEUVERML_CONFIG_ENV) or None


def get_profiles_dir() -> Path:
    """Get the absolute path to the profiles directory.

    Returns:
        Absolute path to src/maneuverml/profiles directory.
    """
    return Path(__file__).parent / "profiles"


def model_file_name(algorithm: str) -> str:
    """File name of the model document for one algorithm tag."""
    return f"{algorithm}{MODEL_SUFFIX}"
