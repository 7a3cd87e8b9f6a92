# ABOUTME: Logging setup for the maneuverml command line
# ABOUTME: Configures the root logger once from the merged logging section

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from maneuverml.config.models import LoggingConfig

__all__ = ["setup_logging"]


def setup_logging(
    config: LoggingConfig | None = None, level: str | None = None
) -> logging.Logger:
    """Set up logging configuration.

    Replaces any handlers installed by an earlier call, so repeated command
    invocations in one process log to the current stderr.

    Args:
        config: Logging section of the run configuration (defaults if None)
        level: Level overriding the configured one (DEBUG, INFO, WARNING, ERROR)

    Returns:
        The package logger named by the configuration
    """
    from maneuverml.config.models import LoggingConfig

    config = config or LoggingConfig()
    logging.basicConfig(
        level=getattr(logging, (level or config.level).upper()),
        format=config.format,
        datefmt="%Y-%m-%d %H:%M:%S",
        force=True,
    )
    return logging.getLogger(config.name)
