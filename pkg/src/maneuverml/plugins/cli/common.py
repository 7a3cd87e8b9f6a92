# ABOUTME: Shared state and helpers for the pipeline CLI command plugins
# ABOUTME: Loads the layered run configuration and configures logging per command

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from rich.console import Console

from maneuverml.config.factory import ConfigurationFactory
from maneuverml.config.manager import ConfigurationManager
from maneuverml.metrics.report import percent
from maneuverml.utils.logging import setup_logging

if TYPE_CHECKING:
    from pathlib import Path

    from maneuverml.classifiers.interfaces import Classifier
    from maneuverml.config.models import ConfigurationDict, RunConfig
    from maneuverml.plugins.registry import PluginManager

__all__ = ["ALL_ALGORITHMS", "CliState", "format_ratio"]

ALL_ALGORITHMS = "all"


def format_ratio(value: float) -> str:
    """Whole-number percentage beside the value at four decimals."""
    return f"{percent(value)} ({value:.4f})"


@dataclass
class CliState:
    """Global options of one CLI invocation, shared with every command."""

    plugin_manager: PluginManager
    config_file: Path | None = None
    seed: int | None = None
    quiet: bool = False
    log_level: str | None = None

    def load_config(self, overrides: ConfigurationDict | None = None) -> RunConfig:
        """
        Build and validate the run configuration, then set up logging.

        Layers, last wins: provider defaults, the configuration file,
        ``MANEUVERML__`` environment variables, ``--seed``, then the command's
        own option overrides.
        """
        manager = ConfigurationManager()
        flags: ConfigurationDict = {}
        if self.seed is not None:
            flags = {"synth": {"seed": self.seed}, "split": {"seed": self.seed}}
        if overrides:
            flags = manager.merge_with_user_overrides(flags, overrides)

        factory = ConfigurationFactory(manager)
        config = factory.create_run_config(
            self.plugin_manager, self.config_file, overrides=flags
        )
        level = "WARNING" if self.quiet else self.log_level
        setup_logging(config.logging, level=level)
        return config

    @property
    def console(self) -> Console:
        return Console(quiet=self.quiet)

    def select_classifiers(self, algorithm: str) -> list[Classifier]:
        """
        Classifiers named by an ``--algorithm`` option value.

        Raises:
            ConfigError: If the name is neither ``all`` nor a registered classifier
        """
        if algorithm == ALL_ALGORITHMS:
            return self.plugin_manager.get_classifiers()
        return [self.plugin_manager.get_classifier(algorithm)]
