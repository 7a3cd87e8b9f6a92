# ABOUTME: Configuration factory that layers provider defaults, user file and env
# ABOUTME: Produces the merged document and the validated RunConfig built from it

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any

import yaml

from maneuverml.errors import ConfigError

from .manager import ConfigurationManager
from .models import RunConfig

if TYPE_CHECKING:
    from collections.abc import Mapping
    from pathlib import Path

    from maneuverml.plugins.registry import PluginManager

    from .models import ConfigurationDict

__all__ = ["ConfigurationFactory"]

logger = logging.getLogger(__name__)


class ConfigurationFactory:
    """
    Factory for the run configuration.

    Handles the complete configuration creation process:
    1. Collects YAML defaults from registered configuration providers
    2. Merges them in registration order
    3. Applies the user configuration file, if any
    4. Applies ``MANEUVERML__SECTION__KEY`` environment overrides
    5. Applies explicit overrides (command-line flags)
    """

    def __init__(self, config_manager: ConfigurationManager | None = None):
        self._config_manager = config_manager or ConfigurationManager()

    def load_configuration(
        self,
        plugin_manager: PluginManager,
        config_file: str | Path | None = None,
        environ: Mapping[str, str] | None = None,
        overrides: ConfigurationDict | None = None,
    ) -> ConfigurationDict:
        """
        Build the merged configuration document.

        Args:
            plugin_manager: Plugin manager with registered configuration providers
            config_file: User configuration file (optional)
            environ: Environment to read overrides from (defaults to os.environ)
            overrides: Final override layer, typically from CLI flags

        Returns:
            Merged configuration document, not yet validated
        """
        merged = self._config_manager.merge_plugin_configurations(
            self._collect_plugin_configurations(plugin_manager)
        )
        layers: list[ConfigurationDict] = []
        if config_file is not None:
            layers.append(self._config_manager.load_configuration_file(config_file))
        layers.append(self._config_manager.environment_overrides(environ))
        if overrides:
            layers.append(overrides)

        for layer in layers:
            merged = self._config_manager.merge_with_user_overrides(merged, layer)
        return merged

    def create_run_config(
        self,
        plugin_manager: PluginManager,
        config_file: str | Path | None = None,
        environ: Mapping[str, str] | None = None,
        overrides: ConfigurationDict | None = None,
    ) -> RunConfig:
        """
        Build and validate the run configuration.

        Raises:
            ConfigError: If any layer is unreadable or the merged document is invalid
        """
        document = self.load_configuration(
            plugin_manager, config_file, environ, overrides
        )
        config = RunConfig.from_dict(document)
        logger.debug("Run configuration validated: %s", config)
        return config

    def dump_configuration(self, config: RunConfig) -> str:
        """YAML text of a validated configuration, in section order."""
        return yaml.safe_dump(config.to_dict(), sort_keys=False)

    def _collect_plugin_configurations(
        self, plugin_manager: PluginManager
    ) -> list[ConfigurationDict | None]:
        """
        Collect configuration dictionaries from all registered providers.

        Raises:
            ConfigError: If a provider's YAML is invalid or not a mapping
        """
        config_dicts: list[ConfigurationDict | None] = []
        for provider in plugin_manager.get_configuration_providers():
            config_id = provider.get_configuration_id()
            try:
                config_data: Any = yaml.safe_load(provider.get_default_configuration())
            except yaml.YAMLError as e:
                msg = f"invalid YAML from configuration provider {config_id}: {e}"
                raise ConfigError(msg) from e
            if config_data is not None and not isinstance(config_data, dict):
                msg = f"configuration provider {config_id} must supply a mapping"
                raise ConfigError(msg)
            logger.debug("Collected configuration from provider %s", config_id)
            config_dicts.append(config_data)
        return config_dicts
