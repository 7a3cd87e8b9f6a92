# ABOUTME: Configuration manager for merging provider defaults and user overrides
# ABOUTME: Loads YAML files and MANEUVERML__SECTION__KEY environment overrides

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import TYPE_CHECKING, Any

import yaml

from maneuverml.constants import ENV_OVERRIDE_PREFIX
from maneuverml.errors import ConfigError

if TYPE_CHECKING:
    from collections.abc import Mapping

    from .models import ConfigurationDict

__all__ = ["ConfigurationManager"]

logger = logging.getLogger(__name__)


class ConfigurationManager:
    """
    Manager for merging configuration layers.

    Handles configuration merging with specific rules:
    - Scalar values: last wins (override)
    - Lists: replaced whole by the later layer
    - Dictionaries: recursive merge
    """

    def merge_plugin_configurations(
        self, configs: list[ConfigurationDict | None]
    ) -> ConfigurationDict:
        """
        Merge multiple provider configurations in order.

        Args:
            configs: List of configuration dictionaries (may contain None values)

        Returns:
            Merged configuration dictionary
        """
        valid_configs = [config for config in configs if config is not None]
        if not valid_configs:
            return {}

        result = self._deep_copy_dict(valid_configs[0])
        for config in valid_configs[1:]:
            result = self._merge_dicts(result, config)
        return result

    def merge_with_user_overrides(
        self, base_config: ConfigurationDict, user_config: ConfigurationDict
    ) -> ConfigurationDict:
        """
        Merge an override layer over a base configuration.

        The override layer wins for every key it sets; neither input is mutated.
        """
        result = self._deep_copy_dict(base_config)
        return self._merge_dicts(result, user_config)

    def load_configuration_file(self, file_path: str | Path) -> ConfigurationDict:
        """
        Load configuration from a YAML file.

        Args:
            file_path: Path to YAML configuration file

        Returns:
            Configuration dictionary (empty for an empty file)

        Raises:
            ConfigError: If the file is missing, unreadable, not valid YAML, or
                not a mapping at the top level
        """
        path = Path(file_path).expanduser()
        try:
            with path.open(encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            msg = f"invalid YAML in {path}: {e}"
            raise ConfigError(msg) from e
        except OSError as e:
            msg = f"cannot read configuration file {path}: {e.strerror}"
            raise ConfigError(msg) from e

        if data is None:
            return {}
        if not isinstance(data, dict):
            msg = f"configuration file {path} must hold a mapping"
            raise ConfigError(msg)
        logger.debug("Loaded configuration file %s", path)
        return data

    def environment_overrides(
        self, environ: Mapping[str, str] | None = None
    ) -> ConfigurationDict:
        """
        Collect ``MANEUVERML__SECTION__KEY=value`` variables into a document.

        Path segments are lower-cased; values are parsed as YAML scalars, so
        ``MANEUVERML__KNN__K=7`` yields the integer 7.

        Raises:
            ConfigError: If a variable names an empty path segment or its value
                is not valid YAML
        """
        environ = os.environ if environ is None else environ
        overrides: ConfigurationDict = {}
        for name in sorted(environ):
            if not name.startswith(ENV_OVERRIDE_PREFIX):
                continue
            path = name[len(ENV_OVERRIDE_PREFIX) :]
            segments = [segment.lower() for segment in path.split("__")]
            if not all(segments):
                msg = f"malformed configuration override variable {name}"
                raise ConfigError(msg)
            try:
                value = yaml.safe_load(environ[name])
            except yaml.YAMLError as e:
                msg = f"invalid value for {name}: {e}"
                raise ConfigError(msg) from e

            node = overrides
            for segment in segments[:-1]:
                child = node.setdefault(segment, {})
                if not isinstance(child, dict):
                    msg = f"{name} conflicts with another override"
                    raise ConfigError(msg)
                node = child
            node[segments[-1]] = value
            logger.debug("Configuration override from %s", name)
        return overrides

    def _merge_dicts(
        self, dict1: ConfigurationDict, dict2: ConfigurationDict
    ) -> ConfigurationDict:
        """
        Recursively merge two dictionaries with the merging rules above.

        Args:
            dict1: Base dictionary
            dict2: Dictionary to merge into base

        Returns:
            Merged dictionary
        """
        result = dict1.copy()

        for key, value in dict2.items():
            existing_value = result.get(key)
            if isinstance(existing_value, dict) and isinstance(value, dict):
                result[key] = self._merge_dicts(existing_value, value)
            else:
                # Scalars and lists: last wins
                result[key] = self._deep_copy_value(value)

        return result

    def _deep_copy_dict(self, d: ConfigurationDict) -> ConfigurationDict:
        return {key: self._deep_copy_value(value) for key, value in d.items()}

    def _deep_copy_value(self, value: Any) -> Any:
        if isinstance(value, dict):
            return self._deep_copy_dict(value)
        if isinstance(value, list):
            return [self._deep_copy_value(item) for item in value]
        return value
