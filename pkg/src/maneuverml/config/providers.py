# ABOUTME: File-based configuration providers registered by profile plugins
# ABOUTME: Resolves YAML files relative to the registering module or profile

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

from maneuverml.constants import get_profile
from maneuverml.errors import ConfigError

if TYPE_CHECKING:
    from types import ModuleType

__all__ = ["FileConfigurationProvider", "ProfileFileConfigurationProvider"]


def _module_dir(plugin_module: ModuleType) -> Path:
    return Path(plugin_module.__file__ or "").parent


class FileConfigurationProvider:
    """
    File-based configuration provider that loads YAML configuration files.

    Supports both absolute and relative file paths. When a plugin module is provided,
    relative paths are resolved relative to the plugin module's directory.
    """

    def __init__(
        self,
        file_path: str,
        plugin_module: ModuleType | None = None,
        config_id: str | None = None,
    ):
        if plugin_module and not Path(file_path).is_absolute():
            self.file_path = _module_dir(plugin_module) / file_path
        else:
            self.file_path = Path(file_path)

        self._config_id = config_id or Path(file_path).stem

    def get_default_configuration(self) -> str:
        """
        Load and return YAML configuration as string.

        Raises:
            ConfigError: If the file cannot be read
        """
        try:
            return self.file_path.read_text(encoding="utf-8")
        except OSError as e:
            msg = f"cannot read default configuration {self.file_path}: {e.strerror}"
            raise ConfigError(msg) from e

    def get_configuration_id(self) -> str:
        return self._config_id


class ProfileFileConfigurationProvider:
    """
    Profile-sensitive configuration provider that loads YAML configuration files.

    Looks for the file in the sibling profile directory of the module that
    registers the provider, chosen by ``MANEUVERML_PROFILE``. Registered from
    ``base/logging.py`` with ``MANEUVERML_PROFILE=production``, it reads
    ``production/logging.yaml``.
    """

    def __init__(
        self,
        file_path: str,
        plugin_module: ModuleType | None = None,
        config_id: str | None = None,
    ):
        self.file_path = file_path
        self.plugin_module = plugin_module
        self._config_id = config_id or Path(file_path).stem

    def _resolve_profile_file_path(self) -> Path:
        """Resolve the full path to the configuration file based on current profile."""
        if Path(self.file_path).is_absolute():
            return Path(self.file_path)

        if self.plugin_module is None:
            msg = "plugin_module is required for relative path resolution"
            raise ValueError(msg)

        # Go up one level and then into the profile directory
        profile_dir = _module_dir(self.plugin_module).parent / get_profile()
        return profile_dir / self.file_path

    def get_default_configuration(self) -> str:
        """
        Load and return YAML configuration as string from the profile directory.

        Raises:
            ConfigError: If the active profile has no such file
        """
        config_path = self._resolve_profile_file_path()
        try:
            return config_path.read_text(encoding="utf-8")
        except OSError as e:
            msg = (
                f"configuration file not found: {config_path} "
                f"(profile {get_profile()})"
            )
            raise ConfigError(msg) from e

    def get_configuration_id(self) -> str:
        return self._config_id
