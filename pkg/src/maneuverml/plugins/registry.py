# ABOUTME: Plugin system using pluggy for discovery and registration
# ABOUTME: Handles internal plugin discovery, external plugin loading, and validation

from __future__ import annotations

import importlib
import inspect
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable

import pluggy

import maneuverml
from maneuverml.classifiers.interfaces import Classifier
from maneuverml.config.models import ConfigurationProvider
from maneuverml.constants import get_profiles_dir
from maneuverml.errors import ConfigError

if TYPE_CHECKING:
    import click

    from maneuverml.classifiers.interfaces import ModelDocument, TrainedModel

__all__ = ["PluginHooks", "PluginManager", "hookimpl", "hookspec"]

logger = logging.getLogger(__name__)

# Hook specifications for plugin types
hookspec = pluggy.HookspecMarker("maneuverml")
hookimpl = pluggy.HookimplMarker("maneuverml")


class PluginHooks:
    """Plugin hook specifications."""

    @hookspec
    def register_plugin(self, register: Callable[[Any], None]) -> None:
        """Register a plugin object that implements several extension points."""

    @hookspec
    def register_configuration_provider(
        self, register: Callable[[ConfigurationProvider], None]
    ) -> None:
        """Register a configuration provider."""

    @hookspec
    def register_classifier(self, register: Callable[[Classifier], None]) -> None:
        """Register a classifier."""

    @hookspec
    def register_commands(self, cli: click.Group) -> None:
        """Register CLI commands with the main CLI group."""


class PluginManager:
    """Plugin manager that provides registration and discovery using pluggy."""

    def __init__(self, profiles_dir: Path | None = None) -> None:
        self._profiles_dir = profiles_dir or get_profiles_dir()
        self.pm = pluggy.PluginManager("maneuverml")
        self.pm.add_hookspecs(PluginHooks)

        self._configuration_providers: list[ConfigurationProvider] = []
        # Insertion order is registration order
        self._classifiers: dict[str, Classifier] = {}

        # Track registered plugins to prevent duplicate registration
        self._registered_plugins: list[Any] = []
        self._plugins_loaded: bool = False

    def discover_plugins(self) -> None:
        """Discover external plugins published under the ``maneuverml`` group."""
        self._discover_external_plugins()

    def discover_internal_profile_plugins(self, profile: str) -> list[str]:
        return self.discover_internal_plugins(self._profiles_dir / profile)

    def discover_internal_plugins(self, profile_dir: Path) -> list[str]:
        """
        Import every module under a profile directory and register it.

        Modules are visited in sorted path order so registration order, and
        with it classifier order, is stable.
        """
        discovered_modules: list[str] = []
        logger.debug("Scanning maneuverml profile at: %s", profile_dir)
        for py_file in sorted(profile_dir.rglob("*.py")):
            if py_file.name.startswith("__"):
                continue
            module_name = self._file_path_to_module_name(py_file)
            try:
                module = importlib.import_module(module_name)
            except ImportError:
                logger.exception("Error loading plugin module %s", module_name)
                continue
            if not self.pm.is_registered(module):
                self.pm.register(module)
            discovered_modules.append(module_name)
            logger.debug("Loaded plugin module: %s", module_name)

        logger.debug(
            "Internal plugin discovery complete. Loaded %d modules",
            len(discovered_modules),
        )
        return discovered_modules

    def _discover_external_plugins(self) -> None:
        count = self.pm.load_setuptools_entrypoints("maneuverml")
        logger.debug("External plugin discovery complete: %d plugin(s)", count)

    def load_plugins(self) -> None:
        """Call the registration hooks of every discovered plugin once."""
        if self._plugins_loaded:
            logger.debug("Plugins already loaded, skipping duplicate load_plugins()")
            return
        self._plugins_loaded = True

        # Plugin objects first: they may expose further hookimpl methods
        self.pm.hook.register_plugin(register=self._register_plugin)
        self.pm.hook.register_configuration_provider(
            register=self._register_configuration_provider
        )
        self.pm.hook.register_classifier(register=self._register_classifier)

    def load_cli_commands(self, cli: click.Group) -> None:
        """Load CLI command extensions from plugins."""
        self.pm.hook.register_commands(cli=cli)

    # Registration callback functions

    def _register_plugin(self, plugin: Any) -> None:
        if any(plugin is known for known in self._registered_plugins):
            logger.debug("Plugin already registered, skipping: %s", type(plugin))
            return
        self.pm.register(plugin)
        self._registered_plugins.append(plugin)
        logger.debug("Registered plugin object: %s", type(plugin).__name__)

    def _register_configuration_provider(self, provider: ConfigurationProvider) -> None:
        self.register_configuration_provider(provider)

    def _register_classifier(self, classifier: Classifier) -> None:
        self.register_classifier(classifier)

    # Public registration methods (for testing and direct use)

    def register_configuration_provider(self, provider: ConfigurationProvider) -> bool:
        """Register a configuration provider directly."""
        if not self._validate_and_log(provider, ConfigurationProvider):
            return False
        if any(provider is known for known in self._configuration_providers):
            logger.debug(
                "Configuration provider already registered, skipping: %s",
                provider.get_configuration_id(),
            )
            return False
        self._configuration_providers.append(provider)
        return True

    def register_classifier(self, classifier: Classifier) -> bool:
        """
        Register a classifier directly.

        Raises:
            ConfigError: If another classifier already uses the same name
        """
        if not self._validate_and_log(classifier, Classifier):
            return False
        name = classifier.name
        if name in self._classifiers:
            if self._classifiers[name] is classifier:
                return False
            msg = f"duplicate classifier name {name!r}"
            raise ConfigError(msg)
        self._classifiers[name] = classifier
        return True

    # Plugin access methods

    def get_configuration_providers(self) -> list[ConfigurationProvider]:
        return self._configuration_providers.copy()

    def get_classifiers(self) -> list[Classifier]:
        """Registered classifiers in registration order."""
        return list(self._classifiers.values())

    def get_classifier_names(self) -> list[str]:
        return list(self._classifiers)

    def get_classifier(self, name: str) -> Classifier:
        """
        Look up a classifier by name.

        Raises:
            ConfigError: If no classifier has that name
        """
        try:
            return self._classifiers[name]
        except KeyError:
            known = ", ".join(self._classifiers) or "none"
            msg = f"unknown algorithm {name!r} (registered: {known})"
            raise ConfigError(msg) from None

    def get_model_loaders(self) -> dict[str, Callable[[ModelDocument], TrainedModel]]:
        """``from_document`` of every classifier, keyed by algorithm tag."""
        return {name: c.from_document for name, c in self._classifiers.items()}

    def validate_plugin(self, plugin: Any, protocol_class: type) -> bool:
        """Validate that a plugin implements the required protocol."""
        if plugin is None:
            logger.error("Attempted to validate None as %s", protocol_class.__name__)
            return False

        for method_name in self._get_protocol_methods(protocol_class):
            plugin_method = getattr(plugin, method_name, None)
            if plugin_method is None or not callable(plugin_method):
                logger.error(
                    "Plugin %s missing method: %s", type(plugin).__name__, method_name
                )
                return False
            if not self._accepts_arguments(plugin_method, protocol_class, method_name):
                logger.error(
                    "Plugin %s method %s has invalid signature",
                    type(plugin).__name__,
                    method_name,
                )
                return False

        for attribute in self._get_protocol_attributes(protocol_class):
            if not hasattr(plugin, attribute):
                logger.error(
                    "Plugin %s missing attribute: %s", type(plugin).__name__, attribute
                )
                return False

        logger.debug("Plugin validation passed for %s", type(plugin).__name__)
        return True

    def _validate_and_log(self, plugin: Any, protocol_class: type) -> bool:
        """Validate a plugin and log the result with auto-generated messages."""
        if self.validate_plugin(plugin, protocol_class):
            logger.debug(
                "Registered %s: %s", protocol_class.__name__, type(plugin).__name__
            )
            return True
        logger.error(
            "%s validation failed: %s", protocol_class.__name__, type(plugin).__name__
        )
        return False

    def _accepts_arguments(
        self, method: Any, protocol_class: type, method_name: str
    ) -> bool:
        """Check the plugin method takes as many arguments as the protocol's."""
        try:
            expected = inspect.signature(getattr(protocol_class, method_name))
            actual = inspect.signature(method)
        except (TypeError, ValueError):
            return True
        n_expected = len(expected.parameters) - 1  # without self
        try:
            actual.bind(*range(n_expected))
        except TypeError:
            return False
        return True

    def _get_protocol_methods(self, protocol_class: type) -> list[str]:
        return [
            name
            for name in dir(protocol_class)
            if not name.startswith("_") and callable(getattr(protocol_class, name))
        ]

    def _get_protocol_attributes(self, protocol_class: type) -> list[str]:
        return [
            name
            for name in getattr(protocol_class, "__annotations__", {})
            if not name.startswith("_")
        ]

    def _file_path_to_module_name(self, py_file: Path) -> str:
        """Convert a Python file path to its corresponding module name.

        Args:
            py_file: Path to a Python file within the maneuverml package

        Returns:
            Module name (e.g., "maneuverml.profiles.base.classifiers")
        """
        package_path = Path(maneuverml.__file__).parent
        rel_path = py_file.relative_to(package_path)
        return "maneuverml." + ".".join(rel_path.with_suffix("").parts)
