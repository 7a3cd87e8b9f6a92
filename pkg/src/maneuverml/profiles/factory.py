# ABOUTME: Profile-based plugin manager factory functions
# ABOUTME: Provides convenient functions to create plugin managers for
# different profiles

from maneuverml.constants import VALID_PROFILES, get_profile
from maneuverml.plugins.registry import PluginManager


def create_plugin_manager(profile: str) -> PluginManager:
    # Create plugin manager based on profile
    if profile in VALID_PROFILES:
        return _create_plugin_manager(profile)
    error_msg = f"Unknown profile: {profile}"
    raise ValueError(error_msg)


def _create_plugin_manager(profile: str) -> PluginManager:
    plugin_manager = PluginManager()
    # Discover base plugins first (classifiers, defaults, CLI commands)
    plugin_manager.discover_internal_profile_plugins("base")
    # Then discover profile-specific plugins (profile customizations)
    plugin_manager.discover_internal_profile_plugins(profile)
    return plugin_manager


def create_test_plugin_manager() -> PluginManager:
    """
    Create a plugin manager with test profile plugins and base plugins.

    Plugins are discovered but not loaded; call ``load_plugins()`` before use.

    Returns:
        PluginManager configured for testing
    """
    return _create_plugin_manager("test")


def create_default_plugin_manager() -> PluginManager:
    """
    Create a plugin manager with no internal plugins.

    Returns:
        PluginManager with no internal plugins
    """
    return PluginManager()


def create_plugin_manager_from_env() -> PluginManager:
    """
    Create a plugin manager based on the MANEUVERML_PROFILE environment variable.

    Defaults to 'development' if MANEUVERML_PROFILE is not set.

    Returns:
        PluginManager configured for the specified profile
    """
    return create_plugin_manager(get_profile())
