# ABOUTME: Base profile logging configuration provider
# ABOUTME: Provides profile-sensitive logging configuration

import sys
from typing import Callable

from maneuverml.config.models import ConfigurationProvider
from maneuverml.config.providers import ProfileFileConfigurationProvider
from maneuverml.plugins.registry import hookimpl


@hookimpl
def register_configuration_provider(
    register: Callable[[ConfigurationProvider], None],
) -> None:
    """Register profile-sensitive logging configuration provider.

    This provider will look for logging.yaml in:
    - ../production/logging.yaml when MANEUVERML_PROFILE=production
    - ../test/logging.yaml when MANEUVERML_PROFILE=test
    - ../development/logging.yaml otherwise (the default)
    """
    register(
        ProfileFileConfigurationProvider(
            "logging.yaml", plugin_module=sys.modules[__name__]
        )
    )
