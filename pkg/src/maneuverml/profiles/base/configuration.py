# ABOUTME: Base profile default configuration provider
# ABOUTME: Supplies the package defaults.yaml as the lowest configuration layer

from typing import Callable

import maneuverml.config
from maneuverml.config.models import ConfigurationProvider
from maneuverml.config.providers import FileConfigurationProvider
from maneuverml.plugins.registry import hookimpl


@hookimpl
def register_configuration_provider(
    register: Callable[[ConfigurationProvider], None],
) -> None:
    register(
        FileConfigurationProvider("defaults.yaml", plugin_module=maneuverml.config)
    )
