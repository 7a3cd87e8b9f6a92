# ABOUTME: Registers the validate CLI commands
# ABOUTME: Part of the base profile, so every profile gets them
from typing import Any, Callable

from maneuverml.plugins.cli.validate_commands import ValidateCliPlugin
from maneuverml.plugins.registry import hookimpl


@hookimpl
def register_plugin(register: Callable[[Any], None]) -> None:
    register(ValidateCliPlugin())
