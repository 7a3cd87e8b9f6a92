# ABOUTME: Registers the train and evaluate CLI commands
# ABOUTME: Part of the base profile, so every profile gets them
from typing import Any, Callable

from maneuverml.plugins.cli.model_commands import ModelCliPlugin
from maneuverml.plugins.registry import hookimpl


@hookimpl
def register_plugin(register: Callable[[Any], None]) -> None:
    register(ModelCliPlugin())
