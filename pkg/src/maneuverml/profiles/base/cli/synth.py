# ABOUTME: Registers the synthetic corpus CLI commands
# ABOUTME: Part of the base profile, so every profile gets them
from typing import Any, Callable

from maneuverml.plugins.cli.synth_commands import SynthCliPlugin
from maneuverml.plugins.registry import hookimpl


@hookimpl
def register_plugin(register: Callable[[Any], None]) -> None:
    register(SynthCliPlugin())
