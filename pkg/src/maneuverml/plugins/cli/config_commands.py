# ABOUTME: CLI plugin providing the config show command
# ABOUTME: Prints the merged, validated run configuration as YAML

from __future__ import annotations

import click
from rich.syntax import Syntax

from maneuverml.config.factory import ConfigurationFactory
from maneuverml.plugins.registry import hookimpl

from .common import CliState

__all__ = ["ConfigCliPlugin"]


class ConfigCliPlugin:
    """CLI plugin for inspecting the layered configuration."""

    def __init__(self) -> None:
        self._config_factory = ConfigurationFactory()

    @hookimpl
    def register_commands(self, cli: click.Group) -> None:
        cli.add_command(self._create_config_group())

    def _create_config_group(self) -> click.Group:
        @click.group()
        def config() -> None:
            """Inspect the run configuration.

            The configuration combines package defaults, the profile logging
            file, the --config file and MANEUVERML__ environment overrides.
            """

        config.add_command(self._create_show_command())
        return config

    def _create_show_command(self) -> click.Command:
        @click.command()
        @click.pass_obj
        def show(state: CliState) -> None:
            """Show the merged configuration after validation."""
            run_config = state.load_config()
            text = self._config_factory.dump_configuration(run_config)
            if state.quiet:
                click.echo(text, nl=False)
            else:
                state.console.print(Syntax(text, "yaml"))

        return show
