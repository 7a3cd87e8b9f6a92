# ABOUTME: CLI plugin providing the validate command
# ABOUTME: Dry-runs the configuration and corpus checks without training

from __future__ import annotations

import click

from maneuverml.errors import ValidationFailed
from maneuverml.pipeline import validate_run
from maneuverml.plugins.registry import hookimpl

from .common import CliState

__all__ = ["ValidateCliPlugin"]


class ValidateCliPlugin:
    """CLI plugin for configuration and corpus validation."""

    @hookimpl
    def register_commands(self, cli: click.Group) -> None:
        cli.add_command(self._create_validate_command())

    def _create_validate_command(self) -> click.Command:
        @click.command()
        @click.pass_obj
        def validate(state: CliState) -> None:
            """Validate the configuration, classifiers and trajectory corpus.

            Performs a dry run of the pipeline inputs without training.
            Useful for checking a configuration before a long run.
            """
            config = state.load_config()
            checks = validate_run(config, state.plugin_manager.get_classifiers())

            console = state.console
            console.print("[bold blue]Validating maneuverml run")
            for check in checks:
                status = "✓" if check.passed else "✗"
                color = "green" if check.passed else "red"
                console.print(f"  {status} {check.name}: {check.detail}", style=color)

            failed = [check.name for check in checks if not check.passed]
            if failed:
                msg = f"{len(failed)} check(s) failed: {', '.join(failed)}"
                raise ValidationFailed(msg)
            console.print("\n[bold green]✓ All validation checks passed!")

        return validate
