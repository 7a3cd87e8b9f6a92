# ABOUTME: Command-line interface for the maneuverml pipeline
# ABOUTME: Root click group with global flags; commands are contributed by plugins

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any, NoReturn

import click

from maneuverml import __version__
from maneuverml.constants import get_config_file
from maneuverml.dataset.models import MAX_SEED
from maneuverml.errors import EXIT_FAILURE, ManeuverError
from maneuverml.plugins.cli.common import CliState

if TYPE_CHECKING:
    from collections.abc import Sequence

    from maneuverml.plugins.registry import PluginManager

__all__ = ["ManeuverGroup", "create_cli", "main"]

logger = logging.getLogger(__name__)


def _fail(code: str, message: str, exit_code: int) -> NoReturn:
    click.echo(f"ERROR {code}: {message}", err=True)
    sys.exit(exit_code)


class ManeuverGroup(click.Group):
    """
    Root group that reports every failure as one ``ERROR <code>: <message>`` line.

    Library errors exit with their own exit code; click usage errors exit 2.
    """

    def main(  # type: ignore[override]
        self,
        args: Sequence[str] | None = None,
        prog_name: str | None = None,
        complete_var: str | None = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        if not standalone_mode:
            return super().main(
                args, prog_name, complete_var, standalone_mode=False, **extra
            )
        try:
            result = super().main(
                args, prog_name, complete_var, standalone_mode=False, **extra
            )
        except ManeuverError as e:
            logger.debug("Command failed", exc_info=True)
            _fail(e.code, str(e), e.exit_code)
        except click.UsageError as e:
            _fail("USAGE", e.format_message(), e.exit_code)
        except click.ClickException as e:
            _fail("CLI", e.format_message(), e.exit_code)
        except click.Abort:
            _fail("ABORTED", "aborted by user", EXIT_FAILURE)
        # Non-standalone click returns the exit code of ctx.exit() (e.g. --help)
        sys.exit(result if isinstance(result, int) else 0)


def create_cli(plugin_manager: PluginManager) -> click.Group:
    """
    Build the root command group with every plugin-registered command.

    The plugin manager must already have loaded its plugins, so that
    classifiers and configuration providers are available to commands.
    """

    @click.group(cls=ManeuverGroup)
    @click.option(
        "--config",
        "config_file",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="YAML configuration file (default: $MANEUVERML_CONFIG)",
    )
    @click.option(
        "--seed",
        type=click.IntRange(0, MAX_SEED),
        default=None,
        help="Seed for both the synthetic corpus and the train/test split",
    )
    @click.option(
        "--quiet", is_flag=True, help="Log warnings only and print no summaries"
    )
    @click.option(
        "--log-level",
        type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
        default=None,
        help="Set logging level (default: from the profile logging.yaml)",
    )
    @click.version_option(version=__version__, prog_name="maneuverml")
    @click.pass_context
    def cli(
        ctx: click.Context,
        config_file: Path | None,
        seed: int | None,
        quiet: bool,
        log_level: str | None,
    ) -> None:
        """Maneuver classification of aerial-vehicle trajectories.

        Pipeline: synth -> build-dataset -> train -> evaluate. Every setting
        can be overridden with MANEUVERML__SECTION__KEY=value.
        """
        env_config = get_config_file()
        ctx.obj = CliState(
            plugin_manager=plugin_manager,
            config_file=config_file or (Path(env_config) if env_config else None),
            seed=seed,
            quiet=quiet,
            log_level=log_level.upper() if log_level else None,
        )

    plugin_manager.load_cli_commands(cli)
    return cli


def main() -> None:
    """Main CLI entry point."""
    from maneuverml.profiles.factory import create_plugin_manager_from_env

    # Factory handles discovery of both base and profile-specific plugins
    plugin_manager = create_plugin_manager_from_env()
    plugin_manager.discover_plugins()
    plugin_manager.load_plugins()
    create_cli(plugin_manager)()


if __name__ == "__main__":
    main()
