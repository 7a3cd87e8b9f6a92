# ABOUTME: CLI plugin providing the synth command
# ABOUTME: Writes a seeded synthetic trajectory corpus and prints its label balance

from __future__ import annotations

from pathlib import Path

import click
from rich.table import Table

from maneuverml.metrics.report import percent
from maneuverml.pipeline import synthesize_corpus
from maneuverml.plugins.registry import hookimpl

from .common import CliState

__all__ = ["SynthCliPlugin"]


class SynthCliPlugin:
    """CLI plugin for synthetic corpus generation."""

    @hookimpl
    def register_commands(self, cli: click.Group) -> None:
        cli.add_command(self._create_synth_command())

    def _create_synth_command(self) -> click.Command:
        @click.command()
        @click.option(
            "--out-dir",
            type=click.Path(file_okay=False, path_type=Path),
            default=None,
            help="Corpus directory to write (default: paths.corpus_dir)",
        )
        @click.option(
            "--count",
            type=click.IntRange(min=1),
            default=200,
            show_default=True,
            help="Number of trajectories to generate",
        )
        @click.pass_obj
        def synth(state: CliState, out_dir: Path | None, count: int) -> None:
            """Generate a labelled synthetic trajectory corpus.

            Trajectories are written as traj-NNNNN.csv; labels are derived
            with the configured maneuver threshold.
            """
            overrides = {"paths": {"corpus_dir": str(out_dir)}} if out_dir else None
            config = state.load_config(overrides)
            result = synthesize_corpus(config, config.paths.corpus_dir, count)

            table = Table(title="Synthetic corpus", header_style="bold magenta")
            table.add_column("Label", style="cyan")
            table.add_column("Trajectories", justify="right")
            table.add_column("Share", justify="right")
            total = len(result.labels)
            for label, n in (
                ("maneuver", result.maneuvers),
                ("cruise", result.cruises),
            ):
                table.add_row(label, str(n), percent(n / total))
            state.console.print(table)
            state.console.print(f"Wrote {total} trajectories to {result.directory}")

        return synth
