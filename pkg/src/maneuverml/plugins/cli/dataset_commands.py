# ABOUTME: CLI plugin providing the build-dataset command
# ABOUTME: Turns the trajectory corpus into the feature dataset CSV

from __future__ import annotations

from pathlib import Path
from typing import Any

import click
from rich.table import Table

from maneuverml.pipeline import build_dataset_file, feature_statistics
from maneuverml.plugins.registry import hookimpl

from .common import CliState

__all__ = ["DatasetCliPlugin"]


class DatasetCliPlugin:
    """CLI plugin for feature extraction and dataset assembly."""

    @hookimpl
    def register_commands(self, cli: click.Group) -> None:
        cli.add_command(self._create_build_dataset_command())

    def _create_build_dataset_command(self) -> click.Command:
        @click.command("build-dataset")
        @click.option(
            "--corpus-dir",
            type=click.Path(file_okay=False, path_type=Path),
            default=None,
            help="Trajectory corpus to read (default: paths.corpus_dir)",
        )
        @click.option(
            "--out",
            "dataset_file",
            type=click.Path(dir_okay=False, path_type=Path),
            default=None,
            help="Dataset CSV to write (default: paths.dataset_file)",
        )
        @click.option(
            "--lenient",
            is_flag=True,
            help="Skip unreadable corpus files instead of aborting",
        )
        @click.pass_obj
        def build_dataset(
            state: CliState,
            corpus_dir: Path | None,
            dataset_file: Path | None,
            lenient: bool,
        ) -> None:
            """Extract features from every trajectory and write the dataset CSV."""
            paths: dict[str, str] = {}
            if corpus_dir:
                paths["corpus_dir"] = str(corpus_dir)
            if dataset_file:
                paths["dataset_file"] = str(dataset_file)
            overrides: dict[str, Any] = {"paths": paths} if paths else {}
            if lenient:
                overrides["corpus"] = {"strict": False}
            config = state.load_config(overrides)

            dataset = build_dataset_file(config)

            table = Table(title="Feature summary", header_style="bold magenta")
            table.add_column("Feature", style="cyan")
            for heading in ("Min", "Mean", "Max", "Std"):
                table.add_column(heading, justify="right")
            for stats in feature_statistics(dataset):
                table.add_row(
                    stats.name,
                    f"{stats.minimum:.6g}",
                    f"{stats.mean:.6g}",
                    f"{stats.maximum:.6g}",
                    f"{stats.std:.6g}",
                )
            negatives, positives = dataset.class_counts()
            state.console.print(table)
            state.console.print(
                f"{dataset.n_rows} rows: {positives} maneuver, {negatives} cruise "
                f"-> {config.paths.dataset_file}"
            )

        return build_dataset
