# ABOUTME: CLI plugin providing the train and evaluate commands
# ABOUTME: Fits registered classifiers, then scores them with the full metric suite

from __future__ import annotations

from typing import TYPE_CHECKING

import click
from rich.table import Table

from maneuverml.metrics.report import load_reference_results, percent
from maneuverml.pipeline import evaluate_models, train_models
from maneuverml.plugins.registry import hookimpl

from .common import ALL_ALGORITHMS, CliState, format_ratio

if TYPE_CHECKING:
    from rich.console import Console

    from maneuverml.metrics.models import MetricsReport
    from maneuverml.pipeline import TrainResult

__all__ = ["ModelCliPlugin"]

_algorithm_option = click.option(
    "--algorithm",
    default=ALL_ALGORITHMS,
    show_default=True,
    help="Classifier name, or 'all' for every registered classifier",
)


def _print_training(console: Console, results: list[TrainResult]) -> None:
    table = Table(title="Training", header_style="bold magenta")
    table.add_column("Algorithm", style="cyan")
    table.add_column("Train rows", justify="right")
    table.add_column("Steps", justify="right")
    table.add_column("Initial loss", justify="right")
    table.add_column("Final loss", justify="right")
    table.add_column("Model file", style="dim")
    for result in results:
        curve = result.curve
        steps, first, last = "-", "-", "-"
        if curve:
            steps = str(len(curve) - 1)
            first, last = f"{curve[0]:.6f}", f"{curve[-1]:.6f}"
        table.add_row(
            result.model.algorithm,
            str(result.train_rows),
            steps,
            first,
            last,
            str(result.path),
        )
    console.print(table)


def _print_comparison(console: Console, report: MetricsReport) -> None:
    table = Table(
        title=f"Test split: {report.test_rows} rows, threshold "
        f"{report.score_threshold:g}",
        header_style="bold magenta",
    )
    table.add_column("Algorithm", style="cyan")
    for heading in (
        "F1",
        "Accuracy",
        "Precision macro",
        "Precision weighted",
        "Recall macro",
        "Recall weighted",
        "Specificity",
        "FPR",
        "AUC",
    ):
        table.add_column(heading, justify="right")
    for r in report.by_f1():
        table.add_row(
            r.algorithm,
            format_ratio(r.f1),
            percent(r.accuracy),
            percent(r.precision_macro),
            percent(r.precision_weighted),
            percent(r.recall_macro),
            percent(r.recall_weighted),
            percent(r.specificity),
            percent(r.fpr),
            f"{r.auc:.4f}",
        )
    console.print(table)


def _print_reference(console: Console) -> None:
    table = Table(
        title="Published reference results (different, unreleased corpus)",
        header_style="bold blue",
    )
    table.add_column("Algorithm", style="cyan")
    for heading in (
        "Precision macro",
        "Precision weighted",
        "Recall macro",
        "Recall weighted",
        "F1",
    ):
        table.add_column(heading, justify="right")
    for entry in load_reference_results().values():
        table.add_row(
            entry["label"],
            percent(entry["precision_macro"]),
            percent(entry["precision_weighted"]),
            percent(entry["recall_macro"]),
            percent(entry["recall_weighted"]),
            percent(entry["f1"]),
        )
    console.print(table)


class ModelCliPlugin:
    """CLI plugin for model training and evaluation."""

    @hookimpl
    def register_commands(self, cli: click.Group) -> None:
        cli.add_command(self._create_train_command())
        cli.add_command(self._create_evaluate_command())

    def _create_train_command(self) -> click.Command:
        @click.command()
        @_algorithm_option
        @click.pass_obj
        def train(state: CliState, algorithm: str) -> None:
            """Split the dataset, fit classifiers and save their model documents."""
            names = state.plugin_manager.get_classifier_names()
            if algorithm != ALL_ALGORITHMS and algorithm not in names:
                msg = f"unknown algorithm {algorithm!r}"
                raise click.BadParameter(msg, param_hint="'--algorithm'")
            config = state.load_config()
            classifiers = state.select_classifiers(algorithm)
            results = train_models(config, classifiers)
            _print_training(state.console, results)

        return train

    def _create_evaluate_command(self) -> click.Command:
        @click.command()
        @_algorithm_option
        @click.option(
            "--show-reference",
            is_flag=True,
            help="Also print the published reference results",
        )
        @click.pass_obj
        def evaluate(state: CliState, algorithm: str, show_reference: bool) -> None:
            """Score saved models on the test split; write report and ROC chart.

            Writes report.yaml, roc.csv and roc.svg to paths.report_dir and
            prints the comparison table sorted by F1.
            """
            loaders = state.plugin_manager.get_model_loaders()
            algorithms = None
            if algorithm != ALL_ALGORITHMS:
                if algorithm not in loaders:
                    msg = f"unknown algorithm {algorithm!r}"
                    raise click.BadParameter(msg, param_hint="'--algorithm'")
                algorithms = [algorithm]
            config = state.load_config()

            result = evaluate_models(config, loaders, algorithms)

            console = state.console
            _print_comparison(console, result.report)
            if show_reference:
                _print_reference(console)
            console.print(f"Report: {result.report_path}")
            console.print(f"ROC: {result.roc_svg}, {result.roc_csv}")

        return evaluate
