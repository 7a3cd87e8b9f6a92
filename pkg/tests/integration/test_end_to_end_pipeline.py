# ABOUTME: End-to-end tests of synth -> build-dataset -> train -> evaluate via the CLI
# ABOUTME: Two runs with the same configuration must produce byte-identical artifacts

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest
import yaml
from click.testing import CliRunner

from tests.fixtures import create_test_cli, write_config_file

if TYPE_CHECKING:
    from pathlib import Path

PIPELINE = (
    ("synth", "--count", "200"),
    ("build-dataset",),
    ("train",),
    ("evaluate",),
)

ARTIFACTS = (
    "dataset.csv",
    "models/logreg.model.yaml",
    "models/knn.model.yaml",
    "models/lda.model.yaml",
    "models/gbdt.model.yaml",
    "report/report.yaml",
    "report/roc.csv",
    "report/roc.svg",
)


@pytest.fixture(autouse=True)
def _test_profile(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MANEUVERML_PROFILE", "test")


def _run_pipeline(base_dir: Path) -> None:
    config_file = write_config_file(base_dir / "config.yaml", base_dir)
    cli = create_test_cli()
    runner = CliRunner()
    for command in PIPELINE:
        result = runner.invoke(cli, ["--config", str(config_file), *command])
        assert result.exit_code == 0, f"{command[0]} failed: {result.output}"


class TestEndToEndPipeline:
    """Run every pipeline stage through the command line."""

    def test_pipeline_writes_every_artifact(self, tmp_path: Path) -> None:
        _run_pipeline(tmp_path)

        for artifact in ARTIFACTS:
            assert (tmp_path / artifact).is_file(), artifact
        assert len(list((tmp_path / "corpus").glob("traj-*.csv"))) == 200

    def test_report_covers_every_classifier(self, tmp_path: Path) -> None:
        _run_pipeline(tmp_path)

        report = yaml.safe_load((tmp_path / "report" / "report.yaml").read_text())
        algorithms = [entry["algorithm"] for entry in report["algorithms"]]
        assert algorithms == ["gbdt", "knn", "lda", "logreg"]
        assert report["test_rows"] == 40
        assert all(entry["auc"] >= 0.5 for entry in report["algorithms"])

        svg = (tmp_path / "report" / "roc.svg").read_text()
        assert svg.count('class="roc-curve"') == 4
        assert 'class="chance"' in svg

    def test_two_runs_are_byte_identical(self, tmp_path: Path) -> None:
        """Identical configuration and seeds reproduce every artifact exactly."""
        _run_pipeline(tmp_path / "first")
        _run_pipeline(tmp_path / "second")

        for artifact in ARTIFACTS:
            first = (tmp_path / "first" / artifact).read_bytes()
            second = (tmp_path / "second" / artifact).read_bytes()
            assert first == second, artifact

    def test_seed_flag_changes_the_corpus(self, tmp_path: Path) -> None:
        config_file = write_config_file(tmp_path / "config.yaml", tmp_path)
        cli = create_test_cli()
        runner = CliRunner()
        for seed, out_dir in (("1", "one"), ("2", "two")):
            result = runner.invoke(
                cli,
                [
                    "--config",
                    str(config_file),
                    "--seed",
                    seed,
                    "synth",
                    "--count",
                    "3",
                    "--out-dir",
                    str(tmp_path / out_dir),
                ],
            )
            assert result.exit_code == 0, result.output
        first = (tmp_path / "one" / "traj-00000.csv").read_bytes()
        second = (tmp_path / "two" / "traj-00000.csv").read_bytes()
        assert first != second
