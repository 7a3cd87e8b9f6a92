# ABOUTME: Tests for configuration layering and environment overrides
# ABOUTME: Covers merge rules, YAML file loading and MANEUVERML__ variables

from __future__ import annotations

from pathlib import Path

import pytest

from maneuverml.config import ConfigurationManager
from maneuverml.errors import ConfigError


class TestMergeRules:
    """Test the merge rules shared by every configuration layer."""

    def test_scalar_last_wins(self) -> None:
        """Later providers override scalar values."""
        manager = ConfigurationManager()
        merged = manager.merge_plugin_configurations(
            [{"knn": {"k": 5}}, None, {"knn": {"k": 7}}]
        )
        assert merged == {"knn": {"k": 7}}

    def test_nested_dicts_merge(self) -> None:
        """Keys set by only one layer survive the merge."""
        manager = ConfigurationManager()
        merged = manager.merge_with_user_overrides(
            {"knn": {"k": 5, "metric": "euclidean"}, "split": {"seed": 0}},
            {"knn": {"k": 9}},
        )
        assert merged == {"knn": {"k": 9, "metric": "euclidean"}, "split": {"seed": 0}}

    def test_lists_are_replaced(self) -> None:
        """A later list replaces the earlier one instead of extending it."""
        manager = ConfigurationManager()
        merged = manager.merge_with_user_overrides(
            {"synth": {"altitude_peak_range": [12000.0, 16000.0]}},
            {"synth": {"altitude_peak_range": [13000.0, 14000.0]}},
        )
        assert merged["synth"]["altitude_peak_range"] == [13000.0, 14000.0]

    def test_inputs_are_not_mutated(self) -> None:
        manager = ConfigurationManager()
        base = {"knn": {"k": 5}}
        override = {"knn": {"k": 7}}
        manager.merge_with_user_overrides(base, override)
        assert base == {"knn": {"k": 5}}

    def test_no_configurations(self) -> None:
        assert ConfigurationManager().merge_plugin_configurations([None]) == {}


class TestConfigurationFile:
    """Test loading the user configuration file."""

    def test_load_mapping(self, tmp_path: Path) -> None:
        path = tmp_path / "config.yaml"
        path.write_text("feature:\n  maneuver_threshold: 11000\n")
        loaded = ConfigurationManager().load_configuration_file(path)
        assert loaded == {"feature": {"maneuver_threshold": 11000}}

    def test_empty_file_is_empty_mapping(self, tmp_path: Path) -> None:
        path = tmp_path / "config.yaml"
        path.write_text("")
        assert ConfigurationManager().load_configuration_file(path) == {}

    def test_missing_file(self, tmp_path: Path) -> None:
        """An unreadable file is a configuration error, not an OSError."""
        with pytest.raises(ConfigError, match="cannot read"):
            ConfigurationManager().load_configuration_file(tmp_path / "absent.yaml")

    def test_invalid_yaml(self, tmp_path: Path) -> None:
        path = tmp_path / "config.yaml"
        path.write_text("knn: [unclosed\n")
        with pytest.raises(ConfigError, match="invalid YAML"):
            ConfigurationManager().load_configuration_file(path)

    def test_top_level_list(self, tmp_path: Path) -> None:
        path = tmp_path / "config.yaml"
        path.write_text("- a\n- b\n")
        with pytest.raises(ConfigError, match="must hold a mapping"):
            ConfigurationManager().load_configuration_file(path)


class TestEnvironmentOverrides:
    """Test MANEUVERML__SECTION__KEY variables."""

    def test_values_are_yaml_scalars(self) -> None:
        """Values keep their YAML type."""
        overrides = ConfigurationManager().environment_overrides(
            {
                "MANEUVERML__KNN__K": "7",
                "MANEUVERML__CORPUS__STRICT": "false",
                "MANEUVERML__KNN__METRIC": "manhattan",
                "MANEUVERML__LDA__CONDITION_LIMIT": "1e12",
            }
        )
        assert overrides == {
            "knn": {"k": 7, "metric": "manhattan"},
            "corpus": {"strict": False},
            "lda": {"condition_limit": "1e12"},
        }

    def test_unrelated_variables_are_ignored(self) -> None:
        overrides = ConfigurationManager().environment_overrides(
            {"MANEUVERML_PROFILE": "test", "HOME": "/root"}
        )
        assert overrides == {}

    def test_empty_segment(self) -> None:
        with pytest.raises(ConfigError, match="malformed"):
            ConfigurationManager().environment_overrides({"MANEUVERML__KNN__": "3"})

    def test_conflicting_paths(self) -> None:
        """A scalar and a nested override for the same key cannot both apply."""
        with pytest.raises(ConfigError, match="conflicts"):
            ConfigurationManager().environment_overrides(
                {"MANEUVERML__KNN": "3", "MANEUVERML__KNN__K": "5"}
            )
