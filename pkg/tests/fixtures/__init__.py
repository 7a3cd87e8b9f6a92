# ABOUTME: Test fixtures: data builders, mock plugins and plugin manager factories
# ABOUTME: Shared by the unit and integration suites

from __future__ import annotations

from .builders import (
    TEST_MANEUVER_THRESHOLD,
    make_dataset,
    make_run_config,
    make_trajectory,
    random_dataset,
    random_trajectory,
    run_config_document,
    separable_dataset,
    write_config_file,
    xor_dataset,
)
from .factory import create_loaded_test_plugin_manager, create_test_cli
from .mock_plugins import (
    MissingFitClassifier,
    MockConfigurationProvider,
    NamedClassifier,
    PriorClassifier,
    PriorModel,
    WrongSignatureClassifier,
)

__all__ = [
    "TEST_MANEUVER_THRESHOLD",
    "MissingFitClassifier",
    "MockConfigurationProvider",
    "NamedClassifier",
    "PriorClassifier",
    "PriorModel",
    "WrongSignatureClassifier",
    "create_loaded_test_plugin_manager",
    "create_test_cli",
    "make_dataset",
    "make_run_config",
    "make_trajectory",
    "random_dataset",
    "random_trajectory",
    "run_config_document",
    "separable_dataset",
    "write_config_file",
    "xor_dataset",
]
