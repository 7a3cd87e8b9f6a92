# ABOUTME: Shared pytest fixtures applied to every test
# ABOUTME: Isolates tests from the caller's environment and from logging setup

from __future__ import annotations

import logging
import os
from collections.abc import Iterator

import pytest

from maneuverml.constants import ENV_OVERRIDE_PREFIX, MANEUVERML_CONFIG_ENV


@pytest.fixture(autouse=True)
def _isolated_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Drop configuration variables exported in the developer's shell."""
    monkeypatch.delenv(MANEUVERML_CONFIG_ENV, raising=False)
    for name in list(os.environ):
        if name.startswith(ENV_OVERRIDE_PREFIX):
            monkeypatch.delenv(name)


@pytest.fixture(autouse=True)
def _restore_root_logger() -> Iterator[None]:
    """Remove handlers installed by setup_logging during a test."""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in root.handlers[:]:
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(level)
