"""Shared test fixtures for the hurstlab test suite.

The _isolate_hurstlab_config fixture (autouse) keeps HurstLabConfig away from
the user's real ~/.hurstlab/config.json and HURSTLAB_ environment variables,
and points HOME at a temp dir so the CLI's file log sink writes there.
"""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from hurstlab.config.schema import HurstLabConfig
from hurstlab.core.series import Profile
from tests.helpers import random_walk


@pytest.fixture(autouse=True)
def _isolate_hurstlab_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    empty_config = tmp_path / "hurstlab_test_config.json"
    empty_config.write_text("{}", encoding="utf-8")
    monkeypatch.setitem(HurstLabConfig.model_config, "json_file", empty_config)
    for name in list(os.environ):
        if name.startswith("HURSTLAB_"):
            monkeypatch.delenv(name)
    home = tmp_path / "home"
    home.mkdir()
    monkeypatch.setenv("HOME", str(home))


@pytest.fixture
def walk() -> Profile:
    return random_walk(4096, seed=11)
