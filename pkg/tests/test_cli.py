"""Tests for the hurstlab command line."""

from __future__ import annotations

import json

import pytest
from loguru import logger
from typer.testing import CliRunner

from hurstlab.cli import app
from hurstlab.synth import intraday_prices
from tests.helpers import write_series_csv

runner = CliRunner()

_FBM = ["--synth", "fbm", "--hurst", "0.6", "--length", "4096", "--seed", "2"]


@pytest.fixture(autouse=True)
def _drop_log_sinks():
    yield
    logger.remove()


def test_help_lists_commands():
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for name in ("analyze", "pdf", "scaling", "dfa", "synth", "shuffle-test", "surrogate-test"):
        assert name in result.output


def test_synth_writes_profile(tmp_path):
    result = runner.invoke(app, ["synth", *_FBM, "-o", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "profile.csv").exists()
    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["seed"] == 2
    assert summary["synth"]["kind"] == "fbm"


def test_dfa_prints_estimate(tmp_path):
    result = runner.invoke(app, ["dfa", *_FBM, "-p", "1", "-o", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert "DFA-1" in result.output
    assert (tmp_path / "fluctuation_curve.csv").exists()


def test_pdf_with_repeated_windows(tmp_path):
    args = ["pdf", *_FBM, "-w", "1024", "-w", "512", "--shift", "100", "--bins", "25"]
    result = runner.invoke(app, [*args, "-o", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "pdf_L512.csv").exists()
    assert (tmp_path / "pdf_L1024.csv").exists()
    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["manifest"]["windows"] == [512, 1024]
    assert summary["manifest"]["bins"] == 25


def test_invalid_option_exits_with_usage_code(tmp_path):
    result = runner.invoke(app, ["pdf", *_FBM, "-w", "256", "-o", str(tmp_path)])
    assert result.exit_code == 2
    assert not (tmp_path / "summary.json").exists()


def test_synth_without_parameter(tmp_path):
    result = runner.invoke(app, ["synth", "--synth", "levy", "-o", str(tmp_path)])
    assert result.exit_code == 2


def test_both_sources_rejected(tmp_path):
    csv = write_series_csv(tmp_path / "px.csv", intraday_prices(days=2, bars_per_day=300))
    result = runner.invoke(app, ["dfa", *_FBM, "-i", str(csv), "-o", str(tmp_path / "out")])
    assert result.exit_code == 2


def test_run_failure_exits_with_one(tmp_path):
    result = runner.invoke(app, ["dfa", "-i", str(tmp_path / "none.csv"), "-o", str(tmp_path)])
    assert result.exit_code == 1


def test_ingested_dfa(tmp_path):
    csv = write_series_csv(tmp_path / "px.csv", intraday_prices(days=2, bars_per_day=300))
    result = runner.invoke(app, ["dfa", "-i", str(csv), "-o", str(tmp_path / "out")])
    assert result.exit_code == 0, result.output
    summary = json.loads((tmp_path / "out" / "summary.json").read_text(encoding="utf-8"))
    assert summary["ingest"]["accepted"] == 600


class TestConfig:
    def test_config_file_supplies_defaults(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"seed": 9, "rolling": {"shift": 128}}), encoding="utf-8")
        args = ["-c", str(config), "pdf", "--synth", "fbm", "--hurst", "0.5", "--length", "2048"]
        result = runner.invoke(app, [*args, "-w", "512", "-o", str(tmp_path / "out")])
        assert result.exit_code == 0, result.output
        summary = json.loads((tmp_path / "out" / "summary.json").read_text(encoding="utf-8"))
        assert summary["seed"] == 9
        assert summary["manifest"]["shift"] == 128

    def test_flag_beats_config(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"seed": 9}), encoding="utf-8")
        result = runner.invoke(
            app, ["-c", str(config), "synth", *_FBM, "-o", str(tmp_path / "out")]
        )
        assert result.exit_code == 0, result.output
        summary = json.loads((tmp_path / "out" / "summary.json").read_text(encoding="utf-8"))
        assert summary["seed"] == 2

    def test_invalid_config_exits_with_two(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"threads": -1}), encoding="utf-8")
        result = runner.invoke(app, ["-c", str(config), "synth", *_FBM, "-o", str(tmp_path)])
        assert result.exit_code == 2

    def test_output_independent_of_thread_setting(self, tmp_path, monkeypatch):
        args = ["analyze", *_FBM, "-w", "512", "-w", "1024", "--shift", "50", "-o", str(tmp_path)]
        monkeypatch.setenv("HURSTLAB_THREADS", "1")
        assert runner.invoke(app, args).exit_code == 0
        first = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
        monkeypatch.setenv("HURSTLAB_THREADS", "4")
        assert runner.invoke(app, args).exit_code == 0
        second = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
        assert first == second
