"""Tests for infrastructure components: version, errors, worker pool, logging."""

from __future__ import annotations

from loguru import logger

import hurstlab
from hurstlab.errors import ConfigurationError, EstimationError, HurstLabError
from hurstlab.logging import setup_logging
from hurstlab.parallel import chunked, ordered_map, resolve_workers
from hurstlab.pipeline import Command, RunManifest, run

# ---------------------------------------------------------------------------
# Version
# ---------------------------------------------------------------------------


class TestVersion:
    def test_version_has_three_parts(self):
        parts = hurstlab.__version__.split(".")
        assert len(parts) == 3
        assert all(p.isdigit() for p in parts)


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------


class TestErrors:
    def test_hint_is_kept(self):
        err = EstimationError("series too short", hint="need 64 samples")
        assert str(err) == "series too short"
        assert err.hint == "need 64 samples"
        assert isinstance(err, HurstLabError)

    def test_hint_defaults_to_empty(self):
        assert ConfigurationError("bad").hint == ""


# ---------------------------------------------------------------------------
# Worker pool
# ---------------------------------------------------------------------------


class TestParallel:
    def test_resolve_workers(self):
        assert resolve_workers(3) == 3
        assert resolve_workers(0) >= 1
        assert resolve_workers(None) >= 1

    def test_chunked_keeps_order(self):
        assert chunked(list(range(7)), 3) == [[0, 1, 2], [3, 4, 5], [6]]
        assert chunked([1, 2], 0) == [[1], [2]]

    def test_ordered_map_preserves_order_across_threads(self):
        def work(x: int) -> int:
            return x * x

        assert ordered_map(work, range(50), workers=4) == [x * x for x in range(50)]
        assert ordered_map(work, range(5), workers=1) == [0, 1, 4, 9, 16]


# ---------------------------------------------------------------------------
# Logging
# ---------------------------------------------------------------------------


class TestLogging:
    def test_file_sink_written_to_log_dir(self, tmp_path):
        log_dir = tmp_path / "logs"
        setup_logging(quiet=True, log_dir=log_dir)
        logger.debug("calibration run started")
        logger.complete()
        logger.remove()
        text = (log_dir / "hurstlab.log").read_text(encoding="utf-8")
        assert "calibration run started" in text
        assert "| -" in text

    def test_pipeline_records_carry_command(self, tmp_path):
        log_dir = tmp_path / "logs"
        setup_logging(quiet=True, log_dir=log_dir)
        manifest = RunManifest(
            command=Command.SYNTH,
            output_dir=tmp_path / "out",
            synth={"kind": "fbm", "hurst": 0.5, "length": 1024},
        )
        assert run(manifest).exit_code == 0
        logger.complete()
        logger.remove()
        lines = (log_dir / "hurstlab.log").read_text(encoding="utf-8").splitlines()
        running = [line for line in lines if "Running synth" in line]
        assert running
        assert all("| synth " in line for line in running)
