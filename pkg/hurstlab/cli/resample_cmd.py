"""hurstlab shuffle-test / surrogate-test."""

from __future__ import annotations

from pathlib import Path

from hurstlab.cli import common
from hurstlab.pipeline.manifest import Command
from hurstlab.synth.ensemble import SynthKind


def shuffle_test_command(
    output: Path = common.OUTPUT,
    input_path: Path | None = common.INPUT,
    synth: SynthKind | None = common.SYNTH,
    hurst: float | None = common.HURST,
    alpha: float | None = common.ALPHA,
    length: int = common.LENGTH,
    seed: int | None = common.SEED,
    windows: list[int] | None = common.WINDOW,
    shift: int | None = common.SHIFT,
    degree: int | None = common.DEGREE,
    taus_min: int | None = common.TAUS_MIN,
    taus_max: int | None = common.TAUS_MAX,
    eod_filter: bool = common.EOD_FILTER,
    session_offset: int | None = common.SESSION_OFFSET,
    repeats: int | None = common.REPEATS,
    bins: int | None = common.BINS,
) -> None:
    """⟨H⟩_L of the data against ⟨H⟩_L of its shuffled returns."""
    common.execute(Command.SHUFFLE_TEST, **locals())


def surrogate_test_command(
    output: Path = common.OUTPUT,
    input_path: Path | None = common.INPUT,
    synth: SynthKind | None = common.SYNTH,
    hurst: float | None = common.HURST,
    alpha: float | None = common.ALPHA,
    length: int = common.LENGTH,
    seed: int | None = common.SEED,
    windows: list[int] | None = common.WINDOW,
    shift: int | None = common.SHIFT,
    degree: int | None = common.DEGREE,
    taus_min: int | None = common.TAUS_MIN,
    taus_max: int | None = common.TAUS_MAX,
    eod_filter: bool = common.EOD_FILTER,
    session_offset: int | None = common.SESSION_OFFSET,
    repeats: int | None = common.REPEATS,
    bins: int | None = common.BINS,
) -> None:
    """⟨H⟩_L of the data against its Gaussian surrogate, plain and shuffled."""
    common.execute(Command.SURROGATE_TEST, **locals())
