"""hurstlab analyze / pdf / scaling: rolling DFA over one or more window lengths."""

from __future__ import annotations

from pathlib import Path

from hurstlab.cli import common
from hurstlab.pipeline.manifest import Command
from hurstlab.synth.ensemble import SynthKind


def analyze_command(
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
    subperiods: int = common.SUBPERIODS,
    bins: int | None = common.BINS,
) -> None:
    """H_L(t) series, pdfs, subperiods, σ_H(L) and ⟨H⟩_L."""
    common.execute(Command.ANALYZE, **locals())


def pdf_command(
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
    subperiods: int = common.SUBPERIODS,
    bins: int | None = common.BINS,
) -> None:
    """H_L(t) series and their pdfs."""
    common.execute(Command.PDF, **locals())


def scaling_command(
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
) -> None:
    """σ_H-vs-L exponent and the ⟨H⟩_L curve."""
    common.execute(Command.SCALING, **locals())
