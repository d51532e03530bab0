"""hurstlab dfa / synth: whole-series estimate and synthetic path output."""

from __future__ import annotations

from pathlib import Path

import typer

from hurstlab.cli import common
from hurstlab.pipeline.manifest import Command
from hurstlab.synth.ensemble import SynthKind


def dfa_command(
    output: Path = common.OUTPUT,
    input_path: Path | None = common.INPUT,
    synth: SynthKind | None = common.SYNTH,
    hurst: float | None = common.HURST,
    alpha: float | None = common.ALPHA,
    length: int = common.LENGTH,
    seed: int | None = common.SEED,
    degree: int | None = common.DEGREE,
    taus_min: int | None = common.TAUS_MIN,
    taus_max: int | None = common.TAUS_MAX,
    eod_filter: bool = common.EOD_FILTER,
    session_offset: int | None = common.SESSION_OFFSET,
) -> None:
    """Fluctuation curve and H of the whole profile."""
    common.execute(Command.DFA, **locals())


def synth_command(
    synth: SynthKind = typer.Option(..., "--synth", help="Kind of path to generate."),  # noqa: B008
    output: Path = common.OUTPUT,
    hurst: float | None = common.HURST,
    alpha: float | None = common.ALPHA,
    length: int = common.LENGTH,
    seed: int | None = common.SEED,
) -> None:
    """profile.csv of a seeded fBm or Lévy path."""
    common.execute(Command.SYNTH, **locals())
