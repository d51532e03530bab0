"""Shared options and execution path of the analysis commands.

Flags override config values, which override built-in defaults. The merged
values are validated as a RunManifest before anything is computed.
"""

from __future__ import annotations

from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from hurstlab.config import HurstLabConfig
from hurstlab.parallel import resolve_workers
from hurstlab.pipeline.manifest import Command, RunManifest, SynthSource
from hurstlab.pipeline.runner import RunOutcome, run
from hurstlab.stats.distribution import bin_count
from hurstlab.synth.ensemble import SynthKind

console = Console()
_err = Console(stderr=True)

OUTPUT = typer.Option(..., "--output", "-o", help="Directory for the result files.")
INPUT = typer.Option(None, "--input", "-i", help="timestamp,price CSV file.")
SYNTH = typer.Option(None, "--synth", help="Use a synthetic path instead of --input.")
HURST = typer.Option(None, "--hurst", help="Hurst index h of a synthetic fBm path.")
ALPHA = typer.Option(None, "--alpha", help="Stability index α of a synthetic Lévy walk.")
LENGTH = typer.Option(65536, "--length", help="Samples in the synthetic path.")
SEED = typer.Option(None, "--seed", help="Root seed of every random draw.")
WINDOW = typer.Option(None, "--window", "-w", help="Window length L (repeatable).")
SHIFT = typer.Option(None, "--shift", help="Shift Δt between windows, in samples.")
DEGREE = typer.Option(None, "--degree", "-p", help="Detrending polynomial degree.")
TAUS_MIN = typer.Option(None, "--taus-min", help="Smallest DFA box size.")
TAUS_MAX = typer.Option(None, "--taus-max", help="Largest DFA box size.")
EOD_FILTER = typer.Option(False, "--eod-filter", help="Drop returns that cross two days.")
SESSION_OFFSET = typer.Option(
    None, "--session-offset", help="Minutes after midnight at which a trading day starts."
)
SUBPERIODS = typer.Option(0, "--subperiods", help="Split each H series into k subperiods.")
REPEATS = typer.Option(None, "--repeats", help="Independent shuffles to average over.")
BINS = typer.Option(None, "--bins", help="Histogram bins over [0, 1].")


def _config() -> HurstLabConfig:
    from hurstlab.cli.app import state

    return state.config or HurstLabConfig()


def _pick(flag, fallback):
    return fallback if flag is None else flag


def build_manifest(
    command: Command,
    *,
    output: Path,
    input_path: Path | None = None,
    synth: SynthKind | None = None,
    hurst: float | None = None,
    alpha: float | None = None,
    length: int = 65536,
    seed: int | None = None,
    windows: list[int] | None = None,
    shift: int | None = None,
    degree: int | None = None,
    taus_min: int | None = None,
    taus_max: int | None = None,
    eod_filter: bool = False,
    session_offset: int | None = None,
    subperiods: int = 0,
    repeats: int | None = None,
    bins: int | None = None,
) -> RunManifest:
    config = _config()
    source = None
    if synth is not None:
        source = SynthSource(kind=synth, hurst=hurst, alpha=alpha, length=length)
    return RunManifest(
        command=command,
        output_dir=output,
        input_path=input_path,
        synth=source,
        seed=_pick(seed, config.seed),
        windows=windows or list(config.rolling.windows),
        shift=_pick(shift, config.rolling.shift),
        degree=_pick(degree, config.dfa.degree),
        tau_min=_pick(taus_min, config.dfa.tau_min),
        tau_max=_pick(taus_max, config.dfa.tau_max),
        eod_filter=eod_filter,
        session_offset_minutes=_pick(session_offset, config.ingest.session_offset_minutes),
        subperiods=subperiods,
        repeats=_pick(repeats, config.resample.repeats),
        bins=_pick(bins, bin_count(config.histogram.bin_width)),
        max_reject_fraction=config.ingest.max_reject_fraction,
    )


def _print_errors(exc: ValidationError) -> None:
    for error in exc.errors():
        field = ".".join(str(part) for part in error["loc"]) or "manifest"
        _err.print(f"[red]Invalid option[/red] {field}: {error['msg']}")


def _print_summary(outcome: RunOutcome) -> None:
    summary = outcome.summary
    if summary.dfa is not None:
        console.print(
            f"[bold]H[/bold] = {summary.dfa.hurst:.4f} "
            f"(DFA-{summary.dfa.degree}, {summary.dfa.fit_points} scales in fit)"
        )
    if summary.scales:
        table = Table(title="Local Hurst exponent by window length")
        table.add_column("L", justify="right", style="bold")
        table.add_column("samples", justify="right")
        table.add_column("⟨H⟩", justify="right")
        table.add_column("σ_H", justify="right")
        table.add_column("mode", justify="right")
        for row in summary.scales:
            table.add_row(
                str(row.window),
                str(row.samples),
                "-" if row.mean is None else f"{row.mean:.4f}",
                "-" if row.std is None else f"{row.std:.4f}",
                "-" if row.mode is None else f"{row.mode:.3f}",
            )
        console.print(table)
    if summary.sigma_scaling is not None and summary.sigma_scaling.exponent is not None:
        console.print(f"σ_H ∝ L^-γ with γ = {summary.sigma_scaling.exponent:.3f}")
    for block in summary.comparisons:
        table = Table(title=f"{block.protocol} ({block.repeats} repeat(s))")
        table.add_column("L", justify="right", style="bold")
        table.add_column("original ⟨H⟩", justify="right")
        table.add_column("resampled ⟨H⟩", justify="right")
        table.add_column("ΔH/H", justify="right")
        for row in block.rows:
            table.add_row(
                str(row.window),
                "-" if row.original_mean is None else f"{row.original_mean:.4f}",
                "-" if row.resampled_mean is None else f"{row.resampled_mean:.4f}",
                "-" if row.delta_h_over_h is None else f"{row.delta_h_over_h:+.1%}",
            )
        console.print(table)
    console.print(f"[green]Wrote {len(outcome.artifacts)} file(s)[/green]")


def execute(command: Command, **options) -> None:
    """Validate the options, run the command and exit with its status."""
    try:
        manifest = build_manifest(command, **options)
    except ValidationError as exc:
        _print_errors(exc)
        raise typer.Exit(2) from exc

    outcome = run(manifest, workers=resolve_workers(_config().threads))
    if outcome.exit_code:
        _err.print(f"[red]Error:[/red] {outcome.error}")
        if outcome.hint:
            _err.print(f"[dim]{outcome.hint}[/dim]")
        raise typer.Exit(outcome.exit_code)
    _print_summary(outcome)
