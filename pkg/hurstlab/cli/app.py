"""Main CLI application: registers all subcommands and global options."""

from __future__ import annotations

from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console

from hurstlab.config import HurstLabConfig, load_config
from hurstlab.logging import setup_logging

app = typer.Typer(
    name="hurstlab",
    help="hurstlab - local Hurst exponents of price series via DFA.",
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

_console = Console(stderr=True)


class _GlobalState:
    """Shared state set by the top-level callback, consumed by subcommands."""

    config_path: Path | None = None
    config: HurstLabConfig | None = None
    verbose: bool = False
    quiet: bool = False


state = _GlobalState()


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show DEBUG-level logs."),  # noqa: B008
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Suppress logs below WARNING."),  # noqa: B008
    config: Path | None = typer.Option(None, "--config", "-c", help="Path to config.json."),  # noqa: B008
) -> None:
    """hurstlab - local Hurst exponents of price series via DFA."""
    state.verbose = verbose
    state.quiet = quiet
    state.config_path = config
    try:
        state.config = load_config(config)
    except (ValidationError, ValueError) as exc:
        _console.print(f"[red]Invalid configuration:[/red] {exc}")
        raise typer.Exit(2) from exc
    setup_logging(verbose=verbose, quiet=quiet, log_dir=state.config.log_dir)


# Register subcommands: imported at the bottom to avoid circular imports
from hurstlab.cli.analyze_cmd import analyze_command, pdf_command, scaling_command  # noqa: E402
from hurstlab.cli.dfa_cmd import dfa_command, synth_command  # noqa: E402
from hurstlab.cli.resample_cmd import shuffle_test_command, surrogate_test_command  # noqa: E402

app.command(name="analyze", help="Local H series, pdfs, σ_H and ⟨H⟩ scaling in one run.")(
    analyze_command
)
app.command(name="pdf", help="Local H series and their pdfs for every window length.")(
    pdf_command
)
app.command(name="scaling", help="σ_H-vs-L power law and the ⟨H⟩_L curve.")(scaling_command)
app.command(name="dfa", help="One DFA-p estimate of H over the whole series.")(dfa_command)
app.command(name="synth", help="Write a synthetic fBm or Lévy path.")(synth_command)
app.command(name="shuffle-test", help="Compare ⟨H⟩_L with that of shuffled returns.")(
    shuffle_test_command
)
app.command(
    name="surrogate-test", help="Compare ⟨H⟩_L with sign-preserving Gaussian surrogates."
)(surrogate_test_command)
