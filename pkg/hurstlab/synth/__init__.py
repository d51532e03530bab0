from hurstlab.synth.ensemble import (
    EnsembleSummary,
    SynthKind,
    member_profile,
    run_ensemble,
    running_mean,
)
from hurstlab.synth.fbm import FbmSpec, fgn_autocovariance, generate_fbm
from hurstlab.synth.levy import LevySpec, generate_levy, stable_increments
from hurstlab.synth.sessions import intraday_prices

__all__ = [
    "EnsembleSummary",
    "FbmSpec",
    "LevySpec",
    "SynthKind",
    "fgn_autocovariance",
    "generate_fbm",
    "generate_levy",
    "intraday_prices",
    "member_profile",
    "run_ensemble",
    "running_mean",
    "stable_increments",
]
