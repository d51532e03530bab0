from hurstlab.dfa.estimator import (
    MIN_SERIES_LENGTH,
    DfaConfig,
    FluctuationCurve,
    FluctuationPoint,
    box_fluctuation,
    default_taus,
    dfa_config_for,
    estimate_hurst,
    fluctuation_curve,
)

__all__ = [
    "MIN_SERIES_LENGTH",
    "DfaConfig",
    "FluctuationCurve",
    "FluctuationPoint",
    "box_fluctuation",
    "default_taus",
    "dfa_config_for",
    "estimate_hurst",
    "fluctuation_curve",
]
