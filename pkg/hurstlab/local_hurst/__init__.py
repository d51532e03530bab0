from hurstlab.local_hurst.rolling import (
    LocalHurstSeries,
    RollingConfig,
    confidence_band,
    rolling_hurst,
    window_end_indices,
)

__all__ = [
    "LocalHurstSeries",
    "RollingConfig",
    "confidence_band",
    "rolling_hurst",
    "window_end_indices",
]
