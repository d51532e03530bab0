"""Local Hurst exponent H_L(t) over backward windows.

Window k ends at t = L-1 + k·Δt and covers profile[t-L+1 .. t]. Windows are
sample-count based (Δt = 10 on a 1-minute grid is ten minutes) and may
overlap; each one is estimated from its own slice only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from loguru import logger

from hurstlab.config.schema import MIN_WINDOW
from hurstlab.core.series import Profile
from hurstlab.dfa.estimator import DfaConfig, dfa_config_for, fluctuation_curve
from hurstlab.errors import ConfigurationError, EstimationError
from hurstlab.parallel import chunked, ordered_map

_WINDOWS_PER_TASK = 64


@dataclass(frozen=True, slots=True)
class RollingConfig:
    """Window length L, shift Δt and the DFA settings applied to every window."""

    window: int
    shift: int = 10
    p: int = 2
    tau_min: int | None = None
    tau_max: int | None = None
    fit_range: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.window < MIN_WINDOW:
            raise ConfigurationError(
                f"window {self.window} is below the {MIN_WINDOW}-sample noise floor",
                hint="Shorter windows make H dominated by estimation noise.",
            )
        if self.shift < 1:
            raise ConfigurationError(f"shift must be >= 1 sample, got {self.shift}")

    def dfa_config(self) -> DfaConfig:
        return dfa_config_for(self.window, self.p, self.tau_min, self.tau_max, self.fit_range)


@dataclass(frozen=True, slots=True, eq=False)
class LocalHurstSeries:
    """Samples (t_index, timestamp, h, stderr) for one window length and shift."""

    t_index: np.ndarray
    h: np.ndarray
    stderr: np.ndarray
    window: int
    shift: int
    timestamps: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.t_index)

    def finite_h(self) -> np.ndarray:
        return self.h[np.isfinite(self.h)]

    def slice(self, start: int, stop: int) -> LocalHurstSeries:
        return LocalHurstSeries(
            t_index=self.t_index[start:stop],
            h=self.h[start:stop],
            stderr=self.stderr[start:stop],
            window=self.window,
            shift=self.shift,
            timestamps=None if self.timestamps is None else self.timestamps[start:stop],
        )


def window_end_indices(n: int, window: int, shift: int) -> np.ndarray:
    """End indices L-1, L-1+Δt, ... <= N-1; there are floor((N-L)/Δt)+1 of them."""
    if n < window:
        raise EstimationError(
            "window exceeds series",
            hint=f"The series has {n} samples but the window needs {window}.",
        )
    return np.arange(window - 1, n, shift, dtype=np.int64)


def _estimate_windows(x: np.ndarray, ends: np.ndarray, config: DfaConfig, window: int):
    h = np.empty(len(ends), dtype=np.float64)
    se = np.empty(len(ends), dtype=np.float64)
    for k, end in enumerate(ends):
        try:
            curve = fluctuation_curve(x[end - window + 1 : end + 1], config)
        except EstimationError:
            h[k] = se[k] = np.nan
            continue
        h[k] = curve.hurst
        se[k] = curve.fit_stderr
    return h, se


def rolling_hurst(
    profile: Profile,
    config: RollingConfig,
    *,
    timestamps: np.ndarray | None = None,
    workers: int = 1,
) -> LocalHurstSeries:
    """H_L(t) for every window end on the Δt grid."""
    x = profile.values
    ends = window_end_indices(len(x), config.window, config.shift)
    dfa = config.dfa_config()
    logger.debug(
        "Rolling DFA-{}: L={} Δt={} over {} samples -> {} windows, {} scales",
        config.p,
        config.window,
        config.shift,
        len(x),
        len(ends),
        len(dfa.taus),
    )

    parts = ordered_map(
        lambda chunk: _estimate_windows(x, chunk, dfa, config.window),
        chunked(ends, _WINDOWS_PER_TASK),
        workers,
    )
    h = np.concatenate([part[0] for part in parts])
    se = np.concatenate([part[1] for part in parts])

    failed = int(np.count_nonzero(~np.isfinite(h)))
    if failed:
        logger.warning(
            "{} of {} windows (L={}) had no usable scaling range; recorded as NaN",
            failed,
            len(h),
            config.window,
        )

    stamps = None
    if timestamps is not None:
        stamps = np.asarray(timestamps, dtype="datetime64[m]")
        if len(stamps) != len(x):
            raise ConfigurationError("timestamps must align with profile samples")
        stamps = stamps[ends]

    return LocalHurstSeries(
        t_index=ends, h=h, stderr=se, window=config.window, shift=config.shift, timestamps=stamps
    )


def confidence_band(
    series: LocalHurstSeries, sigma: float, z: float = 1.96
) -> tuple[np.ndarray, np.ndarray]:
    """Gaussian band h ± z·σ_H(L) using a calibrated σ_H for the series' window."""
    return series.h - z * sigma, series.h + z * sigma
