"""Local Hurst families and the shuffle / surrogate studies built on them.

A study perturbs the returns, rebuilds the profile, recomputes H_L(t) at
every window and compares ⟨H⟩_L with the 0.5 expected for a memoryless,
thin-tailed walk. With several repeats the per-L means and stds are
averaged over the repeats.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger

from hurstlab.core.series import Profile, ProfileOrigin, ReturnSeries, to_profile
from hurstlab.errors import EstimationError
from hurstlab.local_hurst.rolling import LocalHurstSeries, RollingConfig, rolling_hurst
from hurstlab.resample.protocols import ShuffleSpec, gaussian_surrogate, shuffle_returns
from hurstlab.rng import derive_seed


@dataclass(frozen=True, slots=True)
class StudyRow:
    window: int
    mean: float
    std: float
    samples: int

    @property
    def delta_h_over_h(self) -> float:
        return (self.mean - 0.5) / 0.5


def rolling_family(
    profile: Profile,
    configs: Sequence[RollingConfig],
    *,
    timestamps: np.ndarray | None = None,
    workers: int = 1,
) -> dict[int, LocalHurstSeries]:
    return {
        c.window: rolling_hurst(profile, c, timestamps=timestamps, workers=workers)
        for c in configs
    }


def _moments(series: LocalHurstSeries) -> tuple[float, float]:
    h = series.finite_h()
    if h.size == 0:
        raise EstimationError(f"no finite H samples at L={series.window}")
    return float(np.mean(h)), float(np.std(h, ddof=1)) if h.size > 1 else 0.0


def summarize_family(family: dict[int, LocalHurstSeries]) -> dict[int, StudyRow]:
    rows = {}
    for window, series in family.items():
        mean, std = _moments(series)
        rows[window] = StudyRow(window, mean, std, len(series.finite_h()))
    return rows


def _averaged(profiles: Sequence[Profile], configs: Sequence[RollingConfig], workers: int):
    per_window: dict[int, list[tuple[float, float, int]]] = {c.window: [] for c in configs}
    for profile in profiles:
        family = rolling_family(profile, configs, workers=workers)
        for window, row in summarize_family(family).items():
            per_window[window].append((row.mean, row.std, row.samples))
    return {
        window: StudyRow(
            window=window,
            mean=float(np.mean([m for m, _, _ in stats])),
            std=float(np.mean([s for _, s, _ in stats])),
            samples=sum(n for _, _, n in stats),
        )
        for window, stats in per_window.items()
    }


def shuffle_study(
    returns: ReturnSeries,
    spec: ShuffleSpec,
    configs: Sequence[RollingConfig],
    *,
    workers: int = 1,
) -> dict[int, StudyRow]:
    """Per-L ⟨H⟩ and σ_H of shuffled returns, averaged over ``spec.repeats`` shuffles."""
    logger.info("Shuffle study: {} repeat(s) over {} window length(s)", spec.repeats, len(configs))
    profiles = [
        to_profile(shuffled, origin=ProfileOrigin.RESAMPLED)
        for shuffled in shuffle_returns(returns, spec)
    ]
    return _averaged(profiles, configs, workers)


def surrogate_study(
    returns: ReturnSeries,
    spec: ShuffleSpec,
    configs: Sequence[RollingConfig],
    *,
    workers: int = 1,
) -> tuple[dict[int, StudyRow], dict[int, StudyRow]]:
    """Gaussian surrogate of the returns: its own H family, then the shuffled surrogate.

    The surrogate keeps the sign sequence, so what remains in the first
    result is sign correlation; the second should sit at 0.5.
    """
    surrogate = gaussian_surrogate(returns, derive_seed(spec.seed, 0, 2))
    logger.info("Surrogate study over {} window length(s)", len(configs))
    plain = _averaged([to_profile(surrogate, origin=ProfileOrigin.RESAMPLED)], configs, workers)
    shuffled = shuffle_study(surrogate, spec, configs, workers=workers)
    return plain, shuffled
