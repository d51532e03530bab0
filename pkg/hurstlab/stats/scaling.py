"""How the local Hurst distribution changes with the window length L.

``sigma_vs_l`` fits σ_H ∝ L^{−γ}; ``mean_h_vs_l`` tabulates ⟨H⟩_L with the
per-L spread as error bars.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from hurstlab.errors import EstimationError
from hurstlab.fitting import line_fit, loglog_fit
from hurstlab.local_hurst.rolling import LocalHurstSeries
from hurstlab.stats.distribution import MIN_BLOCK_SAMPLES

MIN_SCALES = 3


@dataclass(frozen=True, slots=True)
class ScalingFit:
    """(L, value) points and a fitted exponent.

    For σ_H the exponent is γ and ``predict`` returns the fitted σ_H(L).
    For ⟨H⟩_L it is the slope of ⟨H⟩ against ln L, reported for reference.
    """

    points: tuple[tuple[int, float], ...]
    exponent: float
    stderr: float
    intercept: float
    spread: tuple[float, ...] = ()
    excluded: tuple[int, ...] = ()
    warnings: tuple[str, ...] = field(default=())

    @property
    def windows(self) -> np.ndarray:
        return np.array([w for w, _ in self.points], dtype=np.int64)

    @property
    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.points], dtype=np.float64)

    def predict(self, window: int) -> float:
        return float(np.exp(self.intercept) * window ** (-self.exponent))


def sigma_vs_l(family: Mapping[int, Sequence[float] | np.ndarray]) -> ScalingFit:
    """γ = −slope of ln std(H) on ln L; scales with zero spread are skipped."""
    stds: dict[int, float] = {}
    for window in sorted(family):
        samples = np.asarray(family[window], dtype=np.float64)
        samples = samples[np.isfinite(samples)]
        if len(samples) < MIN_BLOCK_SAMPLES:
            raise EstimationError(
                f"L={window} has {len(samples)} samples; σ_H needs >= {MIN_BLOCK_SAMPLES}"
            )
        stds[window] = float(np.std(samples, ddof=1))

    if len(stds) < MIN_SCALES:
        raise EstimationError(f"σ_H scaling needs >= {MIN_SCALES} window lengths, got {len(stds)}")

    warnings = []
    excluded = tuple(w for w, s in stds.items() if s == 0.0)
    for window in excluded:
        message = f"L={window} has zero spread; excluded from the σ_H fit"
        logger.warning(message)
        warnings.append(message)
    kept = {w: s for w, s in stds.items() if s > 0.0}
    if len(kept) < MIN_SCALES:
        raise EstimationError(
            f"only {len(kept)} window lengths with nonzero spread; σ_H fit needs {MIN_SCALES}"
        )

    windows = np.array(list(kept), dtype=np.float64)
    fit = loglog_fit(windows, np.array(list(kept.values())))
    return ScalingFit(
        points=tuple(kept.items()),
        exponent=-fit.slope,
        stderr=fit.stderr,
        intercept=fit.intercept,
        excluded=excluded,
        warnings=tuple(warnings),
    )


def mean_h_vs_l(family: Mapping[int, LocalHurstSeries]) -> ScalingFit:
    if len(family) < 2:
        raise EstimationError(f"⟨H⟩_L needs >= 2 window lengths, got {len(family)}")
    windows = sorted(family)
    samples = [family[w].finite_h() for w in windows]
    empty = [w for w, s in zip(windows, samples, strict=True) if s.size == 0]
    if empty:
        raise EstimationError(f"no finite H samples at L={empty}")

    means = [float(np.mean(s)) for s in samples]
    spread = tuple(float(np.std(s, ddof=1)) if s.size > 1 else 0.0 for s in samples)
    fit = line_fit(np.log(np.array(windows, dtype=np.float64)), np.array(means))
    return ScalingFit(
        points=tuple(zip(windows, means, strict=True)),
        exponent=fit.slope,
        stderr=fit.stderr,
        intercept=fit.intercept,
        spread=spread,
    )
