"""Perturbations of a return series: shuffling, sign-preserving surrogates, EOD removal.

All three act on returns, never on profile values; callers rebuild the
profile with ``to_profile`` so the marginal increment distribution is
exactly the one being tested.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from loguru import logger

from hurstlab.core.series import ReturnSeries
from hurstlab.errors import ConfigurationError
from hurstlab.rng import stream


@dataclass(frozen=True, slots=True)
class ShuffleSpec:
    """Number of independent permutations and the seed they are drawn from."""

    repeats: int = 5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.repeats < 1:
            raise ConfigurationError(f"shuffle repeats must be >= 1, got {self.repeats}")


def shuffle_returns(returns: ReturnSeries, spec: ShuffleSpec) -> list[ReturnSeries]:
    """``spec.repeats`` uniform permutations of the return values.

    Repeat k draws from stream (seed, k). Timestamps stay in place; day flags
    carry no meaning after shuffling and are cleared.
    """
    cleared = np.zeros(len(returns), dtype=bool)
    shuffled = []
    for k in range(spec.repeats):
        values = stream(spec.seed, k).permutation(returns.values)
        shuffled.append(
            ReturnSeries(values=values, crosses_day=cleared, timestamps=returns.timestamps)
        )
    return shuffled


def gaussian_surrogate(returns: ReturnSeries, seed: int) -> ReturnSeries:
    """Keep each return's sign, replace its magnitude by |g| with g ~ N(0, 1).

    Zero returns stay zero.
    """
    magnitudes = np.abs(stream(seed).standard_normal(len(returns)))
    return ReturnSeries(
        values=np.sign(returns.values) * magnitudes,
        crosses_day=returns.crosses_day,
        timestamps=returns.timestamps,
    )


def remove_eod_returns(returns: ReturnSeries) -> ReturnSeries:
    """Drop returns that span two trading days and close the gaps."""
    keep = ~returns.crosses_day
    removed = len(returns) - int(np.count_nonzero(keep))
    if removed:
        logger.debug("Removed {} end-of-day return(s) of {}", removed, len(returns))
    return ReturnSeries(
        values=returns.values[keep],
        crosses_day=returns.crosses_day[keep],
        timestamps=None if returns.timestamps is None else returns.timestamps[keep],
    )
