"""Synthetic 1-minute trading sessions with overnight gaps.

Intraday log-returns are Gaussian; the first return of every session after
the first (the close-to-open return) is an α-stable jump. This is the
fixture for end-of-day filtering: the planted jumps sit exactly on the
returns that ``remove_eod_returns`` drops.
"""

from __future__ import annotations

from datetime import datetime

import numpy as np

from hurstlab.core.series import PriceSeries
from hurstlab.errors import DomainError
from hurstlab.rng import stream
from hurstlab.synth.levy import stable_increments

# Log-price jumps beyond this are clipped so prices stay finite.
_MAX_JUMP = 1.0


def intraday_prices(
    days: int,
    bars_per_day: int = 390,
    *,
    sigma: float = 1e-4,
    jump_alpha: float = 1.4,
    jump_scale: float = 5e-4,
    seed: int = 0,
    start: datetime = datetime(2003, 1, 6, 9, 30),
    price0: float = 100.0,
) -> PriceSeries:
    """``days`` sessions of ``bars_per_day`` consecutive minutes, one session per calendar day."""
    if days < 1 or bars_per_day < 2:
        raise DomainError(f"need days >= 1 and bars_per_day >= 2, got {days}, {bars_per_day}")
    if sigma <= 0.0 or jump_scale < 0.0 or price0 <= 0.0:
        raise DomainError("sigma and price0 must be positive, jump_scale non-negative")

    rng = stream(seed)
    n = days * bars_per_day
    returns = sigma * rng.standard_normal(n - 1)
    opens = np.arange(1, days) * bars_per_day - 1
    jumps = jump_scale * stable_increments(jump_alpha, len(opens), rng)
    returns[opens] = np.clip(jumps, -_MAX_JUMP, _MAX_JUMP)

    day_starts = np.datetime64(start, "m") + np.arange(days) * np.timedelta64(1, "D")
    timestamps = (day_starts[:, None] + np.arange(bars_per_day) * np.timedelta64(1, "m")).ravel()
    log_prices = np.log(price0) + np.concatenate([[0.0], np.cumsum(returns)])
    return PriceSeries(timestamps=timestamps, prices=np.exp(log_prices))
