"""Price, return and profile series: the shared vocabulary of hurstlab.

A PriceSeries is what gets ingested, a ReturnSeries is what the resampling
protocols permute and filter, and a Profile (the log-price path) is what DFA
operates on. All three are frozen and hold read-only numpy arrays.

Timestamps survive down to ReturnSeries (end-of-day flags need them) and are
dropped at Profile level: DFA works on the sample index, so 1-minute bars
are unit steps even across session gaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from hurstlab.errors import DomainError, EstimationError


class ProfileOrigin(StrEnum):
    """Provenance of a Profile."""

    INGESTED = "ingested"
    SYNTHETIC_FBM = "synthetic-fbm"
    SYNTHETIC_LEVY = "synthetic-levy"
    RESAMPLED = "resampled"


def _readonly(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


def _as_minutes(timestamps: np.ndarray | list) -> np.ndarray:
    return np.array(timestamps, dtype="datetime64[m]", copy=True)


@dataclass(frozen=True, slots=True, eq=False)
class PriceSeries:
    """Timestamped strictly positive prices on a minute grid."""

    timestamps: np.ndarray
    prices: np.ndarray

    def __post_init__(self) -> None:
        ts = _as_minutes(self.timestamps)
        px = np.array(self.prices, dtype=np.float64, copy=True)

        if ts.ndim != 1 or px.ndim != 1 or len(ts) != len(px):
            raise DomainError(
                f"timestamps ({ts.shape}) and prices ({px.shape}) must be 1-D and equally long"
            )
        if len(px) < 2:
            raise DomainError(f"a price series needs at least 2 observations, got {len(px)}")

        bad = np.flatnonzero(~np.isfinite(px) | (px <= 0.0))
        if bad.size:
            idx = int(bad[0])
            raise DomainError(
                f"price at index {idx} is not strictly positive: {px[idx]!r}",
                hint="Log returns need prices > 0; drop or repair that observation.",
            )

        steps = np.diff(ts).astype(np.int64)
        not_increasing = np.flatnonzero(steps <= 0)
        if not_increasing.size:
            idx = int(not_increasing[0]) + 1
            raise DomainError(f"timestamp at index {idx} does not increase: {ts[idx]}")

        object.__setattr__(self, "timestamps", _readonly(ts))
        object.__setattr__(self, "prices", _readonly(px))

    def __len__(self) -> int:
        return len(self.prices)

    def log_prices(self) -> np.ndarray:
        return np.log(self.prices)


@dataclass(frozen=True, slots=True, eq=False)
class ReturnSeries:
    """Log returns with a flag marking returns that span two trading days.

    ``timestamps`` holds the end timestamp of each return, or None for
    returns derived from synthetic profiles.
    """

    values: np.ndarray
    crosses_day: np.ndarray
    timestamps: np.ndarray | None = None

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64, copy=True)
        flags = np.array(self.crosses_day, dtype=bool, copy=True)
        if values.ndim != 1 or flags.shape != values.shape:
            raise DomainError("return values and crosses_day flags must be 1-D and equally long")

        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise DomainError(f"return at index {int(bad[0])} is not finite")

        object.__setattr__(self, "values", _readonly(values))
        object.__setattr__(self, "crosses_day", _readonly(flags))

        if self.timestamps is not None:
            ts = _as_minutes(self.timestamps)
            if ts.shape != values.shape:
                raise DomainError("return timestamps must match return values in length")
            object.__setattr__(self, "timestamps", _readonly(ts))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def day_boundaries(self) -> int:
        return int(np.count_nonzero(self.crosses_day))


@dataclass(frozen=True, slots=True, eq=False)
class Profile:
    """Uniform-step path x(t), t = 0..N-1, on which DFA operates."""

    values: np.ndarray
    origin: ProfileOrigin | None = None

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.ndim != 1:
            raise DomainError(f"a profile must be 1-D, got shape {values.shape}")
        if len(values) < 2:
            raise EstimationError(f"a profile needs at least 2 samples, got {len(values)}")
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise DomainError(f"profile value at index {int(bad[0])} is not finite")
        object.__setattr__(self, "values", _readonly(values))

    def __len__(self) -> int:
        return len(self.values)


def session_dates(timestamps: np.ndarray, session_offset_minutes: int = 0) -> np.ndarray:
    """Trading date of each timestamp.

    The day boundary sits at midnight shifted by ``session_offset_minutes``:
    with an offset of 1020 a new session starts at 17:00.
    """
    shifted = _as_minutes(timestamps) - np.timedelta64(session_offset_minutes, "m")
    return shifted.astype("datetime64[D]")


def to_returns(prices: PriceSeries, session_offset_minutes: int = 0) -> ReturnSeries:
    """Log returns r[k] = ln(price[k+1] / price[k]) with end-of-day flags."""
    values = np.diff(prices.log_prices())
    days = session_dates(prices.timestamps, session_offset_minutes)
    crosses = days[1:] != days[:-1]
    return ReturnSeries(values=values, crosses_day=crosses, timestamps=prices.timestamps[1:])


def to_profile(
    returns: ReturnSeries,
    x0: float = 0.0,
    origin: ProfileOrigin | None = None,
) -> Profile:
    """Rebuild the log-price path: x[0] = x0, x[k] = x0 + sum of the first k returns."""
    if len(returns) == 0:
        raise EstimationError(
            "cannot build a profile from an empty return series",
            hint="A profile needs at least one return (two samples).",
        )
    path = np.empty(len(returns) + 1, dtype=np.float64)
    path[0] = x0
    np.cumsum(returns.values, out=path[1:])
    path[1:] += x0
    return Profile(values=path, origin=origin)


def returns_from_profile(profile: Profile) -> ReturnSeries:
    """Increments of a profile as an untimestamped ReturnSeries with no day flags."""
    values = np.diff(profile.values)
    return ReturnSeries(values=values, crosses_day=np.zeros(len(values), dtype=bool))
