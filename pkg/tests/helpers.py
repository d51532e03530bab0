"""Small builders shared by several test modules."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from hurstlab.core.series import PriceSeries, Profile, ProfileOrigin


def random_walk(n: int, seed: int = 0) -> Profile:
    """Gaussian random walk of n samples starting at 0."""
    steps = np.random.default_rng(seed).standard_normal(n - 1)
    return Profile(
        values=np.concatenate([[0.0], np.cumsum(steps)]), origin=ProfileOrigin.SYNTHETIC_FBM
    )


def write_price_csv(path: Path, rows: list[tuple[str, str]]) -> Path:
    lines = ["timestamp,price", *(f"{ts},{px}" for ts, px in rows)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def minute_rows(
    n: int, start: str = "2024-03-04T09:30", price0: float = 100.0
) -> list[tuple[str, str]]:
    """n consecutive 1-minute rows with a gently rising price."""
    stamps = np.datetime64(start, "m") + np.arange(n) * np.timedelta64(1, "m")
    return [
        (str(ts), f"{price0 + 0.01 * k:.2f}")
        for k, ts in enumerate(np.datetime_as_string(stamps, unit="m"))
    ]


def write_series_csv(path: Path, prices: PriceSeries) -> Path:
    """Write a PriceSeries in the ingest format with full float precision."""
    stamps = np.datetime_as_string(prices.timestamps, unit="m")
    rows = [(str(ts), repr(float(px))) for ts, px in zip(stamps, prices.prices, strict=True)]
    return write_price_csv(path, rows)
