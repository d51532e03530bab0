"""Reading ``timestamp,price`` CSV files into a validated PriceSeries.

Bad rows are rejected individually with their 1-based file line number (the
header is line 1) instead of failing the whole file. A rejection summary is
always logged; the run fails only when nothing usable is left or when the
rejected share exceeds ``max_reject_fraction``.

Timestamps are ISO-8601. Zone-aware values are converted to UTC and stored
naive; seconds are floored to the minute. A row is accepted only when its
timestamp is later than every earlier accepted row.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger

from hurstlab.core.series import PriceSeries
from hurstlab.errors import IngestionError

EXPECTED_HEADER = ["timestamp", "price"]
# First line of data; line 1 is the header.
_FIRST_DATA_LINE = 2
_LOGGED_REJECTIONS = 20


@dataclass(frozen=True, slots=True)
class RowRejection:
    line: int
    reason: str


@dataclass(frozen=True, slots=True, eq=False)
class IngestReport:
    prices: PriceSeries
    total_rows: int
    rejections: tuple[RowRejection, ...]

    @property
    def accepted(self) -> int:
        return len(self.prices)

    @property
    def reject_fraction(self) -> float:
        return len(self.rejections) / self.total_rows if self.total_rows else 0.0


def _read_frame(path: Path) -> pd.DataFrame:
    if not path.is_file():
        raise IngestionError(f"price file not found: {path}")
    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError as exc:
        raise IngestionError(f"price file is empty: {path}") from exc
    except (OSError, UnicodeDecodeError, pd.errors.ParserError) as exc:
        raise IngestionError(f"cannot read {path}: {exc}") from exc

    header = [str(c).strip().lower() for c in frame.columns]
    if header != EXPECTED_HEADER:
        raise IngestionError(
            f"unexpected header {list(frame.columns)} in {path}",
            hint="The first line must be exactly: timestamp,price",
        )
    frame.columns = header
    return frame


def _classify(frame: pd.DataFrame) -> tuple[pd.Series, pd.Series, np.ndarray]:
    """Parsed timestamps, parsed prices and a per-row rejection reason ('' = accepted)."""
    stamps = pd.to_datetime(
        frame["timestamp"].str.strip(), format="ISO8601", errors="coerce", utc=True
    )
    stamps = stamps.dt.tz_localize(None).dt.floor("min")
    prices = pd.to_numeric(frame["price"].str.strip(), errors="coerce")

    values = prices.to_numpy(dtype=np.float64, na_value=np.nan)
    reasons = np.full(len(frame), "", dtype=object)
    bad_price = ~np.isfinite(values)
    non_positive = ~bad_price & (values <= 0.0)
    reasons[non_positive] = "price is not strictly positive"
    reasons[bad_price] = "price is not a finite decimal number"
    reasons[stamps.isna().to_numpy()] = "timestamp is not ISO-8601"

    valid = reasons == ""
    never = np.iinfo(np.int64).min
    minutes = stamps.to_numpy(dtype="datetime64[m]").astype(np.int64)
    ticks = np.where(valid, minutes, never)
    previous = np.concatenate([[never], np.maximum.accumulate(ticks)[:-1]])
    reasons[valid & (ticks <= previous)] = "timestamp does not increase"
    return stamps, prices, reasons


def ingest_report(path: Path | str, *, max_reject_fraction: float = 0.01) -> IngestReport:
    """Validated prices plus the per-line rejection record."""
    path = Path(path)
    frame = _read_frame(path)
    stamps, prices, reasons = _classify(frame)

    rejected = np.flatnonzero(reasons != "")
    rejections = tuple(
        RowRejection(line=int(i) + _FIRST_DATA_LINE, reason=str(reasons[i])) for i in rejected
    )
    for rejection in rejections[:_LOGGED_REJECTIONS]:
        logger.warning("{} line {}: {}", path.name, rejection.line, rejection.reason)
    if len(rejections) > _LOGGED_REJECTIONS:
        logger.warning("... and {} more rejected rows", len(rejections) - _LOGGED_REJECTIONS)

    total = len(frame)
    accepted = total - len(rejections)
    logger.info(
        "Ingested {}: {} rows, {} accepted, {} rejected",
        path.name,
        total,
        accepted,
        len(rejections),
    )

    if accepted < 2:
        raise IngestionError(
            f"{path} is empty after validation ({accepted} usable rows)",
            hint="A price series needs at least two valid rows.",
        )
    fraction = len(rejections) / total
    if fraction > max_reject_fraction:
        raise IngestionError(
            f"{len(rejections)} of {total} rows rejected ({fraction:.2%}) in {path}",
            hint=f"At most {max_reject_fraction:.2%} may be rejected; "
            "repair the file or raise ingest.max_reject_fraction.",
        )

    keep = reasons == ""
    series = PriceSeries(
        timestamps=stamps.to_numpy(dtype="datetime64[m]")[keep],
        prices=prices.to_numpy(dtype=np.float64)[keep],
    )
    return IngestReport(prices=series, total_rows=total, rejections=rejections)


def ingest_csv(path: Path | str, *, max_reject_fraction: float = 0.01) -> PriceSeries:
    return ingest_report(path, max_reject_fraction=max_reject_fraction).prices
