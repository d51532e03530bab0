"""Output files of a run: CSV tables and summary.json.

Floats are written with 17 significant digits so every value reads back to
the identical double. Each file goes to a temp name first and is renamed
into place; ``ArtifactWriter.rollback`` removes everything a failed run
wrote so no partial output is left behind.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger

from hurstlab.core.series import Profile
from hurstlab.dfa.estimator import FluctuationCurve
from hurstlab.errors import IngestionError
from hurstlab.local_hurst.rolling import LocalHurstSeries
from hurstlab.stats.distribution import HurstDistribution

FLOAT_FORMAT = "%.17g"


class ArtifactWriter:
    """Writes the files of one run into ``output_dir`` and remembers them."""

    def __init__(self, output_dir: Path) -> None:
        self._dir = Path(output_dir)
        self._written: list[Path] = []

    @property
    def written(self) -> list[Path]:
        return list(self._written)

    def _commit(self, name: str, write) -> Path:
        self._dir.mkdir(parents=True, exist_ok=True)
        path = self._dir / name
        tmp = path.with_suffix(path.suffix + ".tmp")
        try:
            write(tmp)
            tmp.replace(path)
        except BaseException:
            tmp.unlink(missing_ok=True)
            raise
        self._written.append(path)
        logger.debug("Wrote {}", path)
        return path

    def write_csv(self, name: str, frame: pd.DataFrame) -> Path:
        return self._commit(
            name,
            lambda tmp: frame.to_csv(
                tmp, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", encoding="utf-8"
            ),
        )

    def write_text(self, name: str, text: str) -> Path:
        return self._commit(name, lambda tmp: tmp.write_text(text, encoding="utf-8"))

    def rollback(self) -> None:
        for path in self._written:
            path.unlink(missing_ok=True)
        if self._written:
            logger.info("Removed {} partial output file(s) from {}", len(self._written), self._dir)
        self._written.clear()


def hurst_series_name(window: int) -> str:
    return f"hurst_series_L{window}.csv"


def pdf_name(window: int) -> str:
    return f"pdf_L{window}.csv"


def subperiods_name(window: int) -> str:
    return f"subperiods_L{window}.csv"


def _format_minutes(timestamps: np.ndarray | None, n: int) -> list[str]:
    if timestamps is None:
        return [""] * n
    return list(np.datetime_as_string(timestamps, unit="m"))


def hurst_series_frame(series: LocalHurstSeries) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "t_index": series.t_index,
            "timestamp": _format_minutes(series.timestamps, len(series)),
            "H": series.h,
            "stderr": series.stderr,
        }
    )


def pdf_frame(dist: HurstDistribution) -> pd.DataFrame:
    return pd.DataFrame({"bin_center": dist.bin_centers, "density": dist.density})


def subperiods_frame(blocks: list[HurstDistribution]) -> pd.DataFrame:
    return pd.concat(
        [pdf_frame(block).assign(block=k) for k, block in enumerate(blocks)], ignore_index=True
    )[["block", "bin_center", "density"]]


def fluctuation_frame(curve: FluctuationCurve) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "tau": curve.taus,
            "mean_fluct": curve.mean_flucts,
            "boxes_used": [pt.boxes_used for pt in curve.points],
            "in_fit": [int(pt.in_fit) for pt in curve.points],
        }
    )


def profile_frame(profile: Profile) -> pd.DataFrame:
    return pd.DataFrame({"t_index": np.arange(len(profile)), "x": profile.values})


def _read(path: Path | str, columns: list[str]) -> pd.DataFrame:
    try:
        frame = pd.read_csv(
            path,
            float_precision="round_trip",
            dtype={"timestamp": str} if "timestamp" in columns else None,
            keep_default_na=False,
            na_values={c: [""] for c in columns if c != "timestamp"},
        )
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise IngestionError(f"cannot read {path}: {exc}") from exc
    if list(frame.columns) != columns:
        raise IngestionError(f"{path} does not have columns {columns}")
    return frame


def read_hurst_series(
    path: Path | str, window: int | None = None, shift: int | None = None
) -> LocalHurstSeries:
    """Parse a hurst_series CSV; window and shift default to what the index grid implies."""
    frame = _read(path, ["t_index", "timestamp", "H", "stderr"])
    t_index = frame["t_index"].to_numpy(dtype=np.int64)
    if len(t_index) == 0 and (window is None or shift is None):
        raise IngestionError(f"{path} has no rows; pass window and shift explicitly")
    if window is None:
        window = int(t_index[0]) + 1
    if shift is None:
        shift = int(t_index[1] - t_index[0]) if len(t_index) > 1 else 1

    stamps = frame["timestamp"].fillna("").astype(str)
    timestamps = None
    if len(stamps) and (stamps != "").all():
        timestamps = stamps.to_numpy().astype("datetime64[m]")
    return LocalHurstSeries(
        t_index=t_index,
        h=frame["H"].to_numpy(dtype=np.float64),
        stderr=frame["stderr"].to_numpy(dtype=np.float64),
        window=window,
        shift=shift,
        timestamps=timestamps,
    )


def read_profile_csv(path: Path | str) -> Profile:
    frame = _read(path, ["t_index", "x"])
    return Profile(values=frame["x"].to_numpy(dtype=np.float64))
