"""Histograms of local Hurst samples, subperiod splits and KS comparisons."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger
from scipy import stats

from hurstlab.errors import ConfigurationError, DomainError, EstimationError
from hurstlab.local_hurst.rolling import LocalHurstSeries

DEFAULT_BIN_WIDTH = 0.02
MIN_BLOCK_SAMPLES = 30


@dataclass(frozen=True, slots=True, eq=False)
class HurstDistribution:
    """Normalized histogram of H samples on a uniform grid over [0, 1].

    Samples outside [0, 1] are counted in ``overflow`` and land in the
    boundary bins, so the density still integrates to one.
    """

    bin_edges: np.ndarray
    density: np.ndarray
    n: int
    mean: float
    std: float
    mode_bin: float
    overflow: int

    @property
    def bin_width(self) -> float:
        return float(self.bin_edges[1] - self.bin_edges[0])

    @property
    def bin_centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])


def bin_count(bin_width: float) -> int:
    bins = int(round(1.0 / bin_width))
    if bins < 1 or abs(bins * bin_width - 1.0) > 1e-9:
        raise ConfigurationError(
            f"bin width {bin_width} does not divide [0, 1] evenly",
            hint="Use a width such as 0.01, 0.02, 0.025 or 0.05.",
        )
    return bins


def hurst_pdf(
    samples: Sequence[float] | np.ndarray, bin_width: float = DEFAULT_BIN_WIDTH
) -> HurstDistribution:
    """Density histogram plus moments (population std) of the samples."""
    values = np.asarray(samples, dtype=np.float64).ravel()
    if values.size == 0:
        raise EstimationError("no samples")
    if not np.all(np.isfinite(values)):
        raise DomainError("Hurst samples must be finite", hint="Filter NaN windows first.")

    edges = np.linspace(0.0, 1.0, bin_count(bin_width) + 1)
    overflow = int(np.count_nonzero((values < 0.0) | (values > 1.0)))
    counts, _ = np.histogram(np.clip(values, 0.0, 1.0), bins=edges)
    density = counts / (values.size * (edges[1] - edges[0]))
    centers = 0.5 * (edges[:-1] + edges[1:])
    return HurstDistribution(
        bin_edges=edges,
        density=density,
        n=int(values.size),
        mean=float(np.mean(values)),
        std=float(np.std(values)),
        mode_bin=float(centers[int(np.argmax(counts))]),
        overflow=overflow,
    )


def subperiod_samples(series: LocalHurstSeries, k: int) -> list[np.ndarray]:
    """Finite H samples cut into k contiguous blocks of equal length (±1)."""
    if k < 2:
        raise ConfigurationError(f"subperiod count must be >= 2, got {k}")
    values = series.finite_h()
    if len(values) < k * MIN_BLOCK_SAMPLES:
        raise EstimationError(
            f"too few samples for {k} subperiods",
            hint=f"L={series.window} has {len(values)} samples; need >= {k * MIN_BLOCK_SAMPLES}.",
        )
    return np.array_split(values, k)


def split_subperiods(
    series: LocalHurstSeries, k: int, bin_width: float = DEFAULT_BIN_WIDTH
) -> list[HurstDistribution]:
    blocks = [hurst_pdf(block, bin_width) for block in subperiod_samples(series, k)]
    logger.debug(
        "L={} split into {} subperiods, modes {}",
        series.window,
        k,
        [round(b.mode_bin, 3) for b in blocks],
    )
    return blocks


@dataclass(frozen=True, slots=True)
class KsResult:
    statistic: float
    pvalue: float


def ks_compare(a: Sequence[float] | np.ndarray, b: Sequence[float] | np.ndarray) -> KsResult:
    """Two-sample Kolmogorov–Smirnov test of equal distributions."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.size == 0 or b.size == 0:
        raise EstimationError("no samples")
    result = stats.ks_2samp(a, b)
    return KsResult(statistic=float(result.statistic), pvalue=float(result.pvalue))
