"""Fractional Brownian motion by circulant embedding of the fGn covariance.

The autocovariance of unit fractional Gaussian noise,
γ(k) = ½(|k+1|^{2h} − 2|k|^{2h} + |k−1|^{2h}), is embedded in a circulant
matrix of size 2n (n = N−1 rounded up to a power of two). Its eigenvalues
come from one FFT; scaling a complex standard normal vector by their square
roots and transforming back gives an exact fGn sample in the real part.
The path is the cumulative sum of the first N−1 increments, starting at 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from loguru import logger

from hurstlab.core.series import Profile, ProfileOrigin
from hurstlab.errors import DomainError
from hurstlab.rng import stream


@dataclass(frozen=True, slots=True)
class FbmSpec:
    """Nominal Hurst index, path length N and seed (member selects an ensemble stream)."""

    h: float
    length: int
    seed: int = 0
    member: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.h < 1.0:
            raise DomainError(f"fBm Hurst index must lie in (0, 1), got {self.h}")
        if self.length < 2:
            raise DomainError(f"fBm path length must be >= 2, got {self.length}")

    @property
    def embedding_size(self) -> int:
        """Number of increments actually simulated: N−1 rounded up to a power of two."""
        return 1 << (self.length - 2).bit_length()


def fgn_autocovariance(h: float, lags: np.ndarray) -> np.ndarray:
    k = np.abs(np.asarray(lags, dtype=np.float64))
    two_h = 2.0 * h
    return 0.5 * (np.abs(k + 1.0) ** two_h - 2.0 * k**two_h + np.abs(k - 1.0) ** two_h)


@lru_cache(maxsize=32)
def _embedding_scale(h: float, n: int) -> np.ndarray:
    """sqrt(λ_k / 2n) for the circulant embedding of n increments."""
    gamma = fgn_autocovariance(h, np.arange(n + 1))
    row = np.concatenate([gamma, gamma[n - 1 : 0 : -1]])
    eigenvalues = np.fft.fft(row).real
    lowest = float(eigenvalues.min())
    if lowest < -1e-8 * float(eigenvalues.max()):
        logger.warning("Circulant embedding has negative eigenvalue {:.3e}; clipping", lowest)
    scale = np.sqrt(np.clip(eigenvalues, 0.0, None) / len(row))
    scale.setflags(write=False)
    return scale


def fgn(h: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """n samples of unit-variance fractional Gaussian noise (n a power of two)."""
    scale = _embedding_scale(h, n)
    noise = rng.standard_normal(2 * n) + 1j * rng.standard_normal(2 * n)
    return np.fft.fft(scale * noise).real[:n]


def generate_fbm(spec: FbmSpec) -> Profile:
    """An N-sample fBm path with Hurst index h; deterministic given (seed, member)."""
    rng = stream(spec.seed) if spec.member is None else stream(spec.seed, spec.member)
    increments = fgn(spec.h, spec.embedding_size, rng)[: spec.length - 1]
    path = np.concatenate([[0.0], np.cumsum(increments)])
    return Profile(values=path, origin=ProfileOrigin.SYNTHETIC_FBM)
