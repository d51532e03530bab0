"""Symmetric α-stable random walks (Chambers–Mallows–Stuck sampler).

With φ ~ U(−π/2, π/2) and ν ~ Exp(1),

    y = sin(αφ) / cos(φ)^{1/α} · [cos((1−α)φ) / ν]^{(1−α)/α}

is a standard symmetric α-stable variate (unit scale, no drift). α = 2 gives
Gaussian increments of variance 2, α = 1 reduces to tan(φ). The walk is
self-affine with H = 1/α although its increments are independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hurstlab.core.series import Profile, ProfileOrigin
from hurstlab.errors import DomainError
from hurstlab.rng import stream


@dataclass(frozen=True, slots=True)
class LevySpec:
    alpha: float
    length: int
    seed: int = 0
    member: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 2.0:
            raise DomainError(f"stability index α must lie in (0, 2], got {self.alpha}")
        if self.length < 2:
            raise DomainError(f"Lévy walk length must be >= 2, got {self.length}")

    @property
    def nominal_hurst(self) -> float:
        return 1.0 / self.alpha


def stable_increments(alpha: float, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` i.i.d. standard symmetric α-stable draws."""
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"stability index α must lie in (0, 2], got {alpha}")
    phi = rng.uniform(-np.pi / 2.0, np.pi / 2.0, size)
    nu = rng.exponential(1.0, size)
    if alpha == 1.0:
        return np.tan(phi)
    head = np.sin(alpha * phi) / np.cos(phi) ** (1.0 / alpha)
    tail = (np.cos((1.0 - alpha) * phi) / nu) ** ((1.0 - alpha) / alpha)
    return head * tail


def generate_levy(spec: LevySpec) -> Profile:
    """Cumulative sum of N−1 stable increments, starting at 0."""
    rng = stream(spec.seed) if spec.member is None else stream(spec.seed, spec.member)
    increments = stable_increments(spec.alpha, spec.length - 1, rng)
    path = np.concatenate([[0.0], np.cumsum(increments)])
    return Profile(values=path, origin=ProfileOrigin.SYNTHETIC_LEVY)
