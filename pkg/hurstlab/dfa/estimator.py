"""DFA-p: box partitioning, polynomial detrending and the power-law fit of H.

The profile is cut into M = floor(N/τ) non-overlapping boxes (the trailing
N mod τ samples are dropped). Each box is detrended by its least-squares
degree-p polynomial, the RMS residual gives F^i(τ,p), and the box average
⟨F(τ,p)⟩_M is regressed on τ in log-log coordinates; the slope is H.

Box-local coordinates are mapped onto [-1, 1] and orthonormalized once per
(τ, p), so detrending a whole scale is two small matrix products. The same
shapes always go through the same operations, which keeps results
bitwise-identical whatever the degree of parallelism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from loguru import logger

from hurstlab.core.series import Profile
from hurstlab.errors import ConfigurationError, EstimationError
from hurstlab.fitting import loglog_fit

MIN_SERIES_LENGTH = 64
DEFAULT_TAU_FLOOR = 8
TAU_RATIO = 2.0 ** 0.25
MIN_FIT_POINTS = 3
# Mean fluctuations below this fraction of the profile range are rounding noise.
_ZERO_FLUCT_FRACTION = 1e-13

ProfileLike = Profile | np.ndarray


def _values(profile: ProfileLike) -> np.ndarray:
    if isinstance(profile, Profile):
        return profile.values
    return np.asarray(profile, dtype=np.float64)


@dataclass(frozen=True, slots=True)
class DfaConfig:
    """Detrending degree, box sizes and optional fit window (τ_min, τ_max)."""

    p: int = 2
    taus: tuple[int, ...] = ()
    fit_range: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ConfigurationError(f"polynomial degree must be >= 0, got {self.p}")
        taus = tuple(int(t) for t in self.taus)
        if not taus:
            raise ConfigurationError("at least one box size is required")
        if any(b <= a for a, b in zip(taus, taus[1:], strict=False)):
            raise ConfigurationError(f"box sizes must be strictly increasing: {taus}")
        if taus[0] < self.p + 2:
            raise ConfigurationError(
                f"box size {taus[0]} is too small for degree {self.p}",
                hint=f"Every τ must be >= p+2 = {self.p + 2}.",
            )
        if self.fit_range is not None:
            lo, hi = self.fit_range
            if lo > hi:
                raise ConfigurationError(f"fit range is empty: {self.fit_range}")
        object.__setattr__(self, "taus", taus)

    def check_length(self, n: int) -> None:
        """Every scale must leave at least four boxes in a series of length n."""
        if 4 * self.taus[-1] > n:
            raise ConfigurationError(
                f"largest box size {self.taus[-1]} exceeds N/4 for a series of length {n}",
                hint="Lower --taus-max or use a longer series/window.",
            )


@dataclass(frozen=True, slots=True)
class FluctuationPoint:
    tau: int
    mean_fluct: float
    boxes_used: int
    in_fit: bool


@dataclass(frozen=True, slots=True)
class FluctuationCurve:
    """⟨F(τ,p)⟩_M per scale plus the fitted exponent and its diagnostics."""

    points: tuple[FluctuationPoint, ...]
    hurst: float
    fit_stderr: float
    fit_r2: float
    p: int

    @property
    def taus(self) -> np.ndarray:
        return np.array([pt.tau for pt in self.points], dtype=np.int64)

    @property
    def mean_flucts(self) -> np.ndarray:
        return np.array([pt.mean_fluct for pt in self.points], dtype=np.float64)

    @property
    def fit_points(self) -> int:
        return sum(pt.in_fit for pt in self.points)

    @classmethod
    def from_points(
        cls,
        taus: np.ndarray,
        mean_flucts: np.ndarray,
        boxes_used: np.ndarray,
        p: int,
        fit_range: tuple[int, int] | None = None,
    ) -> FluctuationCurve:
        """Fit H through the nonzero points inside ``fit_range`` (all when unset)."""
        taus = np.asarray(taus, dtype=np.int64)
        flucts = np.asarray(mean_flucts, dtype=np.float64)
        lo, hi = fit_range if fit_range is not None else (taus[0], taus[-1])
        usable = (flucts > 0.0) & (taus >= lo) & (taus <= hi)

        if np.count_nonzero(usable) < MIN_FIT_POINTS:
            raise EstimationError(
                "insufficient scaling range",
                hint=f"Only {int(np.count_nonzero(usable))} nonzero scales inside the fit "
                f"range; at least {MIN_FIT_POINTS} are needed.",
            )
        excluded = np.count_nonzero((flucts <= 0.0) & (taus >= lo) & (taus <= hi))
        if excluded:
            logger.debug("Excluded {} zero-fluctuation scale(s) from the fit", excluded)

        fit = loglog_fit(taus[usable], flucts[usable])
        points = tuple(
            FluctuationPoint(
                tau=int(t), mean_fluct=float(f), boxes_used=int(m), in_fit=bool(u)
            )
            for t, f, m, u in zip(taus, flucts, boxes_used, usable, strict=True)
        )
        return cls(points=points, hurst=fit.slope, fit_stderr=fit.stderr, fit_r2=fit.r2, p=p)


@lru_cache(maxsize=512)
def _detrend_basis(tau: int, p: int) -> np.ndarray:
    """Orthonormal basis (τ x (p+1)) of degree-<=p polynomials on a box of τ samples."""
    u = np.linspace(-1.0, 1.0, tau)
    vander = np.vander(u, p + 1, increasing=True)
    q, _ = np.linalg.qr(vander)
    q.setflags(write=False)
    return q


def _box_fluctuations(x: np.ndarray, tau: int, p: int) -> np.ndarray:
    boxes = len(x) // tau
    segments = x[: boxes * tau].reshape(boxes, tau)
    basis = _detrend_basis(tau, p)
    residual = segments - (segments @ basis) @ basis.T
    return np.sqrt(np.mean(residual * residual, axis=1))


def box_fluctuation(profile: ProfileLike, tau: int, p: int) -> np.ndarray:
    """F^i(τ,p) for each of the floor(N/τ) boxes of the profile."""
    x = _values(profile)
    if tau < p + 2:
        raise ConfigurationError(
            f"box size {tau} is too small for degree {p}",
            hint=f"A degree-{p} fit needs τ >= {p + 2} for a nonzero residual.",
        )
    if tau > len(x):
        raise ConfigurationError(f"box size {tau} exceeds the series length {len(x)}")
    return _box_fluctuations(x, tau, p)


def _curve(x: np.ndarray, config: DfaConfig) -> FluctuationCurve:
    config.check_length(len(x))
    floor = _ZERO_FLUCT_FRACTION * float(np.ptp(x))
    taus = np.array(config.taus, dtype=np.int64)
    flucts = np.empty(len(taus), dtype=np.float64)
    boxes = np.empty(len(taus), dtype=np.int64)
    for k, tau in enumerate(config.taus):
        per_box = _box_fluctuations(x, tau, config.p)
        boxes[k] = len(per_box)
        mean = float(np.mean(per_box))
        flucts[k] = mean if mean > floor else 0.0
    return FluctuationCurve.from_points(taus, flucts, boxes, config.p, config.fit_range)


def fluctuation_curve(profile: ProfileLike, config: DfaConfig) -> FluctuationCurve:
    """⟨F(τ,p)⟩_M for every τ in the config and the OLS slope H over the fit range."""
    return _curve(_values(profile), config)


def default_taus(
    n: int,
    p: int = 2,
    tau_min: int | None = None,
    tau_max: int | None = None,
) -> tuple[int, ...]:
    """Geometric box-size grid with ratio 2^(1/4) from max(8, p+2) to floor(N/4)."""
    lo = tau_min if tau_min is not None else max(DEFAULT_TAU_FLOOR, p + 2)
    hi = tau_max if tau_max is not None else n // 4
    if lo < p + 2:
        raise ConfigurationError(f"τ_min {lo} is below p+2 = {p + 2}")
    if hi > n // 4:
        raise ConfigurationError(
            f"τ_max {hi} exceeds N/4 = {n // 4}", hint="Use a longer window or lower --taus-max."
        )
    if hi < lo:
        raise ConfigurationError(f"empty τ grid: τ_min {lo} > τ_max {hi}")

    steps = int(math.floor(4.0 * math.log2(hi / lo))) + 1
    grid = np.rint(lo * TAU_RATIO ** np.arange(steps)).astype(np.int64)
    grid = np.unique(grid[grid <= hi])
    if grid[-1] < hi:
        grid = np.append(grid, hi)
    return tuple(int(t) for t in grid)


def dfa_config_for(
    n: int,
    p: int = 2,
    tau_min: int | None = None,
    tau_max: int | None = None,
    fit_range: tuple[int, int] | None = None,
) -> DfaConfig:
    """DfaConfig with the default grid for a series (or window) of length n."""
    if n < MIN_SERIES_LENGTH:
        raise EstimationError(
            "series too short",
            hint=f"DFA needs at least {MIN_SERIES_LENGTH} samples, got {n}.",
        )
    return DfaConfig(p=p, taus=default_taus(n, p, tau_min, tau_max), fit_range=fit_range)


def estimate_hurst(
    profile: ProfileLike,
    p: int = 2,
    *,
    tau_min: int | None = None,
    tau_max: int | None = None,
) -> FluctuationCurve:
    """DFA-p with the default geometric τ grid."""
    x = _values(profile)
    return _curve(x, dfa_config_for(len(x), p, tau_min, tau_max))
