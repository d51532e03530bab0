"""Seeded Monte-Carlo ensembles of DFA estimates on synthetic paths.

Member k is generated from stream (seed, k) and, when shuffled, permuted
with its own child seed, so any member can be regenerated on its own and
the ensemble does not depend on the worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from loguru import logger

from hurstlab.core.series import Profile, ProfileOrigin, returns_from_profile, to_profile
from hurstlab.dfa.estimator import estimate_hurst
from hurstlab.errors import ConfigurationError
from hurstlab.parallel import ordered_map
from hurstlab.resample.protocols import ShuffleSpec, shuffle_returns
from hurstlab.rng import derive_seed
from hurstlab.synth.fbm import FbmSpec, generate_fbm
from hurstlab.synth.levy import LevySpec, generate_levy


class SynthKind(StrEnum):
    FBM = "fbm"
    LEVY = "levy"


@dataclass(frozen=True, slots=True, eq=False)
class EnsembleSummary:
    """DFA-p estimates of every member; ``nominal`` is h for fBm and 1/α for Lévy walks."""

    kind: SynthKind
    nominal: float
    length: int
    p: int
    shuffled: bool
    estimates: np.ndarray

    @property
    def mean(self) -> float:
        return float(np.mean(self.estimates))

    @property
    def std(self) -> float:
        return float(np.std(self.estimates, ddof=1)) if len(self.estimates) > 1 else 0.0


def member_profile(kind: SynthKind, param: float, length: int, seed: int, member: int) -> Profile:
    """Path of ensemble member ``member``; ``param`` is h (fBm) or α (Lévy)."""
    if kind is SynthKind.FBM:
        return generate_fbm(FbmSpec(h=param, length=length, seed=seed, member=member))
    return generate_levy(LevySpec(alpha=param, length=length, seed=seed, member=member))


def _shuffled(profile: Profile, seed: int, member: int) -> Profile:
    spec = ShuffleSpec(repeats=1, seed=derive_seed(seed, member, 1))
    (permuted,) = shuffle_returns(returns_from_profile(profile), spec)
    return to_profile(permuted, x0=float(profile.values[0]), origin=ProfileOrigin.RESAMPLED)


def run_ensemble(
    kind: SynthKind | str,
    param: float,
    length: int,
    members: int = 500,
    p: int = 2,
    seed: int = 0,
    *,
    shuffled: bool = False,
    workers: int = 1,
) -> EnsembleSummary:
    """Estimate H on ``members`` independent paths of ``length`` samples."""
    kind = SynthKind(kind)
    if members < 1:
        raise ConfigurationError(f"an ensemble needs at least one member, got {members}")

    def estimate(member: int) -> float:
        profile = member_profile(kind, param, length, seed, member)
        if shuffled:
            profile = _shuffled(profile, seed, member)
        return estimate_hurst(profile, p).hurst

    logger.debug(
        "Ensemble {} param={} N={} members={} DFA-{} shuffled={}",
        kind, param, length, members, p, shuffled,
    )
    estimates = np.array(ordered_map(estimate, range(members), workers), dtype=np.float64)
    nominal = param if kind is SynthKind.FBM else 1.0 / param
    summary = EnsembleSummary(
        kind=kind, nominal=nominal, length=length, p=p, shuffled=shuffled, estimates=estimates
    )
    logger.info(
        "Ensemble {} nominal H={:.3f}: mean {:.4f} ± {:.4f}",
        kind,
        nominal,
        summary.mean,
        summary.std,
    )
    return summary


def running_mean(estimates: np.ndarray) -> np.ndarray:
    """⟨H⟩ over the first m members, for m = 1..len(estimates)."""
    values = np.asarray(estimates, dtype=np.float64)
    return np.cumsum(values) / np.arange(1, len(values) + 1)
