"""Ordinary least-squares lines through log-log points.

Shared by the DFA scaling fit (log F vs log τ), the σ_H-vs-L law and the
empirical tail check. Unweighted OLS; the slope standard error is the usual
sqrt(SSR / (n-2) / Sxx).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from hurstlab.errors import EstimationError


@dataclass(frozen=True, slots=True)
class LineFit:
    slope: float
    intercept: float
    stderr: float
    r2: float
    n: int


def line_fit(x: np.ndarray, y: np.ndarray) -> LineFit:
    """OLS line y = intercept + slope * x."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise EstimationError("fit abscissa and ordinate must be 1-D and equally long")
    if len(x) < 2 or np.ptp(x) == 0.0:
        raise EstimationError(f"a line fit needs at least 2 distinct abscissae, got {len(x)}")

    result = stats.linregress(x, y)
    stderr = float(result.stderr) if len(x) > 2 else float("nan")
    return LineFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        stderr=stderr,
        r2=float(result.rvalue) ** 2,
        n=len(x),
    )


def loglog_fit(x: np.ndarray, y: np.ndarray) -> LineFit:
    """OLS line through (ln x, ln y); every value must be strictly positive."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if np.any(x <= 0.0) or np.any(y <= 0.0):
        raise EstimationError("log-log fit needs strictly positive coordinates")
    return line_fit(np.log(x), np.log(y))


def survival_slope(values: np.ndarray, q_min: float, q_max: float, points: int = 20) -> LineFit:
    """Log-log slope of the empirical survival function P(|y| > q) over [q_min, q_max].

    For a tail decaying as q^-α the slope is close to -α.
    """
    magnitudes = np.sort(np.abs(np.asarray(values, dtype=np.float64)))
    if not 0.0 < q_min < q_max:
        raise EstimationError(f"need 0 < q_min < q_max, got [{q_min}, {q_max}]")
    qs = np.geomspace(q_min, q_max, points)
    exceed = len(magnitudes) - np.searchsorted(magnitudes, qs, side="right")
    keep = exceed > 0
    if np.count_nonzero(keep) < 3:
        raise EstimationError("too few exceedances to fit the tail")
    return loglog_fit(qs[keep], exceed[keep] / len(magnitudes))
