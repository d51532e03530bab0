from hurstlab.stats.distribution import (
    DEFAULT_BIN_WIDTH,
    HurstDistribution,
    KsResult,
    bin_count,
    hurst_pdf,
    ks_compare,
    split_subperiods,
    subperiod_samples,
)
from hurstlab.stats.scaling import ScalingFit, mean_h_vs_l, sigma_vs_l

__all__ = [
    "DEFAULT_BIN_WIDTH",
    "HurstDistribution",
    "KsResult",
    "ScalingFit",
    "bin_count",
    "hurst_pdf",
    "ks_compare",
    "mean_h_vs_l",
    "sigma_vs_l",
    "split_subperiods",
    "subperiod_samples",
]
