from hurstlab.resample.protocols import (
    ShuffleSpec,
    gaussian_surrogate,
    remove_eod_returns,
    shuffle_returns,
)

__all__ = ["ShuffleSpec", "gaussian_surrogate", "remove_eod_returns", "shuffle_returns"]
