from hurstlab.config.loader import get_config_path, load_config, save_config
from hurstlab.config.schema import (
    DEFAULT_WINDOWS,
    MIN_WINDOW,
    DfaDefaults,
    HistogramConfig,
    HurstLabConfig,
    IngestConfig,
    ResampleDefaults,
    RollingDefaults,
)

__all__ = [
    "DEFAULT_WINDOWS",
    "MIN_WINDOW",
    "DfaDefaults",
    "HistogramConfig",
    "HurstLabConfig",
    "IngestConfig",
    "ResampleDefaults",
    "RollingDefaults",
    "get_config_path",
    "load_config",
    "save_config",
]
