"""hurstlab - Local Hurst exponents of price series via detrended fluctuation analysis."""

__version__ = "0.4.0"
