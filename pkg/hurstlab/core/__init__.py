from hurstlab.core.series import (
    PriceSeries,
    Profile,
    ProfileOrigin,
    ReturnSeries,
    returns_from_profile,
    session_dates,
    to_profile,
    to_returns,
)

__all__ = [
    "PriceSeries",
    "Profile",
    "ProfileOrigin",
    "ReturnSeries",
    "returns_from_profile",
    "session_dates",
    "to_profile",
    "to_returns",
]
