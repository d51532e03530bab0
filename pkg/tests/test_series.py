"""Tests for price, return and profile series."""

from __future__ import annotations

import numpy as np
import pytest

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
from hurstlab.errors import DomainError, EstimationError


def _minutes(*stamps: str) -> np.ndarray:
    return np.array(stamps, dtype="datetime64[m]")


class TestPriceSeries:
    def test_valid_series(self):
        prices = PriceSeries(_minutes("2024-01-02T09:30", "2024-01-02T09:31"), [100.0, 101.0])
        assert len(prices) == 2
        assert prices.prices.flags.writeable is False

    def test_non_positive_price_names_index(self):
        with pytest.raises(DomainError, match="index 1"):
            PriceSeries(_minutes("2024-01-02T09:30", "2024-01-02T09:31"), [100.0, 0.0])

    def test_timestamps_must_increase(self):
        with pytest.raises(DomainError, match="does not increase"):
            PriceSeries(_minutes("2024-01-02T09:31", "2024-01-02T09:31"), [100.0, 101.0])

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            PriceSeries(_minutes("2024-01-02T09:30"), [100.0, 101.0])


class TestReturns:
    def test_log_returns_and_no_boundary(self):
        prices = PriceSeries(
            _minutes("2024-01-02T09:30", "2024-01-02T09:31", "2024-01-02T09:32"),
            [100.0, 110.0, 99.0],
        )
        returns = to_returns(prices)
        assert returns.values == pytest.approx([np.log(1.1), np.log(99.0 / 110.0)])
        assert returns.day_boundaries == 0
        assert returns.timestamps[0] == np.datetime64("2024-01-02T09:31")

    def test_day_boundary_flagged_once(self):
        prices = PriceSeries(
            _minutes(
                "2024-01-02T15:59", "2024-01-02T16:00", "2024-01-03T09:30", "2024-01-03T09:31"
            ),
            [100.0, 100.5, 102.0, 101.0],
        )
        returns = to_returns(prices)
        assert returns.crosses_day.tolist() == [False, True, False]

    def test_session_offset_moves_boundary(self):
        stamps = _minutes(
            "2024-01-02T16:59", "2024-01-02T17:00", "2024-01-02T23:59", "2024-01-03T00:01"
        )
        days = session_dates(stamps, session_offset_minutes=17 * 60)
        assert days[0] != days[1]
        assert days[1] == days[2] == days[3]

    def test_non_finite_return_rejected(self):
        with pytest.raises(DomainError):
            ReturnSeries(values=[0.1, np.nan], crosses_day=[False, False])


class TestProfile:
    def test_to_profile_cumulates_from_x0(self):
        returns = ReturnSeries(values=[1.0, -2.0, 0.5], crosses_day=[False] * 3)
        profile = to_profile(returns, x0=10.0, origin=ProfileOrigin.INGESTED)
        assert profile.values.tolist() == [10.0, 11.0, 9.0, 9.5]
        assert profile.origin is ProfileOrigin.INGESTED

    def test_empty_returns_rejected(self):
        with pytest.raises(EstimationError):
            to_profile(ReturnSeries(values=[], crosses_day=[]))

    def test_profile_needs_two_samples(self):
        with pytest.raises(EstimationError):
            Profile(values=[1.0])

    def test_returns_from_profile_inverts_to_profile(self):
        returns = ReturnSeries(values=[0.25, -0.5, 0.125], crosses_day=[False] * 3)
        back = returns_from_profile(to_profile(returns))
        assert back.values.tolist() == [0.25, -0.5, 0.125]
        assert back.day_boundaries == 0
        assert back.timestamps is None

    def test_profile_is_read_only(self):
        profile = Profile(values=[0.0, 1.0, 2.0])
        with pytest.raises(ValueError):
            profile.values[0] = 5.0
