"""Tests for shuffling, Gaussian surrogates and end-of-day removal."""

from __future__ import annotations

import numpy as np
import pytest
from scipy import stats

from hurstlab.core.series import ReturnSeries
from hurstlab.errors import ConfigurationError
from hurstlab.resample import ShuffleSpec, gaussian_surrogate, remove_eod_returns, shuffle_returns
from hurstlab.rng import stream


@pytest.fixture
def returns() -> ReturnSeries:
    values = np.array([0.01, -0.02, 0.0, 0.03, -0.005, 0.04, -0.01, 0.02])
    flags = np.array([False, False, True, False, False, True, False, False])
    stamps = np.datetime64("2024-01-02T09:31") + np.arange(8) * np.timedelta64(1, "m")
    return ReturnSeries(values=values, crosses_day=flags, timestamps=stamps)


class TestShuffle:
    def test_repeats_are_permutations(self, returns):
        shuffled = shuffle_returns(returns, ShuffleSpec(repeats=3, seed=1))
        assert len(shuffled) == 3
        for series in shuffled:
            assert sorted(series.values) == sorted(returns.values)

    def test_repeats_differ_and_are_reproducible(self):
        base = ReturnSeries(values=np.arange(1.0, 101.0), crosses_day=np.zeros(100, dtype=bool))
        first, second = shuffle_returns(base, ShuffleSpec(repeats=2, seed=4))
        again, _ = shuffle_returns(base, ShuffleSpec(repeats=2, seed=4))
        assert not np.array_equal(first.values, second.values)
        np.testing.assert_array_equal(first.values, again.values)

    def test_flags_cleared_and_timestamps_kept(self, returns):
        (series,) = shuffle_returns(returns, ShuffleSpec(repeats=1))
        assert series.day_boundaries == 0
        np.testing.assert_array_equal(series.timestamps, returns.timestamps)

    def test_repeats_must_be_positive(self):
        with pytest.raises(ConfigurationError):
            ShuffleSpec(repeats=0)


class TestGaussianSurrogate:
    def test_signs_kept_magnitudes_replaced(self, returns):
        surrogate = gaussian_surrogate(returns, seed=3)
        np.testing.assert_array_equal(np.sign(surrogate.values), np.sign(returns.values))
        assert surrogate.values[2] == 0.0
        assert not np.allclose(np.abs(surrogate.values), np.abs(returns.values))

    def test_flags_and_timestamps_kept(self, returns):
        surrogate = gaussian_surrogate(returns, seed=3)
        np.testing.assert_array_equal(surrogate.crosses_day, returns.crosses_day)
        np.testing.assert_array_equal(surrogate.timestamps, returns.timestamps)

    def test_deterministic(self, returns):
        a = gaussian_surrogate(returns, seed=5).values
        np.testing.assert_array_equal(a, gaussian_surrogate(returns, seed=5).values)

    def test_magnitudes_are_half_normal(self):
        signs = ReturnSeries(values=np.ones(50_000), crosses_day=np.zeros(50_000, dtype=bool))
        values = gaussian_surrogate(signs, seed=0).values
        assert np.mean(values) == pytest.approx(np.sqrt(2.0 / np.pi), abs=0.01)

    def test_fat_tailed_input_becomes_gaussian(self):
        heavy = stream(11).standard_t(3, size=100_000)
        series = ReturnSeries(values=heavy, crosses_day=np.zeros(len(heavy), dtype=bool))
        values = gaussian_surrogate(series, seed=12).values
        assert stats.kstest(np.abs(values), stats.halfnorm.cdf).pvalue > 0.01
        assert 2.5 <= stats.kurtosis(values, fisher=False) <= 3.5
        assert stats.kurtosis(heavy, fisher=False) > 5.0


class TestEodRemoval:
    def test_flagged_returns_dropped(self, returns):
        kept = remove_eod_returns(returns)
        assert len(kept) == 6
        assert kept.day_boundaries == 0
        assert 0.0 not in kept.values.tolist()
        assert 0.04 not in kept.values.tolist()
        assert len(kept.timestamps) == 6

    def test_untimestamped_series(self):
        series = ReturnSeries(values=[0.1, 0.2], crosses_day=[True, False])
        kept = remove_eod_returns(series)
        assert kept.values.tolist() == [0.2]
        assert kept.timestamps is None
