"""Tests for Hurst histograms, subperiods, KS comparisons and scaling laws."""

from __future__ import annotations

import numpy as np
import pytest

from hurstlab.errors import ConfigurationError, DomainError, EstimationError
from hurstlab.local_hurst import LocalHurstSeries
from hurstlab.stats import (
    bin_count,
    hurst_pdf,
    ks_compare,
    mean_h_vs_l,
    sigma_vs_l,
    split_subperiods,
    subperiod_samples,
)


def _series(h: np.ndarray, window: int = 512) -> LocalHurstSeries:
    n = len(h)
    return LocalHurstSeries(
        t_index=np.arange(window - 1, window - 1 + 10 * n, 10),
        h=np.asarray(h, dtype=np.float64),
        stderr=np.zeros(n),
        window=window,
        shift=10,
    )


class TestHurstPdf:
    def test_constant_samples_fill_one_bin(self):
        dist = hurst_pdf(np.full(200, 0.5))
        assert np.count_nonzero(dist.density) == 1
        assert abs(dist.mode_bin - 0.5) <= dist.bin_width / 2 + 1e-9
        assert dist.mean == 0.5
        assert dist.std == 0.0

    def test_uniform_samples_have_unit_density(self):
        samples = (np.arange(5000) + 0.5) / 5000
        dist = hurst_pdf(samples, bin_width=0.02)
        assert len(dist.density) == 50
        np.testing.assert_allclose(dist.density, 1.0, atol=1e-9)
        assert dist.bin_centers[0] == pytest.approx(0.01)

    def test_out_of_range_samples_counted_as_overflow(self):
        dist = hurst_pdf([-0.1, 0.5, 1.2], bin_width=0.05)
        assert dist.overflow == 2
        assert np.sum(dist.density) * dist.bin_width == pytest.approx(1.0)
        assert dist.mean == pytest.approx(1.6 / 3)

    def test_empty_samples(self):
        with pytest.raises(EstimationError, match="no samples"):
            hurst_pdf([])

    def test_nan_samples(self):
        with pytest.raises(DomainError):
            hurst_pdf([0.5, np.nan])

    def test_bin_width_must_divide_unit_interval(self):
        assert bin_count(0.025) == 40
        with pytest.raises(ConfigurationError):
            bin_count(0.03)


class TestSubperiods:
    def test_equal_blocks_of_finite_samples(self):
        h = np.linspace(0.3, 0.7, 100)
        h[10] = np.nan
        blocks = subperiod_samples(_series(h), 3)
        assert [len(b) for b in blocks] == [33, 33, 33]
        assert not np.any(np.isnan(np.concatenate(blocks)))

    def test_blocks_keep_time_order(self):
        blocks = split_subperiods(_series(np.linspace(0.2, 0.8, 90)), 3)
        modes = [b.mode_bin for b in blocks]
        assert modes == sorted(modes)

    def test_at_least_two_blocks(self):
        with pytest.raises(ConfigurationError):
            subperiod_samples(_series(np.full(100, 0.5)), 1)

    def test_too_few_samples(self):
        with pytest.raises(EstimationError, match="too few samples"):
            subperiod_samples(_series(np.full(50, 0.5)), 2)


class TestKs:
    def test_identical_samples(self):
        values = np.linspace(0, 1, 100)
        result = ks_compare(values, values)
        assert result.statistic == 0.0
        assert result.pvalue == pytest.approx(1.0)

    def test_shifted_samples_are_distinguished(self):
        rng = np.random.default_rng(0)
        result = ks_compare(rng.normal(0.4, 0.05, 500), rng.normal(0.6, 0.05, 500))
        assert result.pvalue < 1e-6

    def test_empty_side(self):
        with pytest.raises(EstimationError):
            ks_compare([], [0.5])


class TestSigmaScaling:
    def test_exact_power_law(self):
        base = np.random.default_rng(1).standard_normal(200)
        base = (base - base.mean()) / np.std(base, ddof=1)
        windows = [512, 1024, 2048, 4096]
        family = {w: 0.5 + base * w**-0.4 for w in windows}
        fit = sigma_vs_l(family)
        assert fit.exponent == pytest.approx(0.4, abs=1e-10)
        assert fit.predict(1024) == pytest.approx(1024**-0.4, rel=1e-9)
        assert fit.windows.tolist() == windows
        assert fit.excluded == ()

    def test_zero_spread_scale_excluded(self):
        base = np.random.default_rng(2).standard_normal(100)
        family = {w: 0.5 + base / w for w in (512, 1024, 2048)}
        family[4096] = np.full(100, 0.5)
        fit = sigma_vs_l(family)
        assert fit.excluded == (4096,)
        assert fit.warnings
        assert fit.exponent == pytest.approx(1.0, abs=1e-9)

    def test_needs_three_window_lengths(self):
        base = np.random.default_rng(3).standard_normal(100)
        with pytest.raises(EstimationError):
            sigma_vs_l({512: base, 1024: base})

    def test_needs_enough_samples_per_window(self):
        base = np.random.default_rng(3).standard_normal(100)
        with pytest.raises(EstimationError, match="L=2048"):
            sigma_vs_l({512: base, 1024: base, 2048: base[:10]})


class TestMeanScaling:
    def test_identical_series_have_flat_curve(self):
        h = np.linspace(0.4, 0.6, 50)
        fit = mean_h_vs_l({w: _series(h, w) for w in (512, 1024, 2048)})
        assert fit.exponent == pytest.approx(0.0, abs=1e-12)
        assert fit.values == pytest.approx([0.5, 0.5, 0.5])
        assert fit.spread[0] == pytest.approx(np.std(h, ddof=1))

    def test_needs_two_window_lengths(self):
        with pytest.raises(EstimationError):
            mean_h_vs_l({512: _series(np.full(40, 0.5))})

    def test_all_nan_window(self):
        family = {512: _series(np.full(40, 0.5)), 1024: _series(np.full(40, np.nan), 1024)}
        with pytest.raises(EstimationError, match="no finite"):
            mean_h_vs_l(family)
