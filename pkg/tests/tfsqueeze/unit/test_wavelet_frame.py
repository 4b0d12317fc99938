"""
Test Suite: Wavelet Frame

Gaussian window, weighted variants, scale grid and the reliable region.
"""
import math

import numpy as np
import pytest

from reference_signals import DIRAC_FS, DIRAC_K_MAX, DIRAC_K_MIN, DIRAC_L
from tfsqueeze.core.infrastructure.frameworks.errors import RangeError
from tfsqueeze.core.models.frame import WaveletSpec, WindowWeight
from tfsqueeze.core.workflows.wavelet_frame import (
    angular_axis,
    gauss_hat,
    interior_mask,
    make_scale_grid,
    reliable_region,
    window_row,
    window_values,
)


class TestWindow:

    def test_gauss_hat_peak(self, spec):
        assert gauss_hat(spec, 0.0) == pytest.approx(math.sqrt(2 * math.pi))
        assert isinstance(gauss_hat(spec, 1.0), float)

    def test_gauss_hat_is_transform_of_g(self):
        spec = WaveletSpec(sigma=0.5)
        t = np.linspace(-20, 20, 40001)
        dt = t[1] - t[0]
        for w in (0.0, 0.7, 2.0):
            numeric = np.sum(spec.g(t) * np.exp(-1j * w * t)) * dt
            assert numeric.real == pytest.approx(gauss_hat(spec, w), rel=1e-9)

    def test_weighted_variants(self, spec):
        a, shift = 0.5, np.array([-2.0, 0.0, 3.0])
        plain = window_values(spec, a, shift, WindowWeight.PLAIN)
        freq = window_values(spec, a, shift, WindowWeight.FREQ_WEIGHTED)
        time = window_values(spec, a, shift, WindowWeight.TIME_WEIGHTED)
        assert np.allclose(freq, a * shift * plain)
        assert np.allclose(time, 1j * spec.sigma * a * shift * plain)

    def test_window_row_rejects_bad_scale(self, spec):
        with pytest.raises(RangeError):
            window_row(spec, 0.0, WindowWeight.PLAIN, 64, 64.0)

    def test_window_row_peaks_at_centre(self, spec):
        L, fs = 256, 256.0
        a = spec.omega0 / (2 * math.pi * 40.0)
        row = window_row(spec, a, WindowWeight.PLAIN, L, fs)
        assert np.argmax(row) == 40

    def test_support_and_spectral_radius(self, spec):
        assert spec.g(spec.support_radius) == pytest.approx(1e-8)
        d_f = spec.spectral_radius(1e-6)
        assert gauss_hat(spec, d_f) / gauss_hat(spec, 0.0) == pytest.approx(1e-6)

    def test_bad_wavelet_rejected(self):
        with pytest.raises(RangeError):
            WaveletSpec(omega0=0.0)
        with pytest.raises(RangeError):
            WaveletSpec(sigma=-1.0)


class TestAngularAxis:

    def test_nyquist_is_positive(self):
        xi = angular_axis(8, 8.0)
        assert xi[4] == pytest.approx(math.pi * 8.0)
        assert xi[5] < 0

    def test_odd_length(self):
        xi = angular_axis(7, 7.0)
        assert np.all(xi[:4] >= 0) and np.all(xi[4:] < 0)


class TestScaleGrid:

    def test_bin_aligned(self, spec):
        grid = make_scale_grid(DIRAC_L, DIRAC_FS, spec, k_min=5, k_max=20)
        assert grid.K == 16
        assert grid.k_max == 20
        assert np.allclose(grid.omegas, np.arange(5, 21) * 2 * math.pi)
        assert np.allclose(grid.scales * grid.omegas, spec.omega0)
        assert np.allclose(grid.freqs_hz, np.arange(5, 21))

    def test_default_k_max_is_half_length(self, spec):
        grid = make_scale_grid(64, 64.0, spec)
        assert grid.bins[0] == 1 and grid.bins[-1] == 32

    @pytest.mark.parametrize("k_min,k_max", [(0, None), (32, None), (10, 9), (1, 33)])
    def test_out_of_range(self, spec, k_min, k_max):
        with pytest.raises(RangeError):
            make_scale_grid(64, 64.0, spec, k_min=k_min, k_max=k_max)

    def test_nearest_row(self, spec):
        grid = make_scale_grid(64, 64.0, spec, k_min=4, k_max=20)
        step = grid.freq_step_rad
        assert grid.nearest_row(np.array([4 * step, 6.4 * step, 6.6 * step, 30 * step])).tolist() == [0, 2, 3, 26]


class TestReliableRegion:

    def test_dirac_frame_rows(self, spec):
        grid = make_scale_grid(DIRAC_L, DIRAC_FS, spec)
        row_ok, margin = reliable_region(grid, spec)
        reliable_bins = grid.bins[row_ok]
        assert reliable_bins[0] == DIRAC_K_MIN
        assert reliable_bins[-1] == DIRAC_K_MAX
        assert np.all(np.diff(reliable_bins) == 1)
        # margins shrink as scales shrink
        assert np.all(np.diff(margin) <= 0)

    def test_interior_mask_shape(self, spec):
        grid = make_scale_grid(DIRAC_L, DIRAC_FS, spec)
        mask = interior_mask(grid, spec)
        assert mask.shape == (grid.K, DIRAC_L)
        row_ok, margin = reliable_region(grid, spec)
        k = int(np.flatnonzero(row_ok)[0])
        assert not mask[k, margin[k] - 1]
        assert mask[k, margin[k]]
