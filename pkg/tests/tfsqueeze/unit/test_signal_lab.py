"""
Test Suite: Signal Lab

Synthetic signals, calibrated noise and the spectrum conventions:
- Dirac placement and range checks
- GD chirp synthesis and model validation
- Exact realized SNR and seeded determinism
- Analytic / real round trip
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reference_signals import DIRAC_FS, DIRAC_INDEX, DIRAC_L, PULSE_FS, PULSE_L, PULSE_SPACING
from tfsqueeze.core.infrastructure.frameworks.errors import RangeError, UndefinedMetricError
from tfsqueeze.core.models.signal import ChirpModel, DampedTone, DiscreteSignal, GaussianProfile
from tfsqueeze.core.workflows import signal_lab


class TestDirac:

    def test_unit_sample_at_rounded_index(self, dirac_signal):
        assert dirac_signal.length == DIRAC_L
        assert np.flatnonzero(dirac_signal.samples).tolist() == [DIRAC_INDEX]
        assert dirac_signal.samples[DIRAC_INDEX] == 1.0

    @pytest.mark.parametrize("t0", [-0.01, 1.0, 2.5])
    def test_outside_record_rejected(self, t0):
        with pytest.raises(RangeError):
            signal_lab.synth_dirac(t0, DIRAC_L, DIRAC_FS)

    def test_last_sample_allowed(self):
        x = signal_lab.synth_dirac((DIRAC_L - 1) / DIRAC_FS, DIRAC_L, DIRAC_FS)
        assert x.samples[-1] == 1.0

    def test_last_half_sample_names_rounded_index(self):
        with pytest.raises(RangeError, match=f"rounds to sample {DIRAC_L}, past the last sample {DIRAC_L - 1}"):
            signal_lab.synth_dirac(0.999, DIRAC_L, DIRAC_FS)


class TestChirpModel:

    def test_group_delay_is_minus_phase_derivative(self, chirp_model):
        omega = np.array([100.0, 500.0])
        assert np.allclose(chirp_model.group_delay(omega), 1.5 + 3e-4 * omega)

    def test_non_causal_delay_rejected(self):
        with pytest.raises(RangeError):
            ChirpModel(beta=(0.0, 1.0, 0.0), band=(10.0, 100.0))

    def test_bad_band_rejected(self):
        with pytest.raises(RangeError):
            ChirpModel(beta=(0.0, -1.0, 0.0), band=(100.0, 10.0))

    def test_band_above_nyquist_rejected(self):
        model = ChirpModel(beta=(0.0, -0.1, 0.0), band=(10.0, 2 * math.pi * 200.0))
        with pytest.raises(RangeError):
            signal_lab.synth_gd_chirp(model, 256, 256.0)

    def test_chirp_spectrum_matches_model(self, chirp_model, chirp_signal):
        spectrum = signal_lab.fourier_spectrum(chirp_signal)
        m = np.arange(300, 900)
        expected = chirp_model.spectrum_at(m * spectrum.freq_step_rad)
        assert np.allclose(spectrum.bins[m], expected, atol=1e-9)
        # nothing on negative frequencies
        assert np.max(np.abs(spectrum.bins[chirp_signal.length // 2 + 1:])) < 1e-9

    def test_gaussian_profile_amplitude(self):
        model = ChirpModel(beta=(0.0, -1.0, 0.0), band=(0.0, 1000.0),
                           amplitude=GaussianProfile(500.0, 50.0))
        assert model.amplitude_at(500.0) == pytest.approx(1.0)
        assert model.amplitude_at(550.0) == pytest.approx(math.exp(-0.5))
        assert model.amplitude_at(1200.0) == 0.0


class TestNoise:

    @settings(max_examples=25, deadline=None)
    @given(snr_db=st.floats(min_value=-10, max_value=40), seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_realized_snr_is_exact(self, snr_db, seed):
        x = signal_lab.synth_two_mode(256, 64.0)
        y = signal_lab.add_noise_snr(x, snr_db, seed)
        noise = y.samples - x.samples
        realized = 10 * math.log10(np.mean(np.abs(x.samples) ** 2) / np.mean(np.abs(noise) ** 2))
        assert realized == pytest.approx(snr_db, abs=1e-9)

    def test_same_seed_same_noise(self):
        x = signal_lab.synth_two_mode(256, 64.0)
        a = signal_lab.add_noise_snr(x, 5.0, 11)
        b = signal_lab.add_noise_snr(x, 5.0, 11)
        c = signal_lab.add_noise_snr(x, 5.0, 12)
        assert np.array_equal(a.samples, b.samples)
        assert not np.array_equal(a.samples, c.samples)

    def test_real_signal_gets_real_noise(self):
        x = signal_lab.synth_two_mode(256, 64.0)
        assert signal_lab.add_noise_snr(x, 0.0, 3).is_real

    def test_complex_signal_gets_circular_noise(self, dirac_signal):
        analytic = signal_lab.inverse_spectrum(signal_lab.analytic_spectrum(dirac_signal))
        noisy = signal_lab.add_noise_snr(analytic, 0.0, 3)
        assert not noisy.is_real

    def test_infinite_snr_returns_input(self, dirac_signal):
        assert signal_lab.add_noise_snr(dirac_signal, math.inf, 0) is dirac_signal

    def test_zero_signal_rejected(self):
        with pytest.raises(UndefinedMetricError):
            signal_lab.add_noise_snr(DiscreteSignal(np.zeros(64), 64.0), 10.0, 0)

    @pytest.mark.parametrize("snr_db", [-math.inf, math.nan, -7000.0])
    def test_unrealizable_snr_rejected(self, snr_db):
        x = signal_lab.synth_two_mode(256, 64.0)
        with pytest.raises(RangeError, match="cannot be realized"):
            signal_lab.add_noise_snr(x, snr_db, 0)

    def test_very_high_snr_adds_no_noise(self):
        x = signal_lab.synth_two_mode(256, 64.0)
        assert np.array_equal(signal_lab.add_noise_snr(x, 7000.0, 0).samples, x.samples)


class TestSpectra:

    def test_parseval(self):
        x = signal_lab.synth_two_mode(512, 128.0, snr_db=10.0, seed=1)
        spectrum = signal_lab.fourier_spectrum(x)
        time_energy = x.energy() * x.period
        freq_energy = np.sum(np.abs(spectrum.bins) ** 2) * spectrum.freq_step_rad / (2 * math.pi)
        assert freq_energy == pytest.approx(time_energy, rel=1e-12)

    def test_cosine_analytic_amplitude(self):
        L, fs, m = 128, 64.0, 9
        n = np.arange(L)
        x = DiscreteSignal(np.cos(2 * math.pi * m * n / L), fs)
        bins = signal_lab.analytic_spectrum(x).bins
        assert abs(bins[m]) == pytest.approx(L / (2 * fs))
        others = np.delete(np.abs(bins), m)
        assert np.max(others) < 1e-12

    def test_real_round_trip(self):
        x = signal_lab.synth_two_mode(512, 128.0, snr_db=3.0, seed=5)
        back = signal_lab.real_part_signal(signal_lab.analytic_spectrum(x))
        assert np.allclose(back.samples, x.samples, atol=1e-12)

    def test_odd_length_round_trip(self):
        rng = np.random.default_rng(0)
        x = DiscreteSignal(rng.standard_normal(101), 50.0)
        back = signal_lab.real_part_signal(signal_lab.analytic_spectrum(x))
        assert np.allclose(back.samples, x.samples, atol=1e-12)

    def test_two_mode_is_real(self):
        assert signal_lab.synth_two_mode(1024, 256.0).is_real


class TestPulseTrain:

    def test_spacing_and_gaps(self):
        tone = DampedTone(1060.0, 600.0)
        x = signal_lab.synth_pulse_train(0.0093, 10, PULSE_L, PULSE_FS, tone, missing=[3])
        onsets = [k * PULSE_SPACING for k in range(10)]
        # first sample after each onset carries sin(2 pi f / fs) > 0, gap at pulse 3
        after = x.samples.real[[i + 1 for i in onsets]]
        assert np.all(after[[0, 1, 2, 4, 5]] > 0.2)
        assert abs(after[3]) < 0.01

    def test_overflow_rejected(self):
        with pytest.raises(RangeError):
            signal_lab.synth_pulse_train(0.0093, 40, PULSE_L, PULSE_FS, DampedTone(1060.0, 600.0))
