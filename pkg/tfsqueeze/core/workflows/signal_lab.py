"""
Signal lab - synthetic test signals, calibrated noise and the conversions
between time samples and one-sided (analytic) spectra.

Spectrum convention: bins = T * DFT(x). The analytic spectrum keeps bins
0..L/2 as they are (no doubling) and zeroes the negative-frequency half, so
every downstream integral runs over xi >= 0. A real signal is recovered from
its analytic spectrum by real_part_signal (2 Re, DC and Nyquist counted once).
"""

import logging
import math
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.fft

from tfsqueeze.core.infrastructure.frameworks.errors import RangeError, UndefinedMetricError
from tfsqueeze.core.models.signal import ChirpModel, ComplexSpectrum, DampedTone, DiscreteSignal, GaussianProfile
from tfsqueeze.core.utils.constants import ErrorMessages

logger = logging.getLogger(__name__)


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def synth_dirac(t0_s: float, L: int, fs: float) -> DiscreteSignal:
    """
    Unit sample at index round(t0_s * fs) (ties toward +inf).

    Raises:
        RangeError: t0_s outside [0, L/fs), or a time in the last half
            sample that rounds to index L
    """
    duration = L / fs
    if not (0.0 <= t0_s < duration):
        raise RangeError(ErrorMessages.DIRAC_OUT_OF_RANGE.format(t0=t0_s, duration=duration))
    index = _round_half_up(t0_s * fs)
    if index >= L:
        raise RangeError(ErrorMessages.DIRAC_PAST_END.format(t0=t0_s, index=index, last=L - 1))
    samples = np.zeros(L, dtype=complex)
    samples[index] = 1.0
    return DiscreteSignal(samples, fs)


def nonnegative_bins(L: int) -> np.ndarray:
    """Bin indices 0..L//2 (DC through Nyquist)."""
    return np.arange(L // 2 + 1)


def synth_gd_chirp(model: ChirpModel, L: int, fs: float) -> DiscreteSignal:
    """
    Analytic signal whose one-sided spectrum is A(xi) exp(i phi(xi)) on the
    nonnegative bins and zero elsewhere.

    Raises:
        RangeError: band above Nyquist
    """
    nyquist = math.pi * fs
    if model.band[1] > nyquist * (1 + 1e-12):
        raise RangeError(ErrorMessages.BAND_ABOVE_NYQUIST.format(omega_hi=model.band[1], nyquist=nyquist))
    dxi = 2.0 * math.pi * fs / L
    m = nonnegative_bins(L)
    bins = np.zeros(L, dtype=complex)
    bins[m] = model.spectrum_at(m * dxi)
    return inverse_spectrum(ComplexSpectrum(bins, dxi))


def synth_pulse_train(period_s: float, n_pulses: int, L: int, fs: float, pulse: DampedTone,
                      missing: Iterable[int] = ()) -> DiscreteSignal:
    """
    Identical damped tones launched every round(period_s * fs) samples,
    starting at t = 0. Indices in missing are left out (gaps in the train).
    """
    if n_pulses < 1 or period_s <= 0:
        raise RangeError(f"Need n_pulses >= 1 and period_s > 0, got {n_pulses}, {period_s}")
    if n_pulses * period_s * fs > L:
        raise RangeError(ErrorMessages.PULSES_OVERFLOW.format(
            n_pulses=n_pulses, period=period_s, duration=L / fs))

    spacing = _round_half_up(period_s * fs)
    skipped = set(int(i) for i in missing)
    n = np.arange(L)
    samples = np.zeros(L, dtype=float)
    for k in range(n_pulses):
        if k in skipped:
            continue
        samples += pulse.waveform((n - k * spacing) / fs)
    logger.debug(f"Pulse train: {n_pulses} pulses, spacing {spacing} samples, {len(skipped)} missing")
    return DiscreteSignal(samples, fs)


def two_mode_models(L: int, fs: float) -> Sequence[ChirpModel]:
    """
    Two Gaussian-profiled modes with opposite-signed second-order group delay.

    Parameters scale with the record duration D and Nyquist W so the layout
    is the same for any (L, fs): mode 1 near 0.15 W arriving at ~0.3 D, mode 2
    near 0.35 W arriving at ~0.55 D.
    """
    D = L / fs
    W = math.pi * fs
    band = (0.0, W)
    first = ChirpModel(beta=(0.0, -0.25 * D, -0.5 * D / W), band=band,
                       amplitude=GaussianProfile(0.15 * W, 0.05 * W))
    second = ChirpModel(beta=(0.0, -0.65 * D, 0.3 * D / W), band=band,
                        amplitude=GaussianProfile(0.35 * W, 0.08 * W))
    return first, second


def synth_two_mode(L: int, fs: float, snr_db: Optional[float] = None, seed: int = 0) -> DiscreteSignal:
    """Real two-mode transient, optionally with white noise at snr_db."""
    dxi = 2.0 * math.pi * fs / L
    m = nonnegative_bins(L)
    bins = np.zeros(L, dtype=complex)
    for model in two_mode_models(L, fs):
        bins[m] += model.spectrum_at(m * dxi)
    clean = real_part_signal(ComplexSpectrum(bins, dxi))
    if snr_db is None:
        return clean
    return add_noise_snr(clean, snr_db, seed)


def gaussian_noise(n: int, seed: int, complex_valued: bool) -> np.ndarray:
    """
    Standard normal noise from a Philox counter-based generator through the
    Box-Muller transform. Complex noise is circular (both parts used).
    """
    rng = np.random.Generator(np.random.Philox(seed))
    u1 = 1.0 - rng.random(n)  # (0, 1]
    u2 = rng.random(n)
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * math.pi * u2
    if complex_valued:
        return radius * (np.cos(angle) + 1j * np.sin(angle))
    return radius * np.cos(angle)


def add_noise_snr(x: DiscreteSignal, snr_db: float, seed: int) -> DiscreteSignal:
    """
    x + w with 10 log10(P_x / P_w) = snr_db exactly (the scale uses the
    realized noise power). snr_db = +inf returns x unchanged.

    Raises:
        UndefinedMetricError: x is all zero
        RangeError: snr_db is NaN or -inf
    """
    if math.isnan(snr_db) or snr_db == -math.inf:
        raise RangeError(ErrorMessages.BAD_SNR.format(snr_db=snr_db))
    power_x = float(np.mean(np.abs(x.samples) ** 2))
    if power_x == 0.0:
        raise UndefinedMetricError(ErrorMessages.ZERO_SIGNAL_SNR)
    if math.isinf(snr_db) and snr_db > 0:
        return x

    noise = gaussian_noise(x.length, seed, complex_valued=not x.is_real)
    power_w = float(np.mean(np.abs(noise) ** 2))
    try:
        gain = 10.0 ** (-snr_db / 20.0)
    except OverflowError:
        gain = math.inf
    scale = math.sqrt(power_x / power_w) * gain
    if not math.isfinite(scale):
        raise RangeError(ErrorMessages.BAD_SNR.format(snr_db=snr_db))
    samples = x.samples + scale * noise
    if x.is_real:
        samples = samples.real
    return DiscreteSignal(samples, x.sample_rate_hz, x.t0)


def fourier_spectrum(x: DiscreteSignal) -> ComplexSpectrum:
    """Full two-sided spectrum, bins = T * DFT(x)."""
    bins = x.period * scipy.fft.fft(x.samples)
    return ComplexSpectrum(bins, 2.0 * math.pi * x.sample_rate_hz / x.length)


def analytic_spectrum(x: DiscreteSignal) -> ComplexSpectrum:
    """
    One-sided spectrum: bins 0..L/2 kept as-is, negative-frequency bins zeroed.
    A real cosine on bin m therefore shows amplitude T L / 2 at bin m only.
    """
    bins = np.array(fourier_spectrum(x).bins)
    bins[x.length // 2 + 1:] = 0.0
    return ComplexSpectrum(bins, 2.0 * math.pi * x.sample_rate_hz / x.length)


def inverse_spectrum(spectrum: ComplexSpectrum, t0: float = 0.0) -> DiscreteSignal:
    """Time signal with the given bins (analytic if the spectrum is one-sided)."""
    fs = spectrum.sample_rate_hz
    return DiscreteSignal(fs * scipy.fft.ifft(spectrum.bins), fs, t0)


def real_part_signal(spectrum: ComplexSpectrum, t0: float = 0.0) -> DiscreteSignal:
    """
    Real signal from a one-sided spectrum: bins 1..ceil(L/2)-1 doubled, DC
    and Nyquist counted once, real part of the inverse transform.
    """
    L = spectrum.length
    bins = np.zeros(L, dtype=complex)
    half = L // 2
    bins[0] = spectrum.bins[0]
    upper = half if L % 2 == 0 else half + 1
    bins[1:upper] = 2.0 * spectrum.bins[1:upper]
    if L % 2 == 0:
        bins[half] = spectrum.bins[half]
    fs = spectrum.sample_rate_hz
    return DiscreteSignal((fs * scipy.fft.ifft(bins)).real, fs, t0)


def gaussian_pulse(L: int, fs: float, center_s: float, carrier_hz: float, width_s: float) -> DiscreteSignal:
    """Gaussian-enveloped cosine, a band-limited transient for round-trip checks."""
    t = np.arange(L) / fs
    envelope = np.exp(-0.5 * ((t - center_s) / width_s) ** 2)
    return DiscreteSignal(envelope * np.cos(2.0 * math.pi * carrier_hz * (t - center_s)), fs)
