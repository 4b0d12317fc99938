"""
TF metrics - concentration (Renyi entropy), the time-frequency envelope
spectrum (TFES), pulse spacing and reconstruction scores.
"""

import logging
import math
from typing import Optional, Union

import numpy as np
import scipy.fft
from scipy.signal import find_peaks

from tfsqueeze.core.infrastructure.frameworks.errors import DimensionError, RangeError, UndefinedMetricError
from tfsqueeze.core.models.signal import DiscreteSignal
from tfsqueeze.core.models.tfr import IntervalSummary, ReconstructionError, SqueezeResult, TfesResult, TFMatrix
from tfsqueeze.core.utils.constants import Defaults, ErrorMessages

logger = logging.getLogger(__name__)

MatrixLike = Union[SqueezeResult, TFMatrix, np.ndarray]


def _values(T: MatrixLike) -> np.ndarray:
    if isinstance(T, SqueezeResult):
        return T.S.coeffs
    if isinstance(T, TFMatrix):
        return T.coeffs
    return np.asarray(T)


def renyi_entropy(T: MatrixLike, alpha: float = Defaults.RENYI_ALPHA) -> float:
    """
    Renyi entropy in bits of the energy distribution p = |T|^2 / sum |T|^2:

        H_alpha = log2(sum p^alpha) / (1 - alpha)

    Raises:
        RangeError: alpha <= 0 or alpha == 1
        UndefinedMetricError: all-zero matrix
    """
    if not (alpha > 0 and alpha != 1):
        raise RangeError(ErrorMessages.BAD_ALPHA.format(alpha=alpha))
    magnitude = np.abs(_values(T))
    peak = float(magnitude.max()) if magnitude.size else 0.0
    if peak == 0.0:
        raise UndefinedMetricError(ErrorMessages.ZERO_MATRIX.format(metric="Renyi entropy"))

    energy = (magnitude / peak) ** 2
    p = energy / energy.sum()
    return float(np.log2(np.sum(p ** alpha)) / (1.0 - alpha))


def _check_separation(fs: float, min_separation_s: float) -> int:
    samples = min_separation_s * fs
    if not samples >= 2:
        raise RangeError(ErrorMessages.BAD_MIN_SEPARATION.format(value=samples))
    return int(math.ceil(samples - 1e-9))


def detect_pulses(envelope: np.ndarray, fs: float, min_separation_s: float = Defaults.MIN_SEPARATION_S,
                  peak_fraction: float = Defaults.TFES_PEAK_FRACTION) -> np.ndarray:
    """
    Sample indices of envelope peaks: local maxima above peak_fraction of
    the global maximum, at least min_separation_s apart.

    Raises:
        RangeError: min_separation_s * fs < 2
    """
    distance = _check_separation(fs, min_separation_s)
    envelope = np.asarray(envelope, dtype=float)
    top = float(envelope.max()) if envelope.size else 0.0
    if top <= 0.0:
        return np.zeros(0, dtype=np.int64)
    peaks, _ = find_peaks(envelope, height=peak_fraction * top, distance=distance)
    return peaks


def pulse_intervals(envelope: np.ndarray, fs: float, min_separation_s: float = Defaults.MIN_SEPARATION_S,
                    peak_fraction: float = Defaults.TFES_PEAK_FRACTION) -> np.ndarray:
    """Spacing in seconds between consecutive detected peaks; empty below two peaks."""
    return np.diff(detect_pulses(envelope, fs, min_separation_s, peak_fraction)) / fs


def summarize_intervals(intervals_s: np.ndarray, rel_tol: float = Defaults.INTERVAL_OUTLIER_TOL) -> IntervalSummary:
    """
    Median spacing, mean of the regular spacings and the indices of those
    deviating from the median by more than rel_tol of it (gaps, extra beats).
    """
    intervals = np.asarray(intervals_s, dtype=float)
    if intervals.size == 0:
        return IntervalSummary(intervals, math.nan, math.nan)
    median = float(np.median(intervals))
    outlier = np.abs(intervals - median) > rel_tol * median
    regular = intervals[~outlier]
    mean_regular = float(regular.mean()) if regular.size else math.nan
    return IntervalSummary(intervals, median, mean_regular, np.flatnonzero(outlier))


def envelope_spectrum(envelope: np.ndarray, fs: float, pad_factor: int = 8):
    """Zero-padded magnitude spectrum of the mean-removed envelope (one-sided)."""
    envelope = np.asarray(envelope, dtype=float)
    n_fft = int(2 ** math.ceil(math.log2(max(2, pad_factor * envelope.size))))
    spectrum = np.abs(scipy.fft.rfft(envelope - envelope.mean(), n=n_fft)) / fs
    freqs = np.arange(spectrum.size) * fs / n_fft
    return freqs, spectrum


def fundamental_frequency(freqs_hz: np.ndarray, spectrum: np.ndarray,
                          fraction: float = Defaults.TFES_FUNDAMENTAL_FRACTION) -> float:
    """Lowest spectral peak reaching fraction of the largest one; nan for a flat spectrum."""
    top = float(spectrum.max()) if spectrum.size else 0.0
    if top <= 0.0:
        return math.nan
    peaks, _ = find_peaks(spectrum, height=fraction * top)
    if peaks.size == 0:
        return float(freqs_hz[int(np.argmax(spectrum))])
    return float(freqs_hz[peaks[0]])


def tfes(S: MatrixLike, fs: Optional[float] = None, row_hz: Optional[np.ndarray] = None,
         min_separation_s: Optional[float] = None,
         peak_fraction: float = Defaults.TFES_PEAK_FRACTION) -> TfesResult:
    """
    Time-frequency envelope spectrum.

    Every row's magnitude has its mean removed; spectrum_peak[k] is the
    largest DFT magnitude of that row over the nonzero frequencies. The
    best row's magnitude is the envelope, from which the pulse intervals,
    the zero-padded envelope spectrum and its fundamental are derived.

    fs and row_hz default to the matrix's own frame when S carries one.

    Raises:
        UndefinedMetricError: all-zero matrix
    """
    if isinstance(S, (SqueezeResult, TFMatrix)):
        frame = S.S if isinstance(S, SqueezeResult) else S
        fs = frame.meta.sample_rate_hz if fs is None else fs
        row_hz = frame.grid.freqs_hz if row_hz is None else row_hz
    magnitude = np.abs(_values(S))
    if fs is None:
        raise RangeError(ErrorMessages.BAD_SAMPLE_RATE.format(fs=fs))
    if not magnitude.size or not np.any(magnitude):
        raise UndefinedMetricError(ErrorMessages.ZERO_MATRIX.format(metric="TFES"))
    K, L = magnitude.shape
    row_hz = np.arange(K, dtype=float) if row_hz is None else np.asarray(row_hz, dtype=float)

    centred = magnitude - magnitude.mean(axis=1, keepdims=True)
    spectra = np.abs(scipy.fft.fft(centred, axis=1)) / fs
    upper = L // 2 + 1
    spectrum_peak = spectra[:, 1:upper].max(axis=1) if upper > 1 else np.zeros(K)
    best_row = int(np.argmax(spectrum_peak))
    envelope = magnitude[best_row].copy()

    if min_separation_s is None:
        min_separation_s = max(Defaults.MIN_SEPARATION_S, 2.0 / fs)
    peaks = detect_pulses(envelope, fs, min_separation_s, peak_fraction)
    intervals = np.diff(peaks) / fs
    freqs, env_spectrum = envelope_spectrum(envelope, fs)
    fundamental = fundamental_frequency(freqs, env_spectrum)
    logger.debug(f"tfes: best row {best_row} ({row_hz[best_row]:.3f} Hz), "
                 f"{intervals.size} intervals, fundamental {fundamental:.3f} Hz")
    return TfesResult(
        spectrum_peak=spectrum_peak,
        best_row=best_row,
        envelope=envelope,
        intervals_s=intervals,
        row_hz=row_hz,
        envelope_freqs_hz=freqs,
        envelope_spectrum=env_spectrum,
        fundamental_hz=fundamental,
        peak_times_s=peaks / fs,
    )


def reconstruction_error(x: DiscreteSignal, y: DiscreteSignal) -> ReconstructionError:
    """
    rel_l2 = ||x - y|| / ||x|| and snr_db = 20 log10(1 / rel_l2) (inf for an
    exact match), with x the reference.

    Raises:
        DimensionError: different lengths
        UndefinedMetricError: all-zero reference
    """
    if x.length != y.length:
        raise DimensionError(ErrorMessages.LENGTH_MISMATCH.format(left=x.length, right=y.length))
    reference = float(np.linalg.norm(x.samples))
    if reference == 0.0:
        raise UndefinedMetricError(ErrorMessages.ZERO_REFERENCE)
    rel = float(np.linalg.norm(x.samples - y.samples)) / reference
    snr = math.inf if rel == 0.0 else -20.0 * math.log10(rel)
    return ReconstructionError(rel_l2=rel, snr_db=snr)
