"""
Signal models - discrete signals, spectra and the synthetic signal models.

All values are immutable once constructed; array fields are copied and
marked read-only.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from tfsqueeze.core.infrastructure.frameworks.errors import RangeError
from tfsqueeze.core.utils.constants import Defaults, ErrorMessages


def _frozen(array: np.ndarray, dtype) -> np.ndarray:
    out = np.array(array, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class DiscreteSignal:
    """
    Uniformly sampled signal x[n], n = 0..L-1, at t_n = t0 + n/fs.

    Real signals are stored as complex with zero imaginary part.
    """
    samples: np.ndarray
    sample_rate_hz: float
    t0: float = 0.0

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.ndim != 1 or samples.size < Defaults.MIN_SIGNAL_LEN:
            raise RangeError(ErrorMessages.SIGNAL_TOO_SHORT.format(
                length=samples.size, minimum=Defaults.MIN_SIGNAL_LEN))
        if not np.all(np.isfinite(samples)):
            raise RangeError(ErrorMessages.NON_FINITE_SAMPLES)
        if not (np.isfinite(self.sample_rate_hz) and self.sample_rate_hz > 0):
            raise RangeError(ErrorMessages.BAD_SAMPLE_RATE.format(fs=self.sample_rate_hz))
        object.__setattr__(self, 'samples', _frozen(samples, np.complex128))
        object.__setattr__(self, 'sample_rate_hz', float(self.sample_rate_hz))
        object.__setattr__(self, 't0', float(self.t0))

    @property
    def length(self) -> int:
        return int(self.samples.size)

    @property
    def period(self) -> float:
        return 1.0 / self.sample_rate_hz

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.samples.imag == 0.0))

    def energy(self) -> float:
        return float(np.sum(np.abs(self.samples) ** 2))


@dataclass(frozen=True)
class ComplexSpectrum:
    """
    Full-length DFT bins scaled by T (bins = T * fft(x)), so that
    sum|x|^2 T = sum|bins|^2 * freq_step_rad / (2 pi).
    """
    bins: np.ndarray
    freq_step_rad: float

    def __post_init__(self):
        object.__setattr__(self, 'bins', _frozen(self.bins, np.complex128))
        object.__setattr__(self, 'freq_step_rad', float(self.freq_step_rad))

    @property
    def length(self) -> int:
        return int(self.bins.size)

    @property
    def sample_rate_hz(self) -> float:
        return self.freq_step_rad * self.length / (2.0 * np.pi)

    @property
    def omegas(self) -> np.ndarray:
        """Bin frequencies k * freq_step_rad for k = 0..L-1 (unwrapped)."""
        return np.arange(self.length) * self.freq_step_rad


@dataclass(frozen=True)
class GaussianProfile:
    """Gaussian band amplitude A(w) = exp(-(w - center)^2 / (2 width^2))."""
    center_rad_s: float
    width_rad_s: float

    def __post_init__(self):
        if self.width_rad_s <= 0:
            raise RangeError(f"Gaussian profile width must be positive, got {self.width_rad_s}")

    def __call__(self, omega: np.ndarray) -> np.ndarray:
        return np.exp(-0.5 * ((np.asarray(omega, dtype=float) - self.center_rad_s) / self.width_rad_s) ** 2)


Amplitude = Union[float, GaussianProfile]


@dataclass(frozen=True)
class ChirpModel:
    """
    Frequency-domain model x^(w) = A(w) exp(i phi(w)) with
    phi(w) = b0 + b1 w + b2 w^2 / 2, supported on band = (w_lo, w_hi).

    The group delay -phi'(w) = -b1 - b2 w must be positive over the band.
    """
    beta: Tuple[float, float, float]
    band: Tuple[float, float]
    amplitude: Amplitude = 1.0

    def __post_init__(self):
        beta = tuple(float(b) for b in self.beta)
        if len(beta) != 3:
            raise RangeError(f"beta must hold three coefficients, got {len(beta)}")
        lo, hi = (float(w) for w in self.band)
        if not (lo >= 0 and hi > lo):
            raise RangeError(ErrorMessages.BAD_BAND.format(omega_lo=lo, omega_hi=hi))
        object.__setattr__(self, 'beta', beta)
        object.__setattr__(self, 'band', (lo, hi))
        # GD is linear in w, so the band edges bound it
        min_gd = float(min(self.group_delay(lo), self.group_delay(hi)))
        if min_gd <= 0:
            raise RangeError(ErrorMessages.NON_CAUSAL_GD.format(min_gd=min_gd))

    def phase(self, omega):
        b0, b1, b2 = self.beta
        omega = np.asarray(omega, dtype=float)
        return b0 + b1 * omega + 0.5 * b2 * omega ** 2

    def phase_d1(self, omega):
        _, b1, b2 = self.beta
        return b1 + b2 * np.asarray(omega, dtype=float)

    def phase_d2(self, omega):
        return np.full_like(np.asarray(omega, dtype=float), self.beta[2])

    def group_delay(self, omega):
        """-phi'(w) in seconds."""
        return -self.phase_d1(omega)

    def amplitude_at(self, omega) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        if isinstance(self.amplitude, GaussianProfile):
            values = self.amplitude(omega)
        else:
            values = np.full(omega.shape, float(self.amplitude))
        lo, hi = self.band
        return np.where((omega >= lo) & (omega <= hi), values, 0.0)

    def spectrum_at(self, omega) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        return self.amplitude_at(omega) * np.exp(1j * self.phase(omega))


@dataclass(frozen=True)
class DampedTone:
    """One pulse of a train: exp(-decay t) sin(2 pi carrier t), t >= 0."""
    carrier_hz: float
    decay_per_s: float

    def __post_init__(self):
        if self.carrier_hz <= 0 or self.decay_per_s < 0:
            raise RangeError(
                f"Damped tone needs carrier_hz > 0 and decay_per_s >= 0, got "
                f"{self.carrier_hz}, {self.decay_per_s}"
            )

    def waveform(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        out = np.exp(-self.decay_per_s * np.clip(t, 0.0, None)) * np.sin(2.0 * np.pi * self.carrier_hz * t)
        return np.where(t >= 0, out, 0.0)
