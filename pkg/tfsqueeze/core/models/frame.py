"""
Analysis frame models - Gaussian wavelet parameters and the FFT-aligned
scale grid.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from tfsqueeze.core.infrastructure.frameworks.errors import RangeError
from tfsqueeze.core.utils.constants import Defaults, ErrorMessages


class WindowWeight(str, Enum):
    """Frequency-domain window variants used by the transform."""
    PLAIN = "plain"
    FREQ_WEIGHTED = "freq_weighted"
    TIME_WEIGHTED = "time_weighted"


@dataclass(frozen=True)
class WaveletSpec:
    """
    Analytic Gaussian wavelet psi(t) = g(t) exp(i omega0 t) with
    g(t) = exp(-t^2 / (2 sigma)) and g^(w) = sqrt(2 pi sigma) exp(-sigma w^2 / 2).
    """
    omega0: float = Defaults.OMEGA0
    sigma: float = Defaults.SIGMA
    family: str = "gaussian"

    def __post_init__(self):
        if not (self.omega0 > 0 and self.sigma > 0):
            raise RangeError(ErrorMessages.BAD_WAVELET.format(omega0=self.omega0, sigma=self.sigma))
        object.__setattr__(self, 'omega0', float(self.omega0))
        object.__setattr__(self, 'sigma', float(self.sigma))

    @property
    def is_gaussian(self) -> bool:
        return self.family == "gaussian"

    @property
    def support_radius(self) -> float:
        """d such that |g(t)| < 1e-8 for |t| > d (unscaled window)."""
        return math.sqrt(2.0 * self.sigma * math.log(1.0 / Defaults.SUPPORT_LEVEL))

    def spectral_radius(self, tol: float = Defaults.SPECTRAL_TOL) -> float:
        """Half-width in w where g^(w) / g^(0) falls below tol."""
        return math.sqrt(2.0 * math.log(1.0 / tol) / self.sigma)

    @property
    def g_hat_zero(self) -> float:
        return math.sqrt(2.0 * math.pi * self.sigma)

    def g(self, t):
        return np.exp(-np.asarray(t, dtype=float) ** 2 / (2.0 * self.sigma))


@dataclass(frozen=True)
class ScaleGrid:
    """
    Linear, FFT-bin-aligned frequency grid omegas[j] = (k_min + j) * dxi,
    j = 0..K-1, with scales a_j = omega0 / omegas[j].
    """
    omegas: np.ndarray
    scales: np.ndarray
    k_min: int
    length: int
    sample_rate_hz: float

    def __post_init__(self):
        omegas = np.array(self.omegas, dtype=float, copy=True)
        scales = np.array(self.scales, dtype=float, copy=True)
        if omegas.ndim != 1 or omegas.size == 0 or omegas.shape != scales.shape:
            raise RangeError("Scale grid needs matching, non-empty omegas and scales")
        if omegas[0] <= 0 or np.any(np.diff(omegas) <= 0):
            raise RangeError("Grid frequencies must be positive and strictly increasing")
        if omegas[-1] > math.pi * self.sample_rate_hz * (1 + 1e-12):
            raise RangeError(ErrorMessages.BAND_ABOVE_NYQUIST.format(
                omega_hi=omegas[-1], nyquist=math.pi * self.sample_rate_hz))
        omegas.setflags(write=False)
        scales.setflags(write=False)
        object.__setattr__(self, 'omegas', omegas)
        object.__setattr__(self, 'scales', scales)

    @property
    def K(self) -> int:
        return int(self.omegas.size)

    @property
    def k_max(self) -> int:
        return self.k_min + self.K - 1

    @property
    def bins(self) -> np.ndarray:
        """FFT bin index of every row."""
        return np.arange(self.k_min, self.k_min + self.K)

    @property
    def freq_step_rad(self) -> float:
        return 2.0 * math.pi * self.sample_rate_hz / self.length

    @property
    def freqs_hz(self) -> np.ndarray:
        return self.bins * self.sample_rate_hz / self.length

    def nearest_row(self, omega: np.ndarray) -> np.ndarray:
        """Row index of the grid frequency nearest to omega (may fall outside 0..K-1)."""
        position = np.asarray(omega, dtype=float) / self.freq_step_rad - self.k_min
        return np.floor(position + 0.5).astype(np.int64)
