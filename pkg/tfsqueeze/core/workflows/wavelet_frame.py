"""
Wavelet frame - Gaussian window, weighted window variants and the scale grid.

Frequencies are angular (rad/s). The discrete frequency axis of a length-L
record is xi_m = m * dxi with dxi = 2 pi fs / L; window rows are sampled on
the symmetric FFT ordering (negative frequencies in the upper half).
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from tfsqueeze.core.infrastructure.frameworks.errors import RangeError
from tfsqueeze.core.models.frame import ScaleGrid, WaveletSpec, WindowWeight
from tfsqueeze.core.utils.constants import Defaults, ErrorMessages

logger = logging.getLogger(__name__)


def gauss_hat(spec: WaveletSpec, omega):
    """g^(w) = sqrt(2 pi sigma) exp(-sigma w^2 / 2); scalar in, scalar out."""
    omega = np.asarray(omega, dtype=float)
    value = spec.g_hat_zero * np.exp(-0.5 * spec.sigma * omega ** 2)
    return float(value) if value.ndim == 0 else value


def angular_axis(L: int, fs: float) -> np.ndarray:
    """
    DFT frequencies in rad/s: m * dxi for m <= L//2, (m - L) * dxi above.

    Unlike fftfreq, the Nyquist bin of an even-length record is +pi fs, so
    every bin an analytic spectrum keeps sits at a nonnegative frequency.
    """
    m = np.arange(L)
    signed = np.where(m <= L // 2, m, m - L)
    return 2.0 * math.pi * fs * signed / L


def make_scale_grid(L: int, fs: float, spec: WaveletSpec, k_min: int = Defaults.K_MIN,
                    k_max: Optional[int] = None) -> ScaleGrid:
    """
    FFT-bin-aligned grid omegas = {k_min, ..., k_max} * dxi (k_max defaults to L/2).

    Raises:
        RangeError: k_min or k_max outside 1 <= k_min <= k_max <= L/2
    """
    half = L // 2
    if not (1 <= k_min < L / 2):
        raise RangeError(ErrorMessages.K_MIN_OUT_OF_RANGE.format(k_min=k_min, length=L))
    if k_max is None:
        k_max = half
    if not (k_min <= k_max <= half):
        raise RangeError(ErrorMessages.K_MAX_OUT_OF_RANGE.format(k_max=k_max, k_min=k_min, length=L))

    dxi = 2.0 * math.pi * fs / L
    omegas = np.arange(k_min, k_max + 1, dtype=float) * dxi
    grid = ScaleGrid(
        omegas=omegas,
        scales=spec.omega0 / omegas,
        k_min=int(k_min),
        length=int(L),
        sample_rate_hz=float(fs),
    )
    logger.debug(f"Scale grid: K={grid.K}, {grid.freqs_hz[0]:.3f}..{grid.freqs_hz[-1]:.3f} Hz")
    return grid


def window_values(spec: WaveletSpec, a, shift, weight: WindowWeight) -> np.ndarray:
    """
    Window multipliers for scale(s) a at frequency offsets shift = xi - omega.

    plain          g^(a u)
    freq_weighted  a u g^(a u)
    time_weighted  i sigma a u g^(a u)   (conjugate of the FT of t g(t))
    """
    au = np.asarray(a, dtype=float) * np.asarray(shift, dtype=float)
    base = gauss_hat(spec, au)
    weight = WindowWeight(weight)
    if weight is WindowWeight.PLAIN:
        return np.asarray(base, dtype=float)
    if weight is WindowWeight.FREQ_WEIGHTED:
        return au * base
    return 1j * spec.sigma * au * base


def window_row(spec: WaveletSpec, a: float, weight: WindowWeight, L: int, fs: float) -> np.ndarray:
    """Length-L multipliers of one scale row, centred on omega = omega0 / a."""
    if not a > 0:
        raise RangeError(ErrorMessages.BAD_SCALE.format(scale=a))
    omega = spec.omega0 / a
    row = window_values(spec, a, angular_axis(L, fs) - omega, weight)
    return np.asarray(row, dtype=complex if np.iscomplexobj(row) else float)


def reliable_region(grid: ScaleGrid, spec: WaveletSpec, tol: float = Defaults.SPECTRAL_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """
    Rows and edge margins where estimates are not affected by the record
    boundaries or the band edges.

    A row is reliable when its window, down to tol of its peak, lies inside
    (0, pi fs] and its time support 2 a d fits in the record. margin[k] is
    ceil(a_k d fs): columns closer than that to either edge are unreliable.

    Returns:
        (row_ok, margin) boolean and integer arrays of length K
    """
    fs = grid.sample_rate_hz
    d = spec.support_radius
    d_f = spec.spectral_radius(tol)
    a = grid.scales
    nyquist = math.pi * fs
    duration = grid.length / fs

    low_ok = a * grid.omegas >= d_f
    high_ok = a * (nyquist - grid.omegas) >= d_f
    time_ok = 2.0 * a * d <= duration
    margin = np.ceil(a * d * fs).astype(np.int64)
    return low_ok & high_ok & time_ok, margin


def interior_mask(grid: ScaleGrid, spec: WaveletSpec, tol: float = Defaults.SPECTRAL_TOL) -> np.ndarray:
    """K x L mask of reliable rows restricted to columns away from the edges."""
    row_ok, margin = reliable_region(grid, spec, tol)
    n = np.arange(grid.length)[None, :]
    m = margin[:, None]
    cols_ok = (n >= m) & (n < grid.length - m)
    return row_ok[:, None] & cols_ok
