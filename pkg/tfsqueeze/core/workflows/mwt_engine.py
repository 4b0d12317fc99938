"""
MWT engine - modified wavelet transform computed row by row in the
frequency domain, plus a brute-force time-domain oracle for small records.

Row k of the transform is

    W[k, n] = fs * exp(-i w_k n T) * IFFT( F_a * H_k )[n]

with F_a the DFT of x restricted to bins 0..L/2 and H_k the window row of
scale a_k. A unit-sample Dirac at t0 gives |W[k, n]| = g((t0 - nT)/a_k)/a_k,
so the peak of every row is g(0)/a_k. Boundaries are circular.
"""

import logging
from typing import Optional

import numpy as np
import scipy.fft

from tfsqueeze.core.infrastructure.frameworks.errors import DimensionError, OracleGuardError
from tfsqueeze.core.infrastructure.frameworks.row_pool import run_row_blocks
from tfsqueeze.core.models.frame import ScaleGrid, WaveletSpec, WindowWeight
from tfsqueeze.core.models.signal import DiscreteSignal
from tfsqueeze.core.models.tfr import SignalMeta, TFMatrix
from tfsqueeze.core.utils.constants import Defaults, ErrorMessages
from tfsqueeze.core.workflows.wavelet_frame import angular_axis, gauss_hat, window_values

logger = logging.getLogger(__name__)


def check_grid(x: DiscreteSignal, grid: ScaleGrid) -> None:
    if grid.length != x.length or not np.isclose(grid.sample_rate_hz, x.sample_rate_hz, rtol=1e-12, atol=0):
        raise DimensionError(ErrorMessages.GRID_MISMATCH.format(
            detail=f"grid (L={grid.length}, fs={grid.sample_rate_hz}) vs signal "
                   f"(L={x.length}, fs={x.sample_rate_hz})"))


def demodulation(grid: ScaleGrid, rows: slice) -> np.ndarray:
    """exp(-i w_k n T) for the given rows, from the exact integer phase k*n mod L."""
    L = grid.length
    k = grid.bins[rows][:, None]
    n = np.arange(L)[None, :]
    return np.exp(-2j * np.pi * ((k * n) % L) / L)


def one_sided_dft(x: DiscreteSignal) -> np.ndarray:
    F = scipy.fft.fft(x.samples)
    F[x.length // 2 + 1:] = 0.0
    return F


def mwt(x: DiscreteSignal, grid: ScaleGrid, spec: WaveletSpec,
        weight: WindowWeight = WindowWeight.PLAIN, threads: Optional[int] = None) -> TFMatrix:
    """
    Modified wavelet transform for every row of grid.

    Args:
        x: Input signal (real or analytic)
        grid: Scale grid built for (L, fs) of x
        spec: Gaussian wavelet parameters
        weight: plain, freq_weighted or time_weighted window
        threads: Worker threads for row blocks (output does not depend on it)

    Raises:
        DimensionError: grid built for another length or sample rate
    """
    check_grid(x, grid)
    weight = WindowWeight(weight)
    L, fs = x.length, x.sample_rate_hz
    F = one_sided_dft(x)
    xi = angular_axis(L, fs)
    out = np.zeros((grid.K, L), dtype=complex)

    if np.any(F):
        def compute(start: int, stop: int) -> None:
            rows = slice(start, stop)
            shift = xi[None, :] - grid.omegas[rows, None]
            H = window_values(spec, grid.scales[rows, None], shift, weight)
            spectra = scipy.fft.ifft(F[None, :] * H, axis=1)
            out[rows] = fs * spectra * demodulation(grid, rows)

        run_row_blocks(grid.K, compute, threads)

    logger.debug(f"mwt[{weight.value}]: {grid.K}x{L} coefficients")
    return TFMatrix(out, grid, SignalMeta(L, fs, x.t0), weight)


def direct_mwt_oracle(x: DiscreteSignal, grid: ScaleGrid, spec: WaveletSpec) -> TFMatrix:
    """
    Brute-force time-domain transform, O(K L^2):

        W[k, n] = fs * sum_j x_a[j] exp(-i w_k t_j) gamma_k[(n - j) mod L]

    where x_a is the analytic signal and gamma_k the window of scale a_k
    obtained by inverse-transforming g^(a_k xi) once per row.

    Raises:
        OracleGuardError: L above the oracle limit
    """
    check_grid(x, grid)
    L, fs = x.length, x.sample_rate_hz
    if L > Defaults.ORACLE_MAX_LEN:
        raise OracleGuardError(ErrorMessages.ORACLE_TOO_LARGE.format(length=L, limit=Defaults.ORACLE_MAX_LEN))

    x_a = scipy.fft.ifft(one_sided_dft(x))
    xi = angular_axis(L, fs)
    n = np.arange(L)
    lag = (n[:, None] - n[None, :]) % L
    out = np.zeros((grid.K, L), dtype=complex)
    for k in range(grid.K):
        gamma = scipy.fft.ifft(gauss_hat(spec, grid.scales[k] * xi))
        phase = np.exp(-2j * np.pi * ((grid.bins[k] * n) % L) / L)
        out[k] = fs * (gamma[lag] @ (x_a * phase))
    return TFMatrix(out, grid, SignalMeta(L, fs, x.t0), WindowWeight.PLAIN)
