"""
Group-delay estimator - thresholded reassignment candidates, iterated GD
maps and the closed-form prediction for second-order phase.

Delays are real sample indices measured from the record start. Rounding to
integer columns (half away from zero) only happens when maps are composed
or when coefficients are squeezed.
"""

import logging
from typing import Optional, Union

import numpy as np

from tfsqueeze.core.infrastructure.frameworks.errors import ArgumentError, DimensionError, UnsupportedOperationError
from tfsqueeze.core.models.frame import ScaleGrid, WaveletSpec, WindowWeight
from tfsqueeze.core.models.signal import ChirpModel
from tfsqueeze.core.models.tfr import GDMap, IterationMode, TFMatrix, ThresholdConfig, round_half_away
from tfsqueeze.core.utils.constants import ErrorMessages

logger = logging.getLogger(__name__)


def _check_pair(W: TFMatrix, other: TFMatrix, expected: WindowWeight) -> None:
    if not W.same_frame(other):
        raise DimensionError(ErrorMessages.SHAPE_MISMATCH.format(left=W.shape, right=other.shape))
    if W.weight is not WindowWeight.PLAIN or other.weight is not expected:
        raise ArgumentError(
            f"Expected plain and {expected.value} transforms, got {W.weight} and {other.weight}"
        )


def support_set(W: TFMatrix, cfg: ThresholdConfig) -> np.ndarray:
    """Cells with |W| strictly above the resolved threshold."""
    magnitude = W.magnitude()
    return magnitude > cfg.resolve(magnitude)


def gd_estimate(W: TFMatrix, Wtg: TFMatrix, cfg: ThresholdConfig) -> GDMap:
    """
    delays[k, n] = n + fs * Re{a_k * Wtg[k, n] / W[k, n]} on the support set.

    Raises:
        DimensionError: W and Wtg computed on different frames
    """
    _check_pair(W, Wtg, WindowWeight.TIME_WEIGHTED)
    mask = support_set(W, cfg)
    L, fs = W.meta.length, W.meta.sample_rate_hz
    n = np.broadcast_to(np.arange(L, dtype=float)[None, :], W.shape)
    a = np.broadcast_to(W.grid.scales[:, None], W.shape)

    delays = np.full(W.shape, np.nan)
    ratio = Wtg.coeffs[mask] / W.coeffs[mask]
    delays[mask] = n[mask] + fs * (a[mask] * ratio).real
    logger.debug(f"gd_estimate: {int(mask.sum())} of {mask.size} cells above threshold")
    return GDMap(delays, mask)


def if_estimate(W: TFMatrix, Wxi: TFMatrix, cfg: ThresholdConfig) -> np.ndarray:
    """
    Instantaneous-frequency candidates w^[k, n] = w_k + Re{Wxi / (a_k W)} in
    rad/s on the support set, NaN elsewhere.
    """
    _check_pair(W, Wxi, WindowWeight.FREQ_WEIGHTED)
    mask = support_set(W, cfg)
    omega = np.broadcast_to(W.grid.omegas[:, None], W.shape)
    a = np.broadcast_to(W.grid.scales[:, None], W.shape)
    out = np.full(W.shape, np.nan)
    out[mask] = omega[mask] + (Wxi.coeffs[mask] / (a[mask] * W.coeffs[mask])).real
    return out


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def check_iteration(N: int, mode: Union[IterationMode, str]) -> IterationMode:
    """Validate an iteration count for its scheme; returns the parsed mode."""
    mode = IterationMode.parse(mode)
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ArgumentError(ErrorMessages.BAD_ITERATIONS.format(n=N))
    if mode is IterationMode.EXPONENTIAL and not is_power_of_two(int(N)):
        raise ArgumentError(ErrorMessages.EXP_NEEDS_POWER_OF_TWO.format(n=N))
    return mode


def _compose(values: np.ndarray, valid: np.ndarray, index_source: np.ndarray):
    """
    One lookup step: new[k, n] = values[k, round(index_source[k, n])].

    A cell stays valid only if it was valid, its rounded index is in range
    and the looked-up cell is valid.
    """
    L = values.shape[1]
    # index_source is finite everywhere (invalid cells hold stale values)
    idx = round_half_away(index_source)
    in_range = valid & (idx >= 0) & (idx < L)
    idx = np.where(in_range, idx, 0)
    looked_up = np.take_along_axis(values, idx, axis=1)
    still_valid = in_range & np.take_along_axis(valid, idx, axis=1)
    return looked_up, still_valid


def gd_iterate(gd: GDMap, N: int, mode: Union[IterationMode, str] = IterationMode.LINEAR) -> GDMap:
    """
    N-fold self-composition of the GD map: t^[N][n] = delays[f^(N-1)(n)]
    with f(n) = round(delays[n]).

    linear       N - 1 table lookups of the integer map f
    exponential  log2 N doublings t^[2m] = t^[m](round(t^[m])), N a power of two

    Both modes perform the same lookups and return identical maps.

    Raises:
        ArgumentError: N < 1, or exponential mode with N not a power of two
    """
    mode = check_iteration(N, mode)
    if N == 1:
        return gd

    delays = np.where(gd.mask, gd.delays, 0.0)
    if mode is IterationMode.EXPONENTIAL:
        current, valid = delays, gd.mask.copy()
        for _ in range(int(N).bit_length() - 1):
            current, valid = _compose(current, valid, current)
        return GDMap(current, valid)

    L = delays.shape[1]
    targets = np.zeros(delays.shape, dtype=np.int64)
    targets[gd.mask] = round_half_away(delays[gd.mask])
    table_ok = gd.mask & (targets >= 0) & (targets < L)
    targets[~table_ok] = 0

    position = np.broadcast_to(np.arange(L, dtype=np.int64)[None, :], delays.shape).copy()
    valid = gd.mask.copy()
    for _ in range(N - 1):
        valid = valid & np.take_along_axis(table_ok, position, axis=1)
        position = np.take_along_axis(targets, position, axis=1)
        valid = valid & np.take_along_axis(gd.mask, position, axis=1)
    return GDMap(np.take_along_axis(delays, position, axis=1), valid)


def gd_closed_form(model: ChirpModel, grid: ScaleGrid, spec: WaveletSpec,
                   b_index: Optional[Union[int, np.ndarray]] = None, N: int = 1) -> np.ndarray:
    """
    Predicted N-fold GD for second-order phase under the Gaussian window, in
    samples:

        fs * ( -phi'(w_k) + r_k^N (phi'(w_k) + b T) ),
        r_k = phi''^2 / (phi''^2 + (a_k^2 sigma)^2)

    b_index is a column index, an array of them, or None for all L columns.
    Returns a K x len(b_index) matrix.

    Raises:
        UnsupportedOperationError: non-Gaussian window
    """
    if not spec.is_gaussian:
        raise UnsupportedOperationError(ErrorMessages.NON_GAUSSIAN_WINDOW)
    if N < 1:
        raise ArgumentError(ErrorMessages.BAD_ITERATIONS.format(n=N))
    fs = grid.sample_rate_hz
    columns = np.arange(grid.length) if b_index is None else np.atleast_1d(np.asarray(b_index))
    b = columns.astype(float)[None, :] / fs

    d1 = model.phase_d1(grid.omegas)[:, None]
    ratio = contraction_factor(model, grid, spec)[:, None]
    return fs * (-d1 + ratio ** N * (d1 + b))


def contraction_factor(model: ChirpModel, grid: ScaleGrid, spec: WaveletSpec) -> np.ndarray:
    """r_k = phi''(w_k)^2 / (phi''(w_k)^2 + (a_k^2 sigma)^2) per row."""
    d2 = model.phase_d2(grid.omegas)
    width = grid.scales ** 2 * spec.sigma
    return d2 ** 2 / (d2 ** 2 + width ** 2)
