"""
Squeezer - time-direction synchrosqueezing (WTSST), its iterated form
(WTMSST), classical two-dimensional reassignment (RM) and inversion.

Squeezing moves complex coefficients along their own row to the column
given by the rounded group delay; row sums are therefore conserved up to
the coefficients dropped for being below threshold or out of range.
"""

import logging
from typing import Optional, Union

import numpy as np

from tfsqueeze.core.infrastructure.frameworks.errors import (
    DimensionError,
    EmptySelectionError,
    UnsupportedOperationError,
)
from tfsqueeze.core.infrastructure.frameworks.row_pool import run_row_blocks
from tfsqueeze.core.models.frame import WaveletSpec
from tfsqueeze.core.models.signal import ComplexSpectrum, DiscreteSignal
from tfsqueeze.core.models.tfr import (
    GDMap,
    IterationMode,
    SqueezeKind,
    SqueezeMethod,
    SqueezeResult,
    TFMatrix,
    ThresholdConfig,
)
from tfsqueeze.core.utils.constants import ErrorMessages
from tfsqueeze.core.workflows.gd_estimator import gd_iterate
from tfsqueeze.core.workflows.signal_lab import inverse_spectrum, real_part_signal

logger = logging.getLogger(__name__)


def _check_shapes(W: TFMatrix, gd: GDMap) -> None:
    if W.shape != gd.shape:
        raise DimensionError(ErrorMessages.SHAPE_MISMATCH.format(left=W.shape, right=gd.shape))


def squeeze_targets(gd: GDMap):
    """Rounded target columns and the cells whose target is valid and in range."""
    L = gd.shape[1]
    targets = gd.target_bins()
    keep = gd.mask & (targets >= 0) & (targets < L)
    return targets, keep


def squeeze_rows(coeffs: np.ndarray, targets: np.ndarray, keep: np.ndarray,
                 threads: Optional[int] = None) -> np.ndarray:
    """
    S[k, tau] = sum of coeffs[k, n] over kept n with targets[k, n] = tau.

    Each row block accumulates with np.bincount in column order, so the
    result is independent of the thread count.
    """
    K, L = coeffs.shape
    out = np.zeros((K, L), dtype=coeffs.dtype)

    def accumulate(start: int, stop: int) -> None:
        block_keep = keep[start:stop]
        rows, cols = np.nonzero(block_keep)
        flat = rows * L + targets[start:stop][rows, cols]
        values = coeffs[start:stop][rows, cols]
        size = (stop - start) * L
        if np.iscomplexobj(values):
            summed = (np.bincount(flat, weights=values.real, minlength=size)
                      + 1j * np.bincount(flat, weights=values.imag, minlength=size))
        else:
            summed = np.bincount(flat, weights=values, minlength=size)
        out[start:stop] = summed.reshape(stop - start, L)

    run_row_blocks(K, accumulate, threads)
    return out


def _squeezed_matrix(W: TFMatrix, S: np.ndarray) -> TFMatrix:
    return TFMatrix(S, W.grid, W.meta, weight=None)


def wtsst(W: TFMatrix, gd: GDMap, threshold: Optional[ThresholdConfig] = None,
          threads: Optional[int] = None) -> SqueezeResult:
    """
    Synchrosqueeze W along time to its rounded group delay.

    Raises:
        DimensionError: W and gd differ in shape
    """
    _check_shapes(W, gd)
    targets, keep = squeeze_targets(gd)
    S = squeeze_rows(W.coeffs, targets, keep, threads)
    dropped = int(gd.mask.sum() - keep.sum())
    if dropped:
        logger.debug(f"wtsst: dropped {dropped} out-of-range coefficients")
    return SqueezeResult(
        S=_squeezed_matrix(W, S),
        method=SqueezeMethod(SqueezeKind.WTSST),
        threshold=threshold or ThresholdConfig(),
    )


def wtmsst(W: TFMatrix, gd: GDMap, N: int, mode: Union[IterationMode, str] = IterationMode.LINEAR,
           threshold: Optional[ThresholdConfig] = None, threads: Optional[int] = None) -> SqueezeResult:
    """Squeeze W to the N-fold composed GD map; N = 1 is plain WTSST."""
    _check_shapes(W, gd)
    mode = IterationMode.parse(mode)
    composed = gd_iterate(gd, N, mode)
    result = wtsst(W, composed, threshold, threads)
    if N == 1:
        return result
    return SqueezeResult(result.S, SqueezeMethod(SqueezeKind.WTMSST, N, mode), result.threshold)


def rm(W: TFMatrix, gd: GDMap, ifm: np.ndarray, threshold: Optional[ThresholdConfig] = None) -> SqueezeResult:
    """
    Reassign energy |W|^2 to (nearest row of w^, rounded delay). Cells with an
    invalid estimate or a target outside the matrix are dropped.
    """
    _check_shapes(W, gd)
    ifm = np.asarray(ifm, dtype=float)
    if ifm.shape != W.shape:
        raise DimensionError(ErrorMessages.SHAPE_MISMATCH.format(left=W.shape, right=ifm.shape))

    K, L = W.shape
    targets, keep = squeeze_targets(gd)
    keep &= np.isfinite(ifm)
    rows = np.full(W.shape, -1, dtype=np.int64)
    rows[keep] = W.grid.nearest_row(ifm[keep])
    keep &= (rows >= 0) & (rows < K)

    energy = np.abs(W.coeffs[keep]) ** 2
    flat = rows[keep] * L + targets[keep]
    R = np.bincount(flat, weights=energy, minlength=K * L).reshape(K, L)
    return SqueezeResult(
        S=_squeezed_matrix(W, R),
        method=SqueezeMethod(SqueezeKind.RM),
        threshold=threshold or ThresholdConfig(),
    )


def _require_invertible(S: SqueezeResult) -> None:
    if not S.invertible:
        raise UnsupportedOperationError(ErrorMessages.RM_NOT_INVERTIBLE)


def _spectrum_from_row_sums(S: SqueezeResult, row_sums: np.ndarray, spec: WaveletSpec) -> ComplexSpectrum:
    grid = S.S.grid
    T = 1.0 / grid.sample_rate_hz
    bins = np.zeros(grid.length, dtype=complex)
    bins[grid.bins] = (T * T / spec.g_hat_zero) * row_sums
    return ComplexSpectrum(bins, grid.freq_step_rad)


def reconstruct_spectrum(S: SqueezeResult, spec: WaveletSpec) -> ComplexSpectrum:
    """
    x^(w_k) = (T^2 / g^(0)) * sum_tau S[k, tau] on the grid bins k_min..k_max;
    all other bins are zero.

    Raises:
        UnsupportedOperationError: S comes from rm
    """
    _require_invertible(S)
    return _spectrum_from_row_sums(S, S.S.coeffs.sum(axis=1), spec)


def reconstruct_time(S: SqueezeResult, spec: WaveletSpec, real_output: bool = False) -> DiscreteSignal:
    """
    Time signal of reconstruct_spectrum: analytic by default, or the real
    signal (2 Re, DC and Nyquist once) with real_output=True.
    """
    spectrum = reconstruct_spectrum(S, spec)
    if real_output:
        return real_part_signal(spectrum, S.S.meta.t0)
    return inverse_spectrum(spectrum, S.S.meta.t0)


def extract_mode(S: SqueezeResult, band: np.ndarray, spec: WaveletSpec) -> ComplexSpectrum:
    """
    Reconstruct from the columns [lo_k, hi_k) of every row only.

    Args:
        band: K x 2 integer array of half-open column intervals, clipped to [0, L)

    Raises:
        EmptySelectionError: no row selects any column
        DimensionError: band does not have one interval per row
    """
    _require_invertible(S)
    K, L = S.S.shape
    band = np.asarray(band)
    if band.shape != (K, 2):
        raise DimensionError(ErrorMessages.SHAPE_MISMATCH.format(left=band.shape, right=(K, 2)))
    lo = np.clip(band[:, 0].astype(np.int64), 0, L)
    hi = np.clip(band[:, 1].astype(np.int64), 0, L)
    if not np.any(hi > lo):
        raise EmptySelectionError(ErrorMessages.EMPTY_SELECTION)

    columns = np.arange(L)[None, :]
    selected = (columns >= lo[:, None]) & (columns < hi[:, None])
    return _spectrum_from_row_sums(S, np.where(selected, S.S.coeffs, 0.0).sum(axis=1), spec)


def ridge_band(S: SqueezeResult, half_width: int) -> np.ndarray:
    """
    Heuristic band: per row, the column of maximum |S| plus or minus
    half_width. Returns a K x 2 array of half-open intervals.
    """
    centers = np.argmax(np.abs(S.S.coeffs), axis=1)
    return np.stack([centers - half_width, centers + half_width + 1], axis=1)


def conservation_residual(W: TFMatrix, gd: GDMap, S: SqueezeResult) -> float:
    """Largest per-row |sum_tau S - sum of kept W| over all rows."""
    _, keep = squeeze_targets(gd)
    expected = np.where(keep, W.coeffs, 0.0).sum(axis=1)
    return float(np.max(np.abs(S.S.coeffs.sum(axis=1) - expected))) if W.shape[0] else 0.0

