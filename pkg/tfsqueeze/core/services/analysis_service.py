"""
Analysis Service - orchestration of the numerical workflows.

This service coordinates:
- the transform pipeline (MWT, GD estimate, squeezing, reassignment)
- reconstruction reports (conservation residual, round-trip error)
- the SNR sweep of Renyi entropies
- the TFES report

It does NOT handle:
- File I/O (delegated to adapters)
- Configuration (delegated to EnvLoader)
- Argument parsing (delegated to the cli package)
"""

import logging
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import pandas as pd

from tfsqueeze.core.infrastructure.config.env_loader import EnvLoader
from tfsqueeze.core.infrastructure.frameworks.errors import ArgumentError
from tfsqueeze.core.models.frame import ScaleGrid, WaveletSpec, WindowWeight
from tfsqueeze.core.models.signal import DiscreteSignal
from tfsqueeze.core.models.tfr import (
    GDMap,
    IntervalSummary,
    IterationMode,
    ReconstructionError,
    SqueezeKind,
    SqueezeMethod,
    SqueezeResult,
    TfesResult,
    TFMatrix,
    ThresholdConfig,
)
from tfsqueeze.core.utils.constants import Defaults
from tfsqueeze.core.utils.logging_helpers import OperationTimer, StandardLogger, log_operation, new_request_id
from tfsqueeze.core.workflows import gd_estimator, squeezer, tf_metrics
from tfsqueeze.core.workflows.mwt_engine import mwt
from tfsqueeze.core.workflows.signal_lab import add_noise_snr
from tfsqueeze.core.workflows.wavelet_frame import make_scale_grid

logger = logging.getLogger(__name__)

METHODS = ("mwt", "wtsst", "wtmsst", "rm")


@dataclass(frozen=True)
class TransformReport:
    """Everything one transform run produces."""
    matrix: TFMatrix
    squeeze: Optional[SqueezeResult] = None
    gd: Optional[GDMap] = None
    gd_seconds: float = 0.0
    residual: Optional[float] = None
    reconstruction: Optional[DiscreteSignal] = None
    error: Optional[ReconstructionError] = None

    @property
    def output(self) -> TFMatrix:
        """The matrix to serialize: the squeezed/reassigned one if any."""
        return self.squeeze.S if self.squeeze is not None else self.matrix

    @property
    def method(self) -> Optional[SqueezeMethod]:
        return self.squeeze.method if self.squeeze is not None else None


class AnalysisService:
    """Core orchestration service for time-frequency analysis runs."""

    def __init__(self, env_loader: Optional[EnvLoader] = None):
        self.env_loader = env_loader or EnvLoader()

    def resolve_threads(self, threads: Optional[int] = None) -> int:
        return self.env_loader.resolve_threads(threads)

    def build_frame(self, x: DiscreteSignal, omega0: Optional[float] = None, sigma: Optional[float] = None,
                    k_min: int = Defaults.K_MIN, k_max: Optional[int] = None) -> Tuple[WaveletSpec, ScaleGrid]:
        """Wavelet and scale grid for x; unset parameters fall back to environment defaults."""
        spec = WaveletSpec(
            omega0=self.env_loader.default_omega0() if omega0 is None else omega0,
            sigma=self.env_loader.default_sigma() if sigma is None else sigma,
        )
        return spec, make_scale_grid(x.length, x.sample_rate_hz, spec, k_min=k_min, k_max=k_max)

    # ========== Transform pipeline ==========

    def _estimate_gd(self, x: DiscreteSignal, W: TFMatrix, grid: ScaleGrid, spec: WaveletSpec,
                     threshold: ThresholdConfig, threads: int, request_id: str) -> GDMap:
        with OperationTimer("gd_estimate", request_id):
            Wtg = mwt(x, grid, spec, WindowWeight.TIME_WEIGHTED, threads=threads)
            gd = gd_estimator.gd_estimate(W, Wtg, threshold)
        StandardLogger.log_data_operation("gd_estimate", request_id, "cells", int(gd.mask.sum()),
                                          fill=round(float(gd.mask.mean()), 4))
        return gd

    @log_operation("transform")
    def transform(self, x: DiscreteSignal, spec: WaveletSpec, grid: ScaleGrid, method: str = "mwt",
                  threshold: Optional[ThresholdConfig] = None, iterations: int = Defaults.ITERATIONS,
                  mode: str = Defaults.ITER_MODE, reconstruct: bool = False,
                  threads: Optional[int] = None) -> TransformReport:
        """
        Run one transform.

        Args:
            x: Input signal
            spec, grid: Analysis frame for x
            method: mwt, wtsst, wtmsst or rm
            threshold: Support-set threshold (default 1e-3 relative)
            iterations, mode: Iteration count and scheme for wtmsst
            reconstruct: Also invert the squeezed matrix and score it against x
            threads: Worker threads (None resolves from the environment)

        Raises:
            ArgumentError: unknown method, bad iteration settings, reconstruct with rm
        """
        if method not in METHODS:
            raise ArgumentError(f"Unknown method '{method}', expected one of {METHODS}")
        threshold = threshold or ThresholdConfig()
        mode = IterationMode.parse(mode)
        threads = self.resolve_threads(threads)
        request_id = new_request_id()

        if method == "wtmsst":
            gd_estimator.check_iteration(iterations, mode)
        if reconstruct and method == "rm":
            raise ArgumentError("--reconstruct needs an invertible method (wtsst or wtmsst)")

        with OperationTimer("mwt", request_id, K=grid.K, L=x.length, threads=threads):
            W = mwt(x, grid, spec, WindowWeight.PLAIN, threads=threads)
        if method == "mwt":
            return TransformReport(matrix=W)

        gd = self._estimate_gd(x, W, grid, spec, threshold, threads, request_id)

        if method == "rm":
            Wxi = mwt(x, grid, spec, WindowWeight.FREQ_WEIGHTED, threads=threads)
            ifm = gd_estimator.if_estimate(W, Wxi, threshold)
            with OperationTimer("rm", request_id):
                result = squeezer.rm(W, gd, ifm, threshold)
            return TransformReport(matrix=W, squeeze=result, gd=gd)

        n = iterations if method == "wtmsst" else 1
        start = time.perf_counter()
        with OperationTimer("gd_iterate", request_id, N=n, mode=mode.value):
            composed = gd_estimator.gd_iterate(gd, n, mode)
        gd_seconds = time.perf_counter() - start

        with OperationTimer("squeeze", request_id):
            result = squeezer.wtsst(W, composed, threshold, threads=threads)
        if method == "wtmsst" and n > 1:
            result = SqueezeResult(result.S, SqueezeMethod(SqueezeKind.WTMSST, n, mode), threshold)
        residual = squeezer.conservation_residual(W, composed, result)

        reconstruction, error = None, None
        if reconstruct:
            reconstruction = squeezer.reconstruct_time(result, spec, real_output=x.is_real)
            error = tf_metrics.reconstruction_error(x, reconstruction)
            StandardLogger.log_operation_success("reconstruct", request_id, rel_l2=error.rel_l2)

        return TransformReport(
            matrix=W,
            squeeze=result,
            gd=composed,
            gd_seconds=gd_seconds,
            residual=residual,
            reconstruction=reconstruction,
            error=error,
        )

    # ========== Metrics ==========

    @log_operation("entropy_sweep")
    def entropy_sweep(self, x: DiscreteSignal, snrs: Iterable[float], trials: int = Defaults.SWEEP_TRIALS,
                      seed: int = Defaults.SWEEP_SEED, alpha: float = Defaults.RENYI_ALPHA,
                      iterations: int = Defaults.SWEEP_ITERATIONS, spec: Optional[WaveletSpec] = None,
                      k_min: int = Defaults.K_MIN, k_max: Optional[int] = None,
                      threshold: Optional[ThresholdConfig] = None,
                      threads: Optional[int] = None) -> pd.DataFrame:
        """
        Renyi entropy of |MWT|, WTSST and WTMSST(iterations) of x plus white
        noise, for every SNR level and trial. Trial t uses noise seed seed + t.

        Returns:
            DataFrame with columns method, snr_db, trial, alpha, entropy
        """
        if trials < 1:
            raise ArgumentError(f"trials must be >= 1, got {trials}")
        spec = spec or WaveletSpec(self.env_loader.default_omega0(), self.env_loader.default_sigma())
        grid = make_scale_grid(x.length, x.sample_rate_hz, spec, k_min=k_min, k_max=k_max)
        threshold = threshold or ThresholdConfig()
        threads = self.resolve_threads(threads)

        rows = []
        for snr in snrs:
            for trial in range(trials):
                noisy = add_noise_snr(x, float(snr), seed + trial)
                W = mwt(noisy, grid, spec, WindowWeight.PLAIN, threads=threads)
                Wtg = mwt(noisy, grid, spec, WindowWeight.TIME_WEIGHTED, threads=threads)
                gd = gd_estimator.gd_estimate(W, Wtg, threshold)
                single = squeezer.wtsst(W, gd, threshold, threads=threads)
                multi = squeezer.wtmsst(W, gd, iterations, IterationMode.LINEAR, threshold, threads=threads)
                for label, matrix in (("mwt", W), ("wtsst", single), ("wtmsst", multi)):
                    rows.append({
                        "method": label,
                        "snr_db": float(snr),
                        "trial": trial,
                        "alpha": float(alpha),
                        "entropy": tf_metrics.renyi_entropy(matrix, alpha),
                    })
        frame = pd.DataFrame(rows, columns=["method", "snr_db", "trial", "alpha", "entropy"])
        StandardLogger.log_data_operation("entropy_sweep", new_request_id(), "rows", len(frame))
        return frame

    @staticmethod
    def sweep_means(frame: pd.DataFrame) -> pd.DataFrame:
        """Mean entropy per (method, snr_db, alpha), in first-seen method order."""
        order = list(dict.fromkeys(frame["method"]))
        means = frame.groupby(["method", "snr_db", "alpha"], sort=False)["entropy"].mean().reset_index()
        means["method"] = pd.Categorical(means["method"], categories=order, ordered=True)
        means = means.sort_values(["method", "snr_db"]).reset_index(drop=True)
        means["method"] = means["method"].astype(str)
        return means

    @log_operation("entropy")
    def entropy(self, matrix: TFMatrix, alpha: float = Defaults.RENYI_ALPHA) -> float:
        return tf_metrics.renyi_entropy(matrix, alpha)

    @log_operation("tfes_report")
    def tfes_report(self, matrix: TFMatrix, min_separation_s: Optional[float] = None,
                    peak_fraction: float = Defaults.TFES_PEAK_FRACTION,
                    rel_tol: float = Defaults.INTERVAL_OUTLIER_TOL) -> Tuple[TfesResult, IntervalSummary]:
        """TFES of matrix plus the summary of its pulse intervals."""
        result = tf_metrics.tfes(matrix, min_separation_s=min_separation_s, peak_fraction=peak_fraction)
        summary = tf_metrics.summarize_intervals(result.intervals_s, rel_tol)
        logger.info(f"TFES best row {result.best_row} at {result.best_row_hz:.3f} Hz, "
                    f"fundamental {result.fundamental_hz:.3f} Hz, {result.intervals_s.size} intervals")
        return result, summary

    @log_operation("reconstruction_error")
    def reconstruction_error(self, reference: DiscreteSignal, candidate: DiscreteSignal) -> ReconstructionError:
        return tf_metrics.reconstruction_error(reference, candidate)
