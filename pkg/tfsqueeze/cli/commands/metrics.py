"""
metrics - Renyi entropy (single matrix or SNR sweep), TFES with pulse
intervals, and reconstruction error between two signals.
"""

import argparse
import math

import pandas as pd

from tfsqueeze.cli.commands.common import add_frame_args, emit, unwrap
from tfsqueeze.cli.dependencies import get_analysis_service
from tfsqueeze.cli.models import EntropyConfig, ReconErrorConfig, TfesConfig, parse_sweep
from tfsqueeze.core.infrastructure.adapters.metrics_csv import (
    write_entropy_csv,
    write_intervals_csv,
    write_reconstruction_csv,
    write_tfes_csv,
)
from tfsqueeze.core.infrastructure.adapters.signal_csv import read_signal_csv
from tfsqueeze.core.infrastructure.adapters.tfr_codec import read_tfr
from tfsqueeze.core.infrastructure.frameworks.errors import ArgumentError
from tfsqueeze.core.models.tfr import ThresholdConfig
from tfsqueeze.core.utils.constants import Defaults, ExitCodes, FileTypes


def _sweep(text: str):
    try:
        return parse_sweep(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def register(subparsers) -> None:
    parser = subparsers.add_parser("metrics", help="compute metrics of TFRs and signals")
    metrics = parser.add_subparsers(dest="metric", required=True, metavar="METRIC")

    entropy = metrics.add_parser("entropy", help="Renyi entropy of a TFR1 file, or an SNR sweep of a signal CSV",
                                 formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    entropy.add_argument("input", help="TFR1 file, or signal CSV with --sweep-snr")
    entropy.add_argument("-o", "--out", default="entropy.csv")
    entropy.add_argument("--alpha", type=float, default=Defaults.RENYI_ALPHA, help="Renyi order")
    entropy.add_argument("--sweep-snr", type=_sweep, default=None, metavar="LEVELS",
                         help="'a,b,c' or 'lo:hi[:step]' (five levels without a step)")
    entropy.add_argument("--trials", type=int, default=Defaults.SWEEP_TRIALS)
    entropy.add_argument("--seed", type=int, default=Defaults.SWEEP_SEED)
    entropy.add_argument("--iters", dest="iterations", type=int, default=Defaults.SWEEP_ITERATIONS,
                         help="WTMSST iteration count in the sweep")
    entropy.add_argument("--upsilon", type=float, default=None)
    add_frame_args(entropy)
    entropy.set_defaults(handler=run_entropy)

    tfes = metrics.add_parser("tfes", help="time-frequency envelope spectrum of a TFR1 file",
                              formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    tfes.add_argument("input", help="TFR1 file (typically WTMSST)")
    tfes.add_argument("-o", "--out", default="tfes.csv")
    tfes.add_argument("--intervals-out", default=None, help="also write intervals.csv here")
    tfes.add_argument("--min-sep-ms", dest="min_separation_ms", type=float, default=None,
                      help=f"minimum pulse separation (default: {Defaults.MIN_SEPARATION_S * 1000:g} ms)")
    tfes.add_argument("--peak-fraction", type=float, default=Defaults.TFES_PEAK_FRACTION)
    tfes.set_defaults(handler=run_tfes)

    recon = metrics.add_parser("recon-error", help="relative L2 error and SNR of a reconstruction")
    recon.add_argument("reference", help="reference signal CSV")
    recon.add_argument("candidate", help="reconstructed signal CSV")
    recon.add_argument("-o", "--out", default=None, help="optional CSV with rel_l2, snr_db")
    recon.set_defaults(handler=run_recon_error)


def run_entropy(args: argparse.Namespace) -> int:
    cfg = EntropyConfig(
        input=args.input, out=args.out, alpha=args.alpha, sweep_snr=args.sweep_snr, trials=args.trials,
        seed=args.seed, iterations=args.iterations, upsilon=args.upsilon, omega0=args.omega0,
        sigma=args.sigma, k_min=args.k_min, k_max=args.k_max, threads=args.threads,
    )
    service = get_analysis_service()

    if cfg.sweep_snr is None:
        if cfg.input.lower().endswith(FileTypes.CSV):
            raise ArgumentError("Entropy of a signal CSV needs --sweep-snr")
        document = unwrap(read_tfr(cfg.input))
        value = service.entropy(document.matrix, alpha=cfg.alpha)
        frame = pd.DataFrame([{"method": document.method, "snr_db": math.nan,
                               "alpha": cfg.alpha, "entropy": value}])
        unwrap(write_entropy_csv(frame, cfg.out))
        emit(f"entropy {document.method}: {value:.6f} bits (alpha={cfg.alpha:g}) -> {cfg.out}")
        return ExitCodes.OK

    x = unwrap(read_signal_csv(cfg.input))
    spec, _ = service.build_frame(x, cfg.omega0, cfg.sigma, cfg.k_min, cfg.k_max)
    upsilon = service.env_loader.default_upsilon() if cfg.upsilon is None else cfg.upsilon
    frame = service.entropy_sweep(
        x, cfg.sweep_snr, trials=cfg.trials, seed=cfg.seed, alpha=cfg.alpha, iterations=cfg.iterations,
        spec=spec, k_min=cfg.k_min, k_max=cfg.k_max,
        threshold=ThresholdConfig(upsilon), threads=cfg.threads,
    )
    means = service.sweep_means(frame)
    unwrap(write_entropy_csv(means, cfg.out))
    for method, group in means.groupby("method", sort=False):
        levels = ", ".join(f"{snr:g} dB: {h:.4f}" for snr, h in zip(group["snr_db"], group["entropy"]))
        emit(f"entropy {method}: {levels}")
    emit(f"{len(frame)} runs ({cfg.trials} trials per level) -> {cfg.out}")
    return ExitCodes.OK


def run_tfes(args: argparse.Namespace) -> int:
    cfg = TfesConfig(
        input=args.input, out=args.out, intervals_out=args.intervals_out,
        min_separation_ms=args.min_separation_ms, peak_fraction=args.peak_fraction,
    )
    service = get_analysis_service()
    document = unwrap(read_tfr(cfg.input))
    min_sep = cfg.min_separation_ms / 1000.0 if cfg.min_separation_ms is not None else None
    result, summary = service.tfes_report(document.matrix, min_separation_s=min_sep,
                                          peak_fraction=cfg.peak_fraction)
    unwrap(write_tfes_csv(result, cfg.out))
    emit(f"tfes: best row {result.best_row} at {result.best_row_hz:.3f} Hz, "
         f"envelope fundamental {result.fundamental_hz:.3f} Hz -> {cfg.out}")
    if result.intervals_s.size:
        emit(f"intervals: {result.intervals_s.size}, median {summary.median_s * 1000:.4f} ms, "
             f"regular mean {summary.mean_regular_s * 1000:.4f} ms, outliers {summary.outliers.tolist()}")
    else:
        emit("intervals: none (fewer than two pulses)")
    if cfg.intervals_out:
        unwrap(write_intervals_csv(result.peak_times_s, cfg.intervals_out))
    return ExitCodes.OK


def run_recon_error(args: argparse.Namespace) -> int:
    cfg = ReconErrorConfig(reference=args.reference, candidate=args.candidate, out=args.out)
    service = get_analysis_service()
    reference = unwrap(read_signal_csv(cfg.reference))
    candidate = unwrap(read_signal_csv(cfg.candidate))
    error = service.reconstruction_error(reference, candidate)
    emit(f"recon-error: rel_l2={error.rel_l2:.6e} snr_db={error.snr_db:.3f}")
    if cfg.out:
        unwrap(write_reconstruction_csv(error, cfg.out))
    return ExitCodes.OK
