"""
transform - MWT, WTSST, WTMSST or RM of a signal CSV, written as TFR1.
"""

import argparse

from tfsqueeze.cli.commands.common import add_frame_args, emit, unwrap
from tfsqueeze.cli.dependencies import get_analysis_service
from tfsqueeze.cli.models import TransformConfig
from tfsqueeze.core.infrastructure.adapters.signal_csv import read_signal_csv, write_signal_csv
from tfsqueeze.core.infrastructure.adapters.tfr_codec import write_tfr
from tfsqueeze.core.models.tfr import ThresholdConfig
from tfsqueeze.core.utils.constants import Defaults, ExitCodes


def register(subparsers) -> None:
    parser = subparsers.add_parser("transform", help="compute a time-frequency representation",
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("input", help="signal CSV")
    parser.add_argument("-o", "--out", required=True, help="output TFR1 path")
    parser.add_argument("--method", choices=["mwt", "wtsst", "wtmsst", "rm"], default="mwt")
    add_frame_args(parser)

    squeeze = parser.add_argument_group("squeezing")
    squeeze.add_argument("--upsilon", type=float, default=None,
                         help=f"support threshold (default: TFSQUEEZE_UPSILON or {Defaults.UPSILON:g})")
    squeeze.add_argument("--upsilon-mode", choices=["relative", "absolute"], default=Defaults.UPSILON_MODE)
    squeeze.add_argument("--iters", dest="iterations", type=int, default=Defaults.ITERATIONS,
                         help="WTMSST iteration count N")
    squeeze.add_argument("--iter-mode", choices=["linear", "exponential", "lin", "exp"],
                         default=Defaults.ITER_MODE, help="exponential needs N a power of two")
    squeeze.add_argument("--reconstruct", metavar="CSV", default=None,
                         help="also write the reconstructed signal and report its error")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = TransformConfig(
        input=args.input, out=args.out, method=args.method, omega0=args.omega0, sigma=args.sigma,
        k_min=args.k_min, k_max=args.k_max, upsilon=args.upsilon, upsilon_mode=args.upsilon_mode,
        iterations=args.iterations, iter_mode=args.iter_mode, reconstruct=args.reconstruct,
        threads=args.threads,
    )
    service = get_analysis_service()
    x = unwrap(read_signal_csv(cfg.input))
    spec, grid = service.build_frame(x, cfg.omega0, cfg.sigma, cfg.k_min, cfg.k_max)
    upsilon = service.env_loader.default_upsilon() if cfg.upsilon is None else cfg.upsilon
    threshold = ThresholdConfig(upsilon, cfg.upsilon_mode)

    report = service.transform(
        x, spec, grid, method=cfg.method, threshold=threshold, iterations=cfg.iterations,
        mode=cfg.iter_mode, reconstruct=cfg.reconstruct is not None, threads=cfg.threads,
    )
    written = unwrap(write_tfr(report.output, cfg.out, spec, report.method, threshold))
    label = report.method.label() if report.method else "mwt"
    emit(f"transform {label}: {grid.K}x{x.length} "
         f"({grid.freqs_hz[0]:.4g}..{grid.freqs_hz[-1]:.4g} Hz) -> {written['file_path']}")
    if report.residual is not None:
        emit(f"conservation residual max: {report.residual:.3e}")
    if report.reconstruction is not None:
        unwrap(write_signal_csv(report.reconstruction, cfg.reconstruct))
        emit(f"reconstruction: rel_l2={report.error.rel_l2:.6e} snr_db={report.error.snr_db:.3f} "
             f"-> {cfg.reconstruct}")
    return ExitCodes.OK
