"""
gen - synthesize a test signal and write it as a signal CSV.
"""

import argparse
import math

from tfsqueeze.cli.commands.common import emit, unwrap
from tfsqueeze.cli.models import GenConfig
from tfsqueeze.core.infrastructure.adapters.signal_csv import write_signal_csv
from tfsqueeze.core.models.signal import ChirpModel, DampedTone, DiscreteSignal
from tfsqueeze.core.utils.constants import ExitCodes
from tfsqueeze.core.workflows import signal_lab


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="generate a synthetic signal CSV",
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("kind", choices=["dirac", "chirp", "pulses", "twomode"])
    parser.add_argument("-o", "--out", required=True, help="output CSV path")
    parser.add_argument("--fs", type=float, required=True, help="sample rate in Hz")
    parser.add_argument("--len", dest="length", type=int, required=True, help="number of samples")

    dirac = parser.add_argument_group("dirac")
    dirac.add_argument("--t0", type=float, default=0.0, help="Dirac time in s")

    chirp = parser.add_argument_group("chirp")
    chirp.add_argument("--beta", type=float, nargs=3, default=[0.0, 0.0, 0.0], metavar=("B0", "B1", "B2"),
                       help="phase coefficients: rad, s, s^2/rad")
    chirp.add_argument("--band-hz", type=float, nargs=2, default=None, metavar=("LO", "HI"),
                       help="band edges in Hz (default: 0 to Nyquist)")
    chirp.add_argument("--amplitude", type=float, default=1.0)

    pulses = parser.add_argument_group("pulses")
    pulses.add_argument("--period-ms", type=float, default=9.3)
    pulses.add_argument("--pulses", dest="n_pulses", type=int, default=None,
                        help="number of pulses (default: as many as fit)")
    pulses.add_argument("--carrier-hz", type=float, default=1060.0)
    pulses.add_argument("--decay", dest="decay_per_s", type=float, default=600.0, help="decay rate in 1/s")
    pulses.add_argument("--missing", type=int, nargs="*", default=[], help="indices of omitted pulses")

    noise = parser.add_argument_group("twomode")
    noise.add_argument("--snr-db", type=float, default=None, help="add white noise at this SNR")
    noise.add_argument("--seed", type=int, default=0)
    parser.set_defaults(handler=run)


def build_signal(cfg: GenConfig) -> DiscreteSignal:
    if cfg.kind == "dirac":
        return signal_lab.synth_dirac(cfg.t0, cfg.length, cfg.fs)
    if cfg.kind == "chirp":
        lo_hz, hi_hz = cfg.band_hz if cfg.band_hz else (0.0, cfg.fs / 2.0)
        model = ChirpModel(beta=tuple(cfg.beta), band=(2 * math.pi * lo_hz, 2 * math.pi * hi_hz),
                           amplitude=cfg.amplitude)
        return signal_lab.synth_gd_chirp(model, cfg.length, cfg.fs)
    if cfg.kind == "pulses":
        period_s = cfg.period_ms / 1000.0
        n_pulses = cfg.n_pulses or max(1, int(cfg.length // (period_s * cfg.fs)))
        return signal_lab.synth_pulse_train(period_s, n_pulses, cfg.length, cfg.fs,
                                            DampedTone(cfg.carrier_hz, cfg.decay_per_s), cfg.missing)
    return signal_lab.synth_two_mode(cfg.length, cfg.fs, cfg.snr_db, cfg.seed)


def run(args: argparse.Namespace) -> int:
    cfg = GenConfig(
        kind=args.kind, out=args.out, fs=args.fs, length=args.length, t0=args.t0,
        beta=args.beta, band_hz=args.band_hz, amplitude=args.amplitude,
        period_ms=args.period_ms, n_pulses=args.n_pulses, carrier_hz=args.carrier_hz,
        decay_per_s=args.decay_per_s, missing=args.missing, snr_db=args.snr_db, seed=args.seed,
    )
    x = build_signal(cfg)
    written = unwrap(write_signal_csv(x, cfg.out))
    emit(f"gen {cfg.kind}: {x.length} samples at {x.sample_rate_hz:g} Hz "
         f"({'real' if x.is_real else 'complex'}) -> {written['file_path']}")
    return ExitCodes.OK
