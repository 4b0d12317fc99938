"""
Shared helpers for the subcommands: flag groups and response unwrapping.
"""

import argparse
import sys
from typing import Any

from tfsqueeze.core.infrastructure.frameworks.errors import TfSqueezeError
from tfsqueeze.core.infrastructure.frameworks.response_types import StandardResponse
from tfsqueeze.core.utils.constants import Defaults


class CommandFailure(TfSqueezeError):
    """A failed adapter response, carrying the response's exit code."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def unwrap(response: StandardResponse) -> Any:
    """Data of a successful response; CommandFailure otherwise."""
    if response.is_error():
        raise CommandFailure(response.get_error_message(), response.exit_code)
    return response.get_data()


def emit(line: str) -> None:
    """One summary line on stdout (logs go to stderr)."""
    sys.stdout.write(line + "\n")
    sys.stdout.flush()


def add_threads_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: TFSQUEEZE_THREADS, else physical cores)")


def add_frame_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("analysis frame")
    group.add_argument("--omega0", type=float, default=None,
                       help=f"wavelet centre frequency (default: TFSQUEEZE_OMEGA0 or {Defaults.OMEGA0:g})")
    group.add_argument("--sigma", type=float, default=None,
                       help=f"Gaussian window variance (default: TFSQUEEZE_SIGMA or {Defaults.SIGMA:g})")
    group.add_argument("--k-min", type=int, default=Defaults.K_MIN,
                       help="lowest FFT bin of the scale grid (default: %(default)s)")
    group.add_argument("--k-max", type=int, default=None, help="highest FFT bin (default: L/2)")
    add_threads_arg(parser)
