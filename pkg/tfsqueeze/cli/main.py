"""
Command-line entry point.

Exit codes: 0 success, 1 I/O or data error, 2 usage or validation error.
Summaries go to stdout; logs go to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError as PydanticValidationError

from tfsqueeze import __version__
from tfsqueeze.cli.commands import gen, metrics, render, transform
from tfsqueeze.cli.dependencies import get_analysis_service
from tfsqueeze.core.infrastructure.frameworks.errors import TfSqueezeError
from tfsqueeze.core.utils.constants import Defaults, ExitCodes
from tfsqueeze.core.utils.logging_helpers import configure_logging

logger = logging.getLogger(__name__)

DESCRIPTION = (
    "Time-reassigned synchrosqueezing of transient signals. "
    f"Defaults: omega0={Defaults.OMEGA0:g}, sigma={Defaults.SIGMA:g}, "
    f"upsilon={Defaults.UPSILON:g} ({Defaults.UPSILON_MODE}), alpha={Defaults.RENYI_ALPHA:g}, "
    f"k_min={Defaults.K_MIN}."
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tfsqueeze", description=DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="stderr log level (default: TFSQUEEZE_LOG_LEVEL or WARNING)")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in (gen, transform, metrics, render):
        command.register(subparsers)
    return parser


def _fail(message: str, code: int) -> int:
    sys.stderr.write(f"tfsqueeze: error: {message}\n")
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(e.code) if isinstance(e.code, int) else ExitCodes.USAGE_ERROR

    configure_logging(args.log_level or get_analysis_service().env_loader.log_level())
    try:
        return args.handler(args)
    except TfSqueezeError as e:
        logger.debug("Command failed", exc_info=True)
        return _fail(str(e), e.exit_code)
    except PydanticValidationError as e:
        details = "; ".join(f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}"
                            for err in e.errors())
        return _fail(details, ExitCodes.USAGE_ERROR)
    except OSError as e:
        return _fail(str(e), ExitCodes.DATA_ERROR)


if __name__ == "__main__":
    sys.exit(main())
