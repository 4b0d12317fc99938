"""
Signal CSV adapter - reads and writes the plain-text signal format.

    # fs_hz=<float> t0_s=<float>
    <real>            one sample per line for real signals
    <real>,<imag>     or two columns for complex ones

UTF-8, LF line endings, '.' as decimal separator. Floats are written with
shortest round-trip formatting, so write/read reproduces samples exactly.
"""

import io
import logging
import os
import re

import numpy as np
import pandas as pd

from tfsqueeze.core.infrastructure.frameworks.errors import DataFormatError, RangeError
from tfsqueeze.core.infrastructure.frameworks.response_types import StandardResponse, handle_file_operations
from tfsqueeze.core.models.signal import DiscreteSignal
from tfsqueeze.core.utils.constants import ErrorMessages, FileTypes
from tfsqueeze.core.utils.file_utils import atomic_write
from tfsqueeze.core.utils.logging_helpers import StandardLogger, new_request_id

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^#\s*fs_hz=(?P<fs>\S+)\s+t0_s=(?P<t0>\S+)\s*$")


def format_header(fs: float, t0: float) -> str:
    return f"{FileTypes.SIGNAL_HEADER_PREFIX} fs_hz={fs!r} t0_s={t0!r}\n"


def parse_header(line: str, path: str):
    """(fs, t0) from the header line; DataFormatError if malformed."""
    match = _HEADER.match(line.strip())
    if not match:
        raise DataFormatError(ErrorMessages.BAD_SIGNAL_CSV.format(
            path=path, detail=f"expected '# fs_hz=<float> t0_s=<float>', got {line.strip()[:60]!r}"), field="header")
    try:
        return float(match.group("fs")), float(match.group("t0"))
    except ValueError:
        raise DataFormatError(ErrorMessages.BAD_SIGNAL_CSV.format(
            path=path, detail="header values are not numbers"), field="header") from None


def samples_frame(x: DiscreteSignal) -> pd.DataFrame:
    if x.is_real:
        return pd.DataFrame({"real": x.samples.real})
    return pd.DataFrame({"real": x.samples.real, "imag": x.samples.imag})


@handle_file_operations("write_signal_csv")
def write_signal_csv(x: DiscreteSignal, output_path: str) -> StandardResponse:
    """Write x to output_path atomically; data holds file_path and file_size."""
    request_id = new_request_id()
    frame = samples_frame(x)

    def writer(handle):
        handle.write(format_header(x.sample_rate_hz, x.t0))
        frame.to_csv(handle, header=False, index=False, lineterminator="\n")

    file_size = atomic_write(output_path, writer, binary=False)
    StandardLogger.log_file_operation("write_signal_csv", request_id, output_path, file_size,
                                      samples=x.length, columns=frame.shape[1])
    return StandardResponse.success_response(
        data={"file_path": output_path, "file_size": file_size},
        request_id=request_id,
    )


@handle_file_operations("read_signal_csv")
def read_signal_csv(input_path: str) -> StandardResponse:
    """
    Read a signal CSV; data holds the DiscreteSignal.

    Malformed headers, rows that are not one or two numbers, non-finite
    samples and too-short records all fail with DataFormatError.
    """
    request_id = new_request_id()
    if not os.path.exists(input_path):
        raise FileNotFoundError(2, ErrorMessages.FILE_NOT_FOUND.format(path=input_path), input_path)

    with open(input_path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if not text.strip():
        raise DataFormatError(ErrorMessages.EMPTY_FILE.format(path=input_path), field="header")

    header, _, body = text.partition("\n")
    fs, t0 = parse_header(header, input_path)
    try:
        frame = pd.read_csv(io.StringIO(body), header=None, dtype=float, float_precision="round_trip")
    except (ValueError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise DataFormatError(ErrorMessages.BAD_SIGNAL_CSV.format(path=input_path, detail=str(e)),
                              field="samples") from None

    if frame.shape[1] not in (1, 2):
        raise DataFormatError(ErrorMessages.BAD_SIGNAL_CSV.format(
            path=input_path, detail=f"expected 1 or 2 columns, got {frame.shape[1]}"), field="samples")
    values = frame.to_numpy()
    samples = values[:, 0] if values.shape[1] == 1 else values[:, 0] + 1j * values[:, 1]
    if not np.all(np.isfinite(samples)):
        raise DataFormatError(ErrorMessages.BAD_SIGNAL_CSV.format(
            path=input_path, detail=ErrorMessages.NON_FINITE_SAMPLES), field="samples")

    try:
        signal = DiscreteSignal(samples, fs, t0)
    except RangeError as e:
        raise DataFormatError(ErrorMessages.BAD_SIGNAL_CSV.format(path=input_path, detail=str(e)),
                              field="samples") from None

    StandardLogger.log_file_operation("read_signal_csv", request_id, input_path,
                                      os.path.getsize(input_path), samples=signal.length)
    return StandardResponse.success_response(data=signal, request_id=request_id, file_path=input_path)
