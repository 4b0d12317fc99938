"""
Metric CSV adapter.

    entropy.csv    method, snr_db, alpha, entropy
    tfes.csv       row_hz, spectrum_peak
    intervals.csv  t_start_s, interval_s
    recon.csv      rel_l2, snr_db
"""

import logging

import numpy as np
import pandas as pd

from tfsqueeze.core.infrastructure.frameworks.response_types import StandardResponse, handle_file_operations
from tfsqueeze.core.models.tfr import ReconstructionError, TfesResult
from tfsqueeze.core.utils.file_utils import atomic_write
from tfsqueeze.core.utils.logging_helpers import StandardLogger, new_request_id

logger = logging.getLogger(__name__)

ENTROPY_COLUMNS = ["method", "snr_db", "alpha", "entropy"]
TFES_COLUMNS = ["row_hz", "spectrum_peak"]
INTERVAL_COLUMNS = ["t_start_s", "interval_s"]


def _write_frame(operation: str, frame: pd.DataFrame, output_path: str) -> StandardResponse:
    request_id = new_request_id()
    file_size = atomic_write(
        output_path,
        lambda handle: frame.to_csv(handle, index=False, lineterminator="\n"),
        binary=False,
    )
    StandardLogger.log_file_operation(operation, request_id, output_path, file_size, rows=len(frame))
    return StandardResponse.success_response(
        data={"file_path": output_path, "file_size": file_size, "rows": len(frame)},
        request_id=request_id,
    )


@handle_file_operations("write_entropy_csv")
def write_entropy_csv(frame: pd.DataFrame, output_path: str) -> StandardResponse:
    """frame needs the entropy columns; extra columns (trial) are dropped."""
    return _write_frame("write_entropy_csv", frame.loc[:, ENTROPY_COLUMNS], output_path)


def tfes_frame(result: TfesResult) -> pd.DataFrame:
    return pd.DataFrame({"row_hz": result.row_hz, "spectrum_peak": result.spectrum_peak})


def intervals_frame(peak_times_s: np.ndarray) -> pd.DataFrame:
    """Each spacing between consecutive peaks, keyed by the peak it starts from."""
    peaks = np.asarray(peak_times_s, dtype=float)
    return pd.DataFrame({"t_start_s": peaks[:-1], "interval_s": np.diff(peaks)})


@handle_file_operations("write_tfes_csv")
def write_tfes_csv(result: TfesResult, output_path: str) -> StandardResponse:
    return _write_frame("write_tfes_csv", tfes_frame(result), output_path)


@handle_file_operations("write_intervals_csv")
def write_intervals_csv(peak_times_s: np.ndarray, output_path: str) -> StandardResponse:
    return _write_frame("write_intervals_csv", intervals_frame(peak_times_s), output_path)


@handle_file_operations("write_reconstruction_csv")
def write_reconstruction_csv(error: ReconstructionError, output_path: str) -> StandardResponse:
    return _write_frame("write_reconstruction_csv", pd.DataFrame([error.to_dict()]), output_path)
