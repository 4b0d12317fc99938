"""
TFR1 codec - binary container for time-frequency matrices.

Layout (little-endian, no padding):

    offset  size  field
    0       4     magic  b'TFR1'
    4       4     K      u32 rows
    8       4     L      u32 columns
    12      8     fs     f64 sample rate in Hz
    20      8     t0     f64 start time in s
    28      1     kind   u8, 0 = complex, 1 = real
    29      ...   payload, row-major: f64 (re, im) pairs, or f64 singles

An optional JSON sidecar '<file>.json' records the grid and the method that
produced the matrix. The binary layout does not depend on it.
"""

import logging
import math
import os
import struct
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from tfsqueeze.core.infrastructure.frameworks.errors import DataFormatError, RangeError
from tfsqueeze.core.infrastructure.frameworks.response_types import StandardResponse, handle_file_operations
from tfsqueeze.core.models.frame import WaveletSpec
from tfsqueeze.core.models.tfr import SignalMeta, SqueezeMethod, TFMatrix, ThresholdConfig
from tfsqueeze.core.utils.constants import Defaults, ErrorMessages, FileTypes
from tfsqueeze.core.utils.file_utils import atomic_read_json, atomic_write, atomic_write_json
from tfsqueeze.core.utils.logging_helpers import StandardLogger, new_request_id
from tfsqueeze.core.workflows.wavelet_frame import make_scale_grid

logger = logging.getLogger(__name__)

HEADER = struct.Struct("<4sIIddB")
PAYLOAD_DTYPES = {FileTypes.TFR_KIND_COMPLEX: np.dtype("<c16"), FileTypes.TFR_KIND_REAL: np.dtype("<f8")}


@dataclass(frozen=True)
class TfrDocument:
    """A decoded TFR1 file: the matrix on its grid plus sidecar metadata."""
    matrix: TFMatrix
    kind: int
    spec: WaveletSpec
    sidecar: Dict[str, Any] = field(default_factory=dict)

    @property
    def method(self) -> str:
        return str(self.sidecar.get("method", "unknown"))


def sidecar_path(path: str) -> str:
    return path + FileTypes.SIDECAR_SUFFIX


def encode_tfr(coeffs: np.ndarray, sample_rate_hz: float, t0: float) -> bytes:
    """Header plus payload bytes for a K x L matrix (complex or real)."""
    coeffs = np.asarray(coeffs)
    kind = FileTypes.TFR_KIND_COMPLEX if np.iscomplexobj(coeffs) else FileTypes.TFR_KIND_REAL
    K, L = coeffs.shape
    header = HEADER.pack(FileTypes.TFR_MAGIC, K, L, float(sample_rate_hz), float(t0), kind)
    payload = np.ascontiguousarray(coeffs, dtype=PAYLOAD_DTYPES[kind]).tobytes()
    return header + payload


def _bad(field_name: str, detail: str) -> DataFormatError:
    return DataFormatError(ErrorMessages.BAD_HEADER.format(field=field_name, detail=detail), field=field_name)


def decode_tfr(blob: bytes):
    """
    Parse TFR1 bytes into (coeffs, fs, t0, kind).

    Raises:
        DataFormatError: naming the first header field that fails
    """
    if len(blob) < 4 or blob[:4] != FileTypes.TFR_MAGIC:
        raise _bad("magic", f"is {bytes(blob[:4])!r}, expected {FileTypes.TFR_MAGIC!r}")
    if len(blob) < HEADER.size:
        offsets = (("K", 8), ("L", 12), ("fs", 20), ("t0", 28), ("kind", 29))
        missing = next(name for name, end in offsets if len(blob) < end)
        raise _bad(missing, f"is truncated ({len(blob)} of {HEADER.size} header bytes)")

    _, K, L, fs, t0, kind = HEADER.unpack_from(blob)
    if K == 0:
        raise _bad("K", "must be at least 1")
    if L < Defaults.MIN_SIGNAL_LEN:
        raise _bad("L", f"is {L}, below the minimum of {Defaults.MIN_SIGNAL_LEN}")
    if not (math.isfinite(fs) and fs > 0):
        raise _bad("fs", f"is {fs}, expected a positive finite rate")
    if not math.isfinite(t0):
        raise _bad("t0", f"is {t0}, expected a finite time")
    if kind not in PAYLOAD_DTYPES:
        raise _bad("kind", f"is {kind}, expected 0 (complex) or 1 (real)")

    dtype = PAYLOAD_DTYPES[kind]
    expected = K * L * dtype.itemsize
    payload = blob[HEADER.size:]
    if len(payload) != expected:
        raise _bad("payload", f"holds {len(payload)} bytes, expected {expected} for {K}x{L}")
    coeffs = np.frombuffer(payload, dtype=dtype).reshape(K, L)
    if not np.all(np.isfinite(coeffs)):
        raise _bad("payload", "contains non-finite values")
    return coeffs.astype(complex if kind == FileTypes.TFR_KIND_COMPLEX else float), fs, t0, kind


def sidecar_for(matrix: TFMatrix, spec: WaveletSpec, method: Optional[SqueezeMethod] = None,
                threshold: Optional[ThresholdConfig] = None) -> Dict[str, Any]:
    grid = matrix.grid
    data: Dict[str, Any] = {
        "k_min": grid.k_min,
        "k_max": grid.k_max,
        "omega0": spec.omega0,
        "sigma": spec.sigma,
        "method": method.label() if method else "mwt",
        "weight": matrix.weight.value if matrix.weight else None,
    }
    if method is not None:
        data.update({"kind": method.kind.value, "iterations": method.iterations, "mode": method.mode.value})
    if threshold is not None:
        data.update({"upsilon": threshold.upsilon, "upsilon_mode": threshold.mode.value})
    return data


@handle_file_operations("write_tfr")
def write_tfr(matrix: TFMatrix, output_path: str, spec: WaveletSpec,
              method: Optional[SqueezeMethod] = None, threshold: Optional[ThresholdConfig] = None,
              write_sidecar: bool = True) -> StandardResponse:
    """Write matrix as TFR1 (atomically) plus its JSON sidecar."""
    request_id = new_request_id()
    blob = encode_tfr(matrix.coeffs, matrix.meta.sample_rate_hz, matrix.meta.t0)
    file_size = atomic_write(output_path, lambda handle: handle.write(blob))
    StandardLogger.log_file_operation("write_tfr", request_id, output_path, file_size, shape=matrix.shape)

    if write_sidecar:
        response = atomic_write_json(sidecar_for(matrix, spec, method, threshold), sidecar_path(output_path))
        if response.is_error():
            return response
    return StandardResponse.success_response(
        data={"file_path": output_path, "file_size": file_size},
        request_id=request_id,
    )


def _read_sidecar(path: str) -> Dict[str, Any]:
    if not os.path.exists(sidecar_path(path)):
        return {}
    response = atomic_read_json(sidecar_path(path))
    if response.is_error() or not isinstance(response.data, dict):
        logger.warning(f"Ignoring unreadable sidecar for {path}: {response.get_error_message()}")
        return {}
    return response.data


@handle_file_operations("read_tfr")
def read_tfr(input_path: str) -> StandardResponse:
    """
    Read a TFR1 file; data holds a TfrDocument.

    Without a sidecar the rows are assumed to end at bin L/2 (k_min =
    L/2 - K + 1) with the default wavelet.
    """
    request_id = new_request_id()
    if not os.path.exists(input_path):
        raise FileNotFoundError(2, ErrorMessages.FILE_NOT_FOUND.format(path=input_path), input_path)
    with open(input_path, "rb") as handle:
        blob = handle.read()
    if not blob:
        raise DataFormatError(ErrorMessages.EMPTY_FILE.format(path=input_path), field="magic")

    coeffs, fs, t0, kind = decode_tfr(blob)
    K, L = coeffs.shape
    sidecar = _read_sidecar(input_path)
    spec = WaveletSpec(float(sidecar.get("omega0", Defaults.OMEGA0)), float(sidecar.get("sigma", Defaults.SIGMA)))
    k_min = int(sidecar.get("k_min", max(1, L // 2 - K + 1)))
    try:
        grid = make_scale_grid(L, fs, spec, k_min=k_min, k_max=k_min + K - 1)
    except RangeError as e:
        raise _bad("K", f"does not fit a scale grid for L={L}: {e}") from None

    matrix = TFMatrix(coeffs, grid, SignalMeta(L, fs, t0), weight=None)
    StandardLogger.log_file_operation("read_tfr", request_id, input_path, len(blob), shape=(K, L), kind=kind)
    return StandardResponse.success_response(
        data=TfrDocument(matrix=matrix, kind=kind, spec=spec, sidecar=sidecar),
        request_id=request_id,
        file_path=input_path,
    )
