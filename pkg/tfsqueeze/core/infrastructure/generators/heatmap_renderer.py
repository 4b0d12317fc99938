"""
Heatmap renderer - writes the magnitude of a time-frequency matrix as a PNG,
one pixel per cell, time on x and frequency rising upward.

Axis ranges and the scaling rule are stored in the PNG text chunks so the
image stays self-describing without drawn axes.
"""

import logging
from typing import Dict, Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from tfsqueeze.core.infrastructure.frameworks.errors import ArgumentError  # noqa: E402
from tfsqueeze.core.infrastructure.frameworks.response_types import (  # noqa: E402
    StandardResponse,
    handle_file_operations,
)
from tfsqueeze.core.models.tfr import TFMatrix  # noqa: E402
from tfsqueeze.core.utils.constants import Defaults  # noqa: E402
from tfsqueeze.core.utils.file_utils import atomic_write  # noqa: E402
from tfsqueeze.core.utils.logging_helpers import StandardLogger, new_request_id  # noqa: E402

logger = logging.getLogger(__name__)

SCALES = ("linear", "log")


def check_colormap(name: str) -> str:
    if name not in matplotlib.colormaps:
        raise ArgumentError(f"Unknown colormap: {name}")
    return name


def heatmap_values(coeffs: np.ndarray, scale: str = Defaults.RENDER_SCALE,
                   clamp: float = Defaults.LOG_CLAMP) -> np.ndarray:
    """
    Magnitudes mapped to [0, 1].

    linear  |T| / max|T|
    log     (log10(max(|T| / max|T|, clamp)) - log10(clamp)) / -log10(clamp)

    An all-zero matrix maps to zeros.
    """
    if scale not in SCALES:
        raise ArgumentError(f"Unknown render scale '{scale}', expected one of {SCALES}")
    magnitude = np.abs(np.asarray(coeffs))
    top = float(magnitude.max()) if magnitude.size else 0.0
    if top == 0.0:
        return np.zeros(magnitude.shape)
    relative = magnitude / top
    if scale == "linear":
        return relative
    floor = np.log10(clamp)
    return (np.log10(np.maximum(relative, clamp)) - floor) / -floor


def axis_metadata(matrix: TFMatrix, scale: str, method: Optional[str]) -> Dict[str, str]:
    meta = matrix.meta
    freqs = matrix.grid.freqs_hz
    t_end = meta.t0 + (meta.length - 1) / meta.sample_rate_hz
    description = (
        f"x: time {meta.t0:.6g}..{t_end:.6g} s ({meta.length} columns); "
        f"y: frequency {freqs[0]:.6g}..{freqs[-1]:.6g} Hz ({matrix.grid.K} rows, origin lower); "
        f"scale: {scale}" + (f" (clamp {Defaults.LOG_CLAMP:g} of max)" if scale == "log" else "")
    )
    return {
        "Title": f"tfsqueeze {method or 'tfr'}",
        "Description": description,
        "Software": "tfsqueeze",
    }


@handle_file_operations("render_heatmap")
def render_heatmap(matrix: TFMatrix, output_path: str, scale: str = Defaults.RENDER_SCALE,
                   cmap: str = Defaults.RENDER_CMAP, method: Optional[str] = None) -> StandardResponse:
    """Render |matrix| to output_path as PNG; data holds file_path, file_size and shape."""
    request_id = new_request_id()
    image = heatmap_values(matrix.coeffs, scale)
    check_colormap(cmap)
    metadata = axis_metadata(matrix, scale, method)

    def writer(handle):
        plt.imsave(handle, image, cmap=cmap, vmin=0.0, vmax=1.0, origin="lower",
                   format="png", metadata=metadata)

    file_size = atomic_write(output_path, writer)
    StandardLogger.log_file_operation("render_heatmap", request_id, output_path, file_size,
                                      shape=matrix.shape, scale=scale, cmap=cmap)
    return StandardResponse.success_response(
        data={"file_path": output_path, "file_size": file_size, "shape": list(matrix.shape)},
        request_id=request_id,
    )
