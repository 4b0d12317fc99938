"""
Time-frequency models - coefficient matrices, thresholds, group-delay maps,
squeezing results and metric summaries.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

import numpy as np

from tfsqueeze.core.infrastructure.frameworks.errors import ArgumentError, DimensionError, RangeError
from tfsqueeze.core.models.frame import ScaleGrid, WindowWeight
from tfsqueeze.core.utils.constants import Defaults, ErrorMessages


@dataclass(frozen=True)
class SignalMeta:
    length: int
    sample_rate_hz: float
    t0: float = 0.0


@dataclass(frozen=True)
class TFMatrix:
    """
    K x L matrix, row k = scale / frequency bin, column n = time bin.

    weight records which window produced the coefficients; squeezed and
    reassigned matrices use weight=None.
    """
    coeffs: np.ndarray
    grid: ScaleGrid
    meta: SignalMeta
    weight: Optional[WindowWeight] = WindowWeight.PLAIN

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs).view()
        expected = (self.grid.K, self.meta.length)
        if coeffs.shape != expected:
            raise DimensionError(ErrorMessages.SHAPE_MISMATCH.format(left=coeffs.shape, right=expected))
        if self.grid.length != self.meta.length:
            raise DimensionError(ErrorMessages.GRID_MISMATCH.format(
                detail=f"grid L={self.grid.length}, signal L={self.meta.length}"))
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def shape(self):
        return self.coeffs.shape

    def magnitude(self) -> np.ndarray:
        return np.abs(self.coeffs)

    def same_frame(self, other: 'TFMatrix') -> bool:
        return (
            self.shape == other.shape
            and self.meta == other.meta
            and self.grid.k_min == other.grid.k_min
            and np.array_equal(self.grid.scales, other.grid.scales)
        )


class ThresholdMode(str, Enum):
    RELATIVE = "relative"
    ABSOLUTE = "absolute"


@dataclass(frozen=True)
class ThresholdConfig:
    """Hard threshold on |W|: relative to the global max, or absolute."""
    upsilon: float = Defaults.UPSILON
    mode: ThresholdMode = ThresholdMode.RELATIVE

    def __post_init__(self):
        object.__setattr__(self, 'mode', ThresholdMode(self.mode))
        if self.mode is ThresholdMode.RELATIVE and not (0.0 < self.upsilon < 1.0):
            raise RangeError(ErrorMessages.BAD_UPSILON.format(upsilon=self.upsilon))
        if self.mode is ThresholdMode.ABSOLUTE and not self.upsilon >= 0.0:
            raise RangeError(ErrorMessages.NEGATIVE_UPSILON.format(upsilon=self.upsilon))

    def resolve(self, magnitude: np.ndarray) -> float:
        if self.mode is ThresholdMode.RELATIVE:
            peak = float(np.max(magnitude)) if magnitude.size else 0.0
            return self.upsilon * peak
        return float(self.upsilon)


@dataclass(frozen=True)
class GDMap:
    """Group delays in sample-index units; NaN wherever mask is False."""
    delays: np.ndarray
    mask: np.ndarray

    def __post_init__(self):
        delays = np.array(self.delays, dtype=float, copy=True)
        mask = np.array(self.mask, dtype=bool, copy=True)
        if delays.shape != mask.shape:
            raise DimensionError(ErrorMessages.SHAPE_MISMATCH.format(left=delays.shape, right=mask.shape))
        delays[~mask] = np.nan
        if not np.all(np.isfinite(delays[mask])):
            raise DimensionError("GD map carries non-finite delays on valid cells")
        delays.setflags(write=False)
        mask.setflags(write=False)
        object.__setattr__(self, 'delays', delays)
        object.__setattr__(self, 'mask', mask)

    @property
    def shape(self):
        return self.delays.shape

    def target_bins(self) -> np.ndarray:
        """Rounded target columns (half away from zero); -1 on invalid cells."""
        out = np.full(self.shape, -1, dtype=np.int64)
        out[self.mask] = round_half_away(self.delays[self.mask])
        return out


def round_half_away(values: np.ndarray) -> np.ndarray:
    """Round to the nearest integer, ties away from zero."""
    values = np.asarray(values, dtype=float)
    return (np.sign(values) * np.floor(np.abs(values) + 0.5)).astype(np.int64)


class IterationMode(str, Enum):
    LINEAR = "linear"
    EXPONENTIAL = "exponential"

    @classmethod
    def parse(cls, value) -> 'IterationMode':
        if isinstance(value, cls):
            return value
        aliases = {"linear": cls.LINEAR, "lin": cls.LINEAR, "exponential": cls.EXPONENTIAL, "exp": cls.EXPONENTIAL}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ArgumentError(ErrorMessages.UNKNOWN_ITER_MODE.format(mode=value)) from None


class SqueezeKind(str, Enum):
    WTSST = "wtsst"
    WTMSST = "wtmsst"
    RM = "rm"


@dataclass(frozen=True)
class SqueezeMethod:
    kind: SqueezeKind
    iterations: int = 1
    mode: IterationMode = IterationMode.LINEAR

    def label(self) -> str:
        if self.kind is SqueezeKind.WTMSST:
            return f"wtmsst(N={self.iterations},{self.mode.value})"
        return self.kind.value


@dataclass(frozen=True)
class SqueezeResult:
    """Squeezed (complex) or reassigned (real energy) matrix plus provenance."""
    S: TFMatrix
    method: SqueezeMethod
    threshold: ThresholdConfig

    @property
    def invertible(self) -> bool:
        return self.method.kind is not SqueezeKind.RM


@dataclass(frozen=True)
class TfesResult:
    spectrum_peak: np.ndarray
    best_row: int
    envelope: np.ndarray
    intervals_s: np.ndarray
    row_hz: np.ndarray
    envelope_freqs_hz: np.ndarray
    envelope_spectrum: np.ndarray
    fundamental_hz: float
    peak_times_s: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def best_row_hz(self) -> float:
        return float(self.row_hz[self.best_row])


@dataclass(frozen=True)
class IntervalSummary:
    intervals_s: np.ndarray
    median_s: float
    mean_regular_s: float
    outliers: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))


@dataclass(frozen=True)
class ReconstructionError:
    rel_l2: float
    snr_db: float

    def to_dict(self) -> Dict[str, float]:
        return {"rel_l2": self.rel_l2, "snr_db": self.snr_db}
