"""
Pydantic run configurations for the command line.
"""

import math
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from tfsqueeze.core.utils.constants import Defaults, ErrorMessages


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class FrameOptions(RunConfig):
    threads: Optional[int] = Field(default=None, ge=1)
    omega0: Optional[float] = Field(default=None, gt=0)
    sigma: Optional[float] = Field(default=None, gt=0)
    k_min: int = Field(default=Defaults.K_MIN, ge=1)
    k_max: Optional[int] = Field(default=None, ge=1)


class GenConfig(RunConfig):
    kind: Literal["dirac", "chirp", "pulses", "twomode"]
    out: str
    fs: float = Field(gt=0)
    length: int = Field(ge=Defaults.MIN_SIGNAL_LEN)
    t0: float = 0.0
    beta: List[float] = Field(default_factory=lambda: [0.0, 0.0, 0.0], min_length=3, max_length=3)
    band_hz: Optional[List[float]] = Field(default=None, min_length=2, max_length=2)
    amplitude: float = 1.0
    period_ms: float = Field(default=9.3, gt=0)
    n_pulses: Optional[int] = Field(default=None, ge=1)
    carrier_hz: float = Field(default=1060.0, gt=0)
    decay_per_s: float = Field(default=600.0, ge=0)
    missing: List[int] = Field(default_factory=list)
    snr_db: Optional[float] = None
    seed: int = 0


class TransformConfig(FrameOptions):
    input: str
    out: str
    method: Literal["mwt", "wtsst", "wtmsst", "rm"] = "mwt"
    upsilon: Optional[float] = Field(default=None, ge=0)
    upsilon_mode: Literal["relative", "absolute"] = "relative"
    iterations: int = Field(default=Defaults.ITERATIONS, ge=1)
    iter_mode: Literal["linear", "exponential", "lin", "exp"] = "linear"
    reconstruct: Optional[str] = None


class EntropyConfig(FrameOptions):
    input: str
    out: str
    alpha: float = Field(default=Defaults.RENYI_ALPHA, gt=0)
    sweep_snr: Optional[List[float]] = None
    trials: int = Field(default=Defaults.SWEEP_TRIALS, ge=1)
    seed: int = Defaults.SWEEP_SEED
    iterations: int = Field(default=Defaults.SWEEP_ITERATIONS, ge=1)
    upsilon: Optional[float] = Field(default=None, ge=0)

    @field_validator("alpha")
    @classmethod
    def alpha_not_one(cls, value: float) -> float:
        if value == 1:
            raise ValueError(ErrorMessages.BAD_ALPHA.format(alpha=value))
        return value


class TfesConfig(RunConfig):
    input: str
    out: str
    intervals_out: Optional[str] = None
    min_separation_ms: Optional[float] = Field(default=None, gt=0)
    peak_fraction: float = Field(default=Defaults.TFES_PEAK_FRACTION, gt=0, le=1)


class ReconErrorConfig(RunConfig):
    reference: str
    candidate: str
    out: Optional[str] = None


class RenderConfig(RunConfig):
    input: str
    out: str
    scale: Literal["linear", "log"] = Defaults.RENDER_SCALE
    cmap: str = Defaults.RENDER_CMAP

    @model_validator(mode="after")
    def png_output(self) -> "RenderConfig":
        if not self.out.lower().endswith(".png"):
            raise ValueError(f"Render output must be a .png file, got {self.out}")
        return self


def parse_sweep(text: str) -> List[float]:
    """
    SNR levels from 'a,b,c' or 'lo:hi[:step]' (inclusive). Without a step,
    lo:hi expands to five evenly spaced levels.

    Raises:
        ValueError: malformed text
    """
    text = text.strip()
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) == 2:
                lo, hi = parts
                levels = np.linspace(lo, hi, 5)
            elif len(parts) == 3 and parts[2] > 0:
                lo, hi, step = parts
                levels = np.arange(lo, hi + step * 0.5, step)
            else:
                raise ValueError(text)
            if hi < lo:
                raise ValueError(text)
            return [float(v) for v in levels]
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ValueError(ErrorMessages.BAD_SWEEP.format(value=text)) from None
    if not values or not all(math.isfinite(v) for v in values):
        raise ValueError(ErrorMessages.BAD_SWEEP.format(value=text))
    return values
