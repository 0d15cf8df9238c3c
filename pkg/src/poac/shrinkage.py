"""MAD noise estimation, universal threshold and hard/soft shrinkage."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .dwt2d import Subbands, dwt2d_level, idwt2d_level
from .pixel_io import Image, to_image, to_plane

MAD_SCALE = 0.6745


class ThresholdMode(enum.Enum):
    HARD = "hard"
    SOFT = "soft"

    @classmethod
    def parse(cls, value) -> "ThresholdMode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown threshold mode {value!r} (expected hard or soft)") from None


@dataclass(frozen=True)
class ShrinkageParams:
    delta_mad: float
    lam: float
    n_coeffs: int
    mode: ThresholdMode


def mad_sigma(coeffs) -> float:
    """Robust noise std: ``median(|c|) / 0.6745``.

    Even counts use the mean of the two central order statistics.
    """
    c = np.asarray(coeffs, dtype=np.float64)
    if c.size == 0:
        raise ValueError("mad_sigma of an empty plane")
    return float(np.median(np.abs(c))) / MAD_SCALE


def universal_threshold(delta: float, n: int) -> float:
    """``delta * sqrt(2 ln n)`` (natural log)."""
    if n < 1:
        raise ValueError(f"coefficient count must be >= 1, got {n}")
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    return delta * math.sqrt(2.0 * math.log(n))


def hard_threshold(coeffs, lam: float) -> np.ndarray:
    if lam < 0:
        raise ValueError(f"threshold must be >= 0, got {lam}")
    c = np.asarray(coeffs, dtype=np.float64)
    return np.where(np.abs(c) <= lam, 0.0, c)


def soft_threshold(coeffs, lam: float) -> np.ndarray:
    # sign-preserving: the textbook rule, not a bare ``c - lam``
    if lam < 0:
        raise ValueError(f"threshold must be >= 0, got {lam}")
    c = np.asarray(coeffs, dtype=np.float64)
    return np.sign(c) * np.maximum(np.abs(c) - lam, 0.0)


def estimate(coeffs, mode) -> ShrinkageParams:
    c = np.asarray(coeffs)
    delta = mad_sigma(c)
    return ShrinkageParams(delta, universal_threshold(delta, c.size), c.size, ThresholdMode.parse(mode))


def apply(coeffs, params: ShrinkageParams) -> np.ndarray:
    if params.mode is ThresholdMode.HARD:
        return hard_threshold(coeffs, params.lam)
    return soft_threshold(coeffs, params.lam)


def shrink_subbands(sb: Subbands, mode) -> Subbands:
    """Threshold each detail subband with its own MAD estimate; LL is untouched."""
    mode = ThresholdMode.parse(mode)
    shrunk = {}
    for name in ("lh", "hl", "hh"):
        detail = getattr(sb, name)
        shrunk[name] = apply(detail, estimate(detail, mode))
    return sb.replace(**shrunk)


def shrink_denoise(image: Image, wavelet, mode) -> Image:
    sb = dwt2d_level(to_plane(image), wavelet)
    return to_image(idwt2d_level(shrink_subbands(sb, mode)))
