"""Projection of detail subbands onto the approximation subband.

Each detail plane ``D`` is replaced by ``s * LL`` with

    s = <LL, D>_F / <LL, LL>_F,      <A, B>_F = sum_ij A_ij B_ij = trace(A B^T)

which is the least-squares fit of ``D`` in the span of ``LL``.  Only ``LL``
and the three scalars are needed to rebuild the level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dwt2d import Subbands, dwt2d_level, idwt2d_level
from .errors import DegenerateProjection, ShapeMismatch
from .pixel_io import Image, check_plane, to_image, to_plane


@dataclass(frozen=True)
class PoacScalars:
    s_lh: float
    s_hl: float
    s_hh: float

    def __post_init__(self):
        for v in (self.s_lh, self.s_hl, self.s_hh):
            if not math.isfinite(v):
                raise ValueError(f"projection scalar must be finite, got {v}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.s_lh, self.s_hl, self.s_hh)


def frobenius_inner(a: np.ndarray, b: np.ndarray) -> float:
    """Single-pass ``sum(a * b)`` (numpy pairwise summation over the row-major product)."""
    return float(np.sum(a * b))


def projection_scalar(ll, detail) -> float:
    ll = check_plane(ll)
    detail = check_plane(detail)
    if ll.shape != detail.shape:
        raise ShapeMismatch(f"LL {ll.shape} and detail {detail.shape} differ in shape")
    energy = frobenius_inner(ll, ll)
    if energy == 0.0:
        raise DegenerateProjection("LL subband is all zero; projection undefined")
    return frobenius_inner(ll, detail) / energy


def poac_scalars(sb: Subbands) -> PoacScalars:
    return PoacScalars(
        projection_scalar(sb.ll, sb.lh),
        projection_scalar(sb.ll, sb.hl),
        projection_scalar(sb.ll, sb.hh),
    )


def poac_reconstruct_subbands(ll, s: PoacScalars, wavelet) -> Subbands:
    ll = check_plane(ll)
    return Subbands(ll, s.s_lh * ll, s.s_hl * ll, s.s_hh * ll, wavelet)


def poac_subbands(sb: Subbands) -> Subbands:
    """Replace every detail subband with its projection onto LL."""
    return poac_reconstruct_subbands(sb.ll, poac_scalars(sb), sb.wavelet)


def poac_denoise(image: Image, wavelet) -> Image:
    sb = dwt2d_level(to_plane(image), wavelet)
    return to_image(idwt2d_level(poac_subbands(sb)))
