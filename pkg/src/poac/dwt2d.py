"""One-level separable 2-D DWT with orthonormal Daubechies banks.

Conventions (fixed, so coefficient files are reproducible):

* periodic (circular) boundary extension;
* analysis taps indexed ``(2m + k) mod n`` with no extra phase shift;
* rows are filtered first, then columns;
* ``LH`` is lowpass along rows and highpass along columns (vertical
  detail), ``HL`` highpass along rows and lowpass along columns
  (horizontal detail), ``HH`` highpass both ways (diagonal detail).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import OddDimension, OddLength, ShapeMismatch
from .pixel_io import check_plane


class WaveletId(enum.IntEnum):
    DB1 = 1
    DB2 = 2
    DB4 = 4

    @classmethod
    def parse(cls, value) -> "WaveletId":
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            try:
                return cls[value.strip().upper()]
            except KeyError:
                pass
        else:
            try:
                return cls(int(value))
            except ValueError:
                pass
        raise ValueError(f"unknown wavelet {value!r} (expected db1, db2 or db4)")

    @property
    def label(self) -> str:
        return self.name.lower()


_SQRT3 = math.sqrt(3.0)
_DB2 = np.array([1 + _SQRT3, 3 + _SQRT3, 3 - _SQRT3, 1 - _SQRT3]) / (4 * math.sqrt(2.0))

# 8-tap Daubechies scaling filter (four vanishing moments)
_DB4 = np.array(
    [
        0.2303778133088964,
        0.7148465705529154,
        0.6308807679298587,
        -0.02798376941685985,
        -0.18703481171909309,
        0.030841381835560764,
        0.0328830116668852,
        -0.010597401785069032,
    ]
)

_LOWPASS = {
    WaveletId.DB1: np.array([1.0, 1.0]) / math.sqrt(2.0),
    WaveletId.DB2: _DB2,
    WaveletId.DB4: _DB4,
}


@dataclass(frozen=True)
class FilterBank:
    lowpass: np.ndarray
    highpass: np.ndarray

    @property
    def length(self) -> int:
        return len(self.lowpass)


def quadrature_mirror(h) -> np.ndarray:
    """Highpass partner ``g[k] = (-1)**k * h[L-1-k]``."""
    h = np.asarray(h, dtype=np.float64)
    signs = np.where(np.arange(len(h)) % 2 == 0, 1.0, -1.0)
    return signs * h[::-1]


def filter_bank(wavelet) -> FilterBank:
    h = _LOWPASS[WaveletId.parse(wavelet)].copy()
    h.flags.writeable = False
    g = quadrature_mirror(h)
    g.flags.writeable = False
    return FilterBank(h, g)


@dataclass(frozen=True, eq=False)
class Subbands:
    """The four coefficient planes of one decomposition level."""

    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray
    wavelet: WaveletId
    level: int = 1

    def __post_init__(self):
        if self.level != 1:
            raise ValueError(f"only level 1 is supported, got {self.level}")
        object.__setattr__(self, "wavelet", WaveletId.parse(self.wavelet))
        shape = None
        for name in ("ll", "lh", "hl", "hh"):
            plane = check_plane(getattr(self, name))
            object.__setattr__(self, name, plane)
            if shape is None:
                shape = plane.shape
            elif plane.shape != shape:
                raise ShapeMismatch(f"subband {name} has shape {plane.shape}, expected {shape}")

    @property
    def shape(self) -> tuple[int, int]:
        return self.ll.shape

    @property
    def parent_shape(self) -> tuple[int, int]:
        return 2 * self.ll.shape[0], 2 * self.ll.shape[1]

    def details(self) -> dict[str, np.ndarray]:
        return {"LH": self.lh, "HL": self.hl, "HH": self.hh}

    def planes(self) -> dict[str, np.ndarray]:
        return {"LL": self.ll, "LH": self.lh, "HL": self.hl, "HH": self.hh}

    def replace(self, **planes) -> "Subbands":
        fields = dict(ll=self.ll, lh=self.lh, hl=self.hl, hh=self.hh, wavelet=self.wavelet)
        fields.update(planes)
        return Subbands(**fields)


def _bank_arrays(fb: FilterBank):
    return (
        np.ascontiguousarray(fb.lowpass, dtype=np.float64),
        np.ascontiguousarray(fb.highpass, dtype=np.float64),
    )


def dwt1d(signal, fb: FilterBank):
    x = np.asarray(signal, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("dwt1d expects a 1-D signal")
    if len(x) == 0 or len(x) % 2:
        raise OddLength(f"signal length {len(x)} is not a positive even number")
    h, g = _bank_arrays(fb)
    a, d = kernels.analysis_rows(np.ascontiguousarray(x[None, :]), h, g)
    return a[0], d[0]


def idwt1d(approx, detail, fb: FilterBank):
    a = np.asarray(approx, dtype=np.float64)
    d = np.asarray(detail, dtype=np.float64)
    if a.ndim != 1 or a.shape != d.shape:
        raise ShapeMismatch(f"approx/detail lengths differ: {a.shape} vs {d.shape}")
    h, g = _bank_arrays(fb)
    return kernels.synthesis_rows(
        np.ascontiguousarray(a[None, :]), np.ascontiguousarray(d[None, :]), h, g
    )[0]


def _analyze_rows(x, h, g):
    return kernels.analysis_rows(np.ascontiguousarray(x), h, g)


def _analyze_cols(x, h, g):
    a, d = kernels.analysis_rows(np.ascontiguousarray(x.T), h, g)
    return np.ascontiguousarray(a.T), np.ascontiguousarray(d.T)


def dwt2d_level(plane, wavelet) -> Subbands:
    wavelet = WaveletId.parse(wavelet)
    x = check_plane(plane)
    rows, cols = x.shape
    if rows % 2 or cols % 2:
        raise OddDimension(f"plane dimensions {rows}x{cols} must both be even")
    h, g = _bank_arrays(filter_bank(wavelet))
    low, high = _analyze_rows(x, h, g)
    ll, lh = _analyze_cols(low, h, g)
    hl, hh = _analyze_cols(high, h, g)
    return Subbands(ll, lh, hl, hh, wavelet)


def idwt2d_level(sb: Subbands) -> np.ndarray:
    h, g = _bank_arrays(filter_bank(sb.wavelet))
    low = kernels.synthesis_rows(
        np.ascontiguousarray(sb.ll.T), np.ascontiguousarray(sb.lh.T), h, g
    ).T
    high = kernels.synthesis_rows(
        np.ascontiguousarray(sb.hl.T), np.ascontiguousarray(sb.hh.T), h, g
    ).T
    return kernels.synthesis_rows(np.ascontiguousarray(low), np.ascontiguousarray(high), h, g)
