"""Image quality and compression metrics, plus coefficient histograms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch
from .pixel_io import MAX_VALUE, Image

INF = math.inf


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr: float
    cr: float | None = None
    pss: float | None = None
    max_i: int = MAX_VALUE


def _check_pair(a: Image, b: Image):
    if a.shape != b.shape:
        raise ShapeMismatch(f"image shapes differ: {a.shape} vs {b.shape}")


def mse(a: Image, b: Image) -> float:
    _check_pair(a, b)
    diff = a.pixels.astype(np.float64) - b.pixels.astype(np.float64)
    return float(np.mean(diff * diff))


def psnr_from_mse(err: float, max_i: int = MAX_VALUE) -> float:
    if err == 0:
        return INF
    return 10.0 * math.log10(max_i * max_i / err)


def psnr(a: Image, b: Image) -> float:
    """PSNR in dB; ``math.inf`` for identical images."""
    return psnr_from_mse(mse(a, b))


def compression_ratio(uncompressed_bytes: int, compressed_bytes: int) -> float:
    if uncompressed_bytes <= 0 or compressed_bytes <= 0:
        raise ValueError("sizes must be positive")
    return uncompressed_bytes / compressed_bytes


def percent_space_savings(cr: float) -> float:
    if cr <= 0:
        raise ValueError(f"compression ratio must be positive, got {cr}")
    return (1.0 - 1.0 / cr) * 100.0


def quality_report(original: Image, processed: Image, compressed_bytes: int | None = None) -> QualityReport:
    err = mse(original, processed)
    cr = pss = None
    if compressed_bytes is not None:
        cr = compression_ratio(original.pixels.size, compressed_bytes)
        pss = percent_space_savings(cr)
    return QualityReport(err, psnr_from_mse(err), cr, pss)


@dataclass(frozen=True, eq=False)
class HistogramData:
    bin_edges: np.ndarray
    counts: np.ndarray
    subband_label: str

    def zero_bin_count(self) -> int:
        """Count in the bin containing 0.0 (0 when 0 lies outside the range)."""
        idx = _bin_index(np.array([0.0]), self.bin_edges)[0]
        return int(self.counts[idx]) if idx >= 0 else 0


def _bin_index(values: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """Bin index per value; -1 when outside ``[edges[0], edges[-1]]``.

    Ascending edges give half-open bins ``[e_i, e_i+1)``; descending edges
    (produced by scaling by a negative factor) give ``(e_i+1, e_i]``.  The
    far end of the last bin is closed in both cases.
    """
    nbins = len(edges) - 1
    if edges[-1] >= edges[0]:
        idx = np.searchsorted(edges, values, side="right") - 1
        idx[values == edges[-1]] = nbins - 1
        outside = (values < edges[0]) | (values > edges[-1])
    else:
        rev = -edges
        idx = np.searchsorted(rev, -values, side="right") - 1
        idx[values == edges[-1]] = nbins - 1
        outside = (values > edges[0]) | (values < edges[-1])
    idx[outside] = -1
    return idx


def subband_histogram(plane, bins: int = 256, label: str = "", edges=None) -> HistogramData:
    """Uniform histogram over the plane's own ``[min, max]``.

    A constant plane gets unit-width bins centred on the value, so all mass
    lands in the middle bin.  Explicit ``edges`` (monotone, ascending or
    descending) override the default binning; values outside them are
    dropped.
    """
    values = np.asarray(plane, dtype=np.float64).ravel()
    if values.size == 0:
        raise ValueError("histogram of an empty plane")
    if edges is None:
        lo, hi = float(values.min()), float(values.max())
        if lo == hi:
            lo, hi = lo - 0.5, hi + 0.5
        edges = np.linspace(lo, hi, bins + 1)
    else:
        edges = np.asarray(edges, dtype=np.float64)
    idx = _bin_index(values, edges)
    counts = np.bincount(idx[idx >= 0], minlength=len(edges) - 1)
    return HistogramData(edges, counts, label)
