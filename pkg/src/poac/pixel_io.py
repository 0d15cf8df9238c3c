"""8-bit grayscale rasters, binary PGM I/O and real-valued working planes.

An :class:`Image` holds ``uint8`` samples; a *plane* is simply a 2-D
``float64`` ndarray. Planes carry no extra metadata, so they are passed
around as bare arrays and validated with :func:`check_plane` where an API
boundary requires it.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    BadPgmMagic,
    MalformedHeader,
    MaxvalUnsupported,
    TruncatedImage,
    ZeroDimension,
)

BIT_DEPTH = 8
MAX_VALUE = (1 << BIT_DEPTH) - 1

_WHITESPACE = b" \t\r\n\v\f"


@dataclass(frozen=True, eq=False)
class Image:
    """Row-major 8-bit grayscale image."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 2:
            raise ValueError(f"image must be 2-D, got shape {px.shape}")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise ZeroDimension(f"zero dimension in shape {px.shape}")
        if px.dtype != np.uint8:
            if not np.issubdtype(px.dtype, np.integer):
                raise TypeError(f"image samples must be integers, got {px.dtype}")
            if px.min() < 0 or px.max() > MAX_VALUE:
                raise ValueError("image samples outside [0, 255]")
            px = px.astype(np.uint8)
        px = np.ascontiguousarray(px)
        px.flags.writeable = False
        object.__setattr__(self, "pixels", px)

    @property
    def rows(self) -> int:
        return self.pixels.shape[0]

    @property
    def cols(self) -> int:
        return self.pixels.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape

    @property
    def bit_depth(self) -> int:
        return BIT_DEPTH

    @property
    def max_value(self) -> int:
        return MAX_VALUE

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.pixels, other.pixels)

    def __repr__(self):
        return f"Image({self.rows}x{self.cols})"


def check_plane(values) -> np.ndarray:
    """Return *values* as a finite 2-D float64 array or raise ``ValueError``."""
    plane = np.asarray(values, dtype=np.float64)
    if plane.ndim != 2 or plane.size == 0:
        raise ValueError(f"plane must be a non-empty 2-D array, got shape {plane.shape}")
    if not np.all(np.isfinite(plane)):
        raise ValueError("plane contains NaN or Inf")
    return plane


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        c = data[pos]
        if c in _WHITESPACE:
            pos += 1
        elif c == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    if start == pos:
        raise MalformedHeader("unexpected end of PGM header")
    return data[start:pos], pos


def _parse_int(token: bytes, what: str) -> int:
    if not token.isdigit():
        raise MalformedHeader(f"invalid {what} {token!r}")
    return int(token)


def read_pgm(data: bytes) -> Image:
    """Parse a binary ``P5`` PGM with maxval 255."""
    data = bytes(data)
    if data[:2] != b"P5":
        raise BadPgmMagic(f"expected P5 magic, got {data[:2]!r}")
    pos = 2
    if pos >= len(data) or (data[pos] not in _WHITESPACE and data[pos] != ord("#")):
        raise BadPgmMagic("magic must be followed by whitespace")
    token, pos = _next_token(data, pos)
    cols = _parse_int(token, "width")
    token, pos = _next_token(data, pos)
    rows = _parse_int(token, "height")
    token, pos = _next_token(data, pos)
    maxval = _parse_int(token, "maxval")
    if maxval != MAX_VALUE:
        raise MaxvalUnsupported(f"maxval {maxval} not supported (only 255)")
    if rows == 0 or cols == 0:
        raise ZeroDimension(f"zero dimension {cols}x{rows}")
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise TruncatedImage("missing whitespace after maxval")
    pos += 1
    need = rows * cols
    raster = data[pos : pos + need]
    if len(raster) < need:
        raise TruncatedImage(f"expected {need} sample bytes, found {len(raster)}")
    pixels = np.frombuffer(raster, dtype=np.uint8).reshape(rows, cols)
    return Image(pixels.copy())


def write_pgm(image: Image) -> bytes:
    header = f"P5\n{image.cols} {image.rows}\n{MAX_VALUE}\n".encode("ascii")
    return header + image.pixels.tobytes()


def load_pgm(path) -> Image:
    return read_pgm(Path(path).read_bytes())


def save_pgm(image: Image, path) -> None:
    Path(path).write_bytes(write_pgm(image))


def to_plane(image: Image) -> np.ndarray:
    return image.pixels.astype(np.float64)


def round_half_away(values: np.ndarray) -> np.ndarray:
    """Round to nearest integer, ties away from zero (exact, no ``x + 0.5`` trick)."""
    values = np.asarray(values, dtype=np.float64)
    whole = np.trunc(values)
    frac = values - whole
    return whole + np.where(np.abs(frac) >= 0.5, np.sign(values), 0.0)


def to_image(plane) -> Image:
    """Quantize a plane to 8 bits: round half away from zero, then clamp."""
    plane = check_plane(plane)
    return Image(np.clip(round_half_away(plane), 0, MAX_VALUE).astype(np.uint8))
