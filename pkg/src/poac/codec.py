"""``.poac`` container: lossy coding of one DWT level.

Byte layout (all integers little-endian, reals IEEE-754 binary64)::

    offset  size  field
    0       4     magic b"POAC"
    4       1     version (1)
    5       1     codec kind: 1 = POAC, 2 = soft threshold, 3 = hard threshold
    6       1     wavelet: 1, 2 or 4 (db1 / db2 / db4)
    7       4     rows   (u32, original image)
    11      4     cols   (u32)
    15      ...   kind-specific reals:
                    POAC:   quant_min, quant_step (LL), s_lh, s_hl, s_hh
                    ST/HT:  (quant_min, quant_step) for LL, LH, HL, HH
    ...     256   canonical Huffman code lengths, one byte per symbol
    ...     8     payload bit count (u64)
    ...     ...   payload, MSB-first, zero-padded to a byte boundary

POAC blobs carry only the quantized LL codes; threshold blobs carry all four
subbands' codes concatenated in LL, LH, HL, HH order under one Huffman table.

When the code table holds a single symbol the payload is elided (bit count
0): every code is that symbol, so a constant plane costs only the header.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass

import numpy as np

from .core import PoacScalars, poac_reconstruct_subbands, poac_scalars
from .dwt2d import Subbands, WaveletId, dwt2d_level, idwt2d_level
from .errors import (
    BadMagic,
    BadVersion,
    DecodeError,
    OddDimension,
    TruncatedPayload,
    UnsupportedKind,
)
from .huffman import ALPHABET, huffman_decode, huffman_encode, validate_lengths
from .pixel_io import Image, round_half_away, to_image, to_plane
from .shrinkage import ThresholdMode, shrink_subbands

MAGIC = b"POAC"
VERSION = 1

_HEADER = struct.Struct("<4sBBBII")
_POAC_REALS = struct.Struct("<5d")
_THRESHOLD_REALS = struct.Struct("<8d")
_BIT_COUNT = struct.Struct("<Q")


class CodecKind(enum.IntEnum):
    POAC = 1
    ST = 2
    HT = 3

    @classmethod
    def for_mode(cls, mode) -> "CodecKind":
        return cls.HT if ThresholdMode.parse(mode) is ThresholdMode.HARD else cls.ST


@dataclass(frozen=True, eq=False)
class QuantizedPlane:
    codes: np.ndarray  # uint8, 2-D
    minimum: float
    step: float

    def dequantize(self) -> np.ndarray:
        return self.minimum + self.codes.astype(np.float64) * self.step


def quantize_uniform(plane) -> QuantizedPlane:
    """256-level uniform quantizer over the plane's own range."""
    values = np.asarray(plane, dtype=np.float64)
    lo = float(values.min())
    hi = float(values.max())
    if hi == lo:
        return QuantizedPlane(np.zeros(values.shape, dtype=np.uint8), lo, 1.0)
    step = (hi - lo) / 255.0
    codes = np.clip(round_half_away((values - lo) / step), 0, 255).astype(np.uint8)
    return QuantizedPlane(codes, lo, step)


@dataclass(frozen=True, eq=False)
class CompressedBlob:
    kind: CodecKind
    wavelet: WaveletId
    rows: int
    cols: int
    quant: tuple  # ((min, step), ...) one pair per stored plane
    scalars: PoacScalars | None
    code_lengths: np.ndarray
    payload_bit_count: int
    payload: bytes
    version: int = VERSION

    @property
    def plane_shape(self) -> tuple[int, int]:
        return self.rows // 2, self.cols // 2

    @property
    def symbol_count(self) -> int:
        r, c = self.plane_shape
        return r * c * len(self.quant)

    def to_bytes(self) -> bytes:
        parts = [_HEADER.pack(MAGIC, self.version, int(self.kind), int(self.wavelet), self.rows, self.cols)]
        if self.kind is CodecKind.POAC:
            (lo, step), = self.quant
            parts.append(_POAC_REALS.pack(lo, step, *self.scalars.as_tuple()))
        else:
            parts.append(_THRESHOLD_REALS.pack(*(v for pair in self.quant for v in pair)))
        parts.append(np.asarray(self.code_lengths, dtype=np.uint8).tobytes())
        parts.append(_BIT_COUNT.pack(self.payload_bit_count))
        parts.append(self.payload)
        return b"".join(parts)

    def __len__(self) -> int:
        return len(self.to_bytes())

    @classmethod
    def from_bytes(cls, data: bytes) -> "CompressedBlob":
        data = bytes(data)
        if len(data) < _HEADER.size:
            raise TruncatedPayload("blob shorter than its fixed header")
        magic, version, kind, wavelet, rows, cols = _HEADER.unpack_from(data, 0)
        if magic != MAGIC:
            raise BadMagic(f"bad magic {magic!r}")
        if version != VERSION:
            raise BadVersion(f"unsupported container version {version}")
        try:
            kind = CodecKind(kind)
        except ValueError:
            raise UnsupportedKind(f"unknown codec kind {kind}") from None
        try:
            wavelet = WaveletId(wavelet)
        except ValueError:
            raise DecodeError(f"unknown wavelet id {wavelet}") from None
        if rows == 0 or cols == 0 or rows % 2 or cols % 2:
            raise DecodeError(f"invalid image dimensions {rows}x{cols}")
        pos = _HEADER.size
        reals = _POAC_REALS if kind is CodecKind.POAC else _THRESHOLD_REALS
        fixed_end = pos + reals.size + ALPHABET + _BIT_COUNT.size
        if len(data) < fixed_end:
            raise TruncatedPayload("blob shorter than its fixed header")
        values = reals.unpack_from(data, pos)
        pos += reals.size
        if kind is CodecKind.POAC:
            quant = ((values[0], values[1]),)
            scalars = PoacScalars(*values[2:])
        else:
            quant = tuple(zip(values[0::2], values[1::2]))
            scalars = None
        for _, step in quant:
            if not step > 0:
                raise DecodeError(f"quantizer step must be positive, got {step}")
        lengths = np.frombuffer(data, dtype=np.uint8, count=ALPHABET, offset=pos).copy()
        validate_lengths(lengths)
        pos += ALPHABET
        (bit_count,) = _BIT_COUNT.unpack_from(data, pos)
        pos += _BIT_COUNT.size
        payload = data[pos:]
        need = (bit_count + 7) // 8
        if len(payload) < need:
            raise TruncatedPayload(f"payload has {len(payload)} bytes, header promises {need}")
        if len(payload) > need:
            raise DecodeError(f"{len(payload) - need} trailing bytes after payload")
        return cls(kind, wavelet, rows, cols, quant, scalars, lengths, bit_count, payload, version)

    def decode_symbols(self) -> np.ndarray:
        present = np.flatnonzero(self.code_lengths)
        if len(present) == 1 and self.payload_bit_count == 0:
            return np.full(self.symbol_count, present[0], dtype=np.uint8)
        return huffman_decode(self.code_lengths, self.payload, self.payload_bit_count, self.symbol_count)

    def decode_planes(self) -> list[np.ndarray]:
        """Entropy-decode and dequantize every stored plane."""
        symbols = self.decode_symbols()
        shape = self.plane_shape
        per_plane = shape[0] * shape[1]
        planes = []
        for i, (lo, step) in enumerate(self.quant):
            codes = symbols[i * per_plane : (i + 1) * per_plane].reshape(shape)
            planes.append(QuantizedPlane(codes, lo, step).dequantize())
        return planes


def _entropy_code(symbols: np.ndarray):
    lengths, payload, bit_count = huffman_encode(symbols)
    if np.count_nonzero(lengths) == 1:
        return lengths, b"", 0
    return lengths, payload, bit_count


def _check_even(image: Image):
    if image.rows % 2 or image.cols % 2:
        raise OddDimension(f"image dimensions {image.rows}x{image.cols} must both be even")


def poac_encode(image: Image, wavelet) -> CompressedBlob:
    wavelet = WaveletId.parse(wavelet)
    _check_even(image)
    sb = dwt2d_level(to_plane(image), wavelet)
    scalars = poac_scalars(sb)
    q = quantize_uniform(sb.ll)
    lengths, payload, bit_count = _entropy_code(q.codes)
    return CompressedBlob(
        CodecKind.POAC, wavelet, image.rows, image.cols, ((q.minimum, q.step),),
        scalars, lengths, bit_count, payload,
    )


def poac_decode(blob: CompressedBlob) -> Image:
    if blob.kind is not CodecKind.POAC:
        raise UnsupportedKind(f"poac_decode cannot handle a {blob.kind.name} blob")
    (ll,) = blob.decode_planes()
    return to_image(idwt2d_level(poac_reconstruct_subbands(ll, blob.scalars, blob.wavelet)))


def threshold_encode(image: Image, wavelet, mode) -> CompressedBlob:
    wavelet = WaveletId.parse(wavelet)
    _check_even(image)
    sb = shrink_subbands(dwt2d_level(to_plane(image), wavelet), mode)
    quantized = [quantize_uniform(p) for p in (sb.ll, sb.lh, sb.hl, sb.hh)]
    symbols = np.concatenate([q.codes.ravel() for q in quantized])
    lengths, payload, bit_count = _entropy_code(symbols)
    return CompressedBlob(
        CodecKind.for_mode(mode), wavelet, image.rows, image.cols,
        tuple((q.minimum, q.step) for q in quantized), None, lengths, bit_count, payload,
    )


def threshold_decode(blob: CompressedBlob) -> Image:
    if blob.kind is CodecKind.POAC:
        raise UnsupportedKind("threshold_decode cannot handle a POAC blob")
    ll, lh, hl, hh = blob.decode_planes()
    return to_image(idwt2d_level(Subbands(ll, lh, hl, hh, blob.wavelet)))


def encode(image: Image, wavelet, mode=None) -> CompressedBlob:
    """POAC when ``mode`` is None, otherwise the thresholding baseline."""
    if mode is None:
        return poac_encode(image, wavelet)
    return threshold_encode(image, wavelet, mode)


def decode(blob) -> Image:
    if isinstance(blob, (bytes, bytearray, memoryview)):
        blob = CompressedBlob.from_bytes(blob)
    if blob.kind is CodecKind.POAC:
        return poac_decode(blob)
    return threshold_decode(blob)
