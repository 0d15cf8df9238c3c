"""Order-0 canonical Huffman coding over 8-bit symbols.

Only the 256 code lengths are stored; codes are rebuilt canonically
(symbols sorted by ``(length, symbol)``, consecutive code values).  Bits are
packed MSB-first and the last byte is zero-padded.
"""

from __future__ import annotations

import heapq

import numpy as np

from . import _backend
from ._backend import kernels
from .errors import InvalidCode, SymbolOverrun, TruncatedPayload

ALPHABET = 256
MAX_CODE_LENGTH = 32


def _depths(freqs: np.ndarray) -> np.ndarray:
    present = [int(s) for s in np.flatnonzero(freqs)]
    lengths = np.zeros(ALPHABET, dtype=np.int64)
    if len(present) == 1:
        lengths[present[0]] = 1
        return lengths
    # (weight, tiebreak, leaves); leaves tiebreak on symbol, internal nodes on creation order
    heap = [(int(freqs[s]), s, [s]) for s in present]
    heapq.heapify(heap)
    order = ALPHABET
    while len(heap) > 1:
        w1, _, a = heapq.heappop(heap)
        w2, _, b = heapq.heappop(heap)
        for s in a:
            lengths[s] += 1
        for s in b:
            lengths[s] += 1
        heapq.heappush(heap, (w1 + w2, order, a + b))
        order += 1
    return lengths


def code_lengths(freqs) -> np.ndarray:
    """Huffman code lengths (<= 32) for a 256-entry frequency table."""
    freqs = np.asarray(freqs, dtype=np.int64).copy()
    if freqs.shape != (ALPHABET,) or np.any(freqs < 0) or not np.any(freqs):
        raise ValueError("need 256 non-negative frequencies with at least one positive")
    lengths = _depths(freqs)
    while lengths.max() > MAX_CODE_LENGTH:
        # flatten the distribution until the tree is shallow enough
        nz = freqs > 0
        freqs[nz] = np.maximum(freqs[nz] // 2, 1)
        lengths = _depths(freqs)
    return lengths.astype(np.uint8)


def canonical_codes(lengths) -> np.ndarray:
    lengths = np.asarray(lengths, dtype=np.int64)
    codes = np.zeros(ALPHABET, dtype=np.uint32)
    code = 0
    prev = 0
    for length, sym in sorted((int(lengths[s]), s) for s in range(ALPHABET) if lengths[s]):
        code <<= length - prev
        codes[sym] = code
        code += 1
        prev = length
    return codes


def validate_lengths(lengths) -> np.ndarray:
    lengths = np.asarray(lengths)
    if lengths.shape != (ALPHABET,):
        raise InvalidCode(f"code-length table must have {ALPHABET} entries")
    lengths = lengths.astype(np.int64)
    if lengths.max(initial=0) > MAX_CODE_LENGTH or not np.any(lengths):
        raise InvalidCode("code lengths out of range or empty table")
    kraft = sum(2 ** (MAX_CODE_LENGTH - int(l)) for l in lengths if l)
    if kraft > 2**MAX_CODE_LENGTH:
        raise InvalidCode("code lengths violate the Kraft inequality")
    return lengths


def decode_tables(lengths):
    """Per-length ``(first_code, first_index, count)`` and the canonical symbol order."""
    lengths = validate_lengths(lengths)
    len_count = np.bincount(lengths, minlength=MAX_CODE_LENGTH + 1)
    len_count[0] = 0
    order = sorted((int(lengths[s]), s) for s in range(ALPHABET) if lengths[s])
    sorted_symbols = np.array([s for _, s in order], dtype=np.uint8)
    first_code = np.zeros(MAX_CODE_LENGTH + 1, dtype=np.int64)
    first_index = np.zeros(MAX_CODE_LENGTH + 1, dtype=np.int64)
    code = 0
    index = 0
    for length in range(1, MAX_CODE_LENGTH + 1):
        code <<= 1
        first_code[length] = code
        first_index[length] = index
        code += int(len_count[length])
        index += int(len_count[length])
    return first_code, first_index, len_count.astype(np.int64), sorted_symbols


def huffman_encode(symbols):
    """Return ``(code_lengths, payload, bit_count)`` for a non-empty uint8 stream."""
    symbols = np.ascontiguousarray(symbols, dtype=np.uint8).ravel()
    if symbols.size == 0:
        raise ValueError("cannot Huffman-encode an empty stream")
    lengths = code_lengths(np.bincount(symbols, minlength=ALPHABET))
    payload, bit_count = kernels.pack_bits(symbols, canonical_codes(lengths), lengths)
    return lengths, payload, bit_count


def huffman_decode(lengths, payload: bytes, bit_count: int, count: int) -> np.ndarray:
    """Decode exactly ``count`` symbols that must fill exactly ``bit_count`` bits."""
    tables = decode_tables(lengths)
    out, status = kernels.unpack_symbols(bytes(payload), int(bit_count), int(count), *tables)
    if status == _backend.DECODE_TRUNCATED:
        raise TruncatedPayload(f"bitstream ended before {count} symbols were decoded")
    if status == _backend.DECODE_OVERRUN:
        raise SymbolOverrun(f"bitstream holds more than the expected {count} symbols")
    if status == _backend.DECODE_INVALID:
        raise InvalidCode("bit pattern matches no code")
    return out
