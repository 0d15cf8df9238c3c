"""Reference (numpy / pure-Python) implementations of the hot kernels.

Every function here has a twin in ``_kernels.pyx`` with an identical
signature.  The two must agree bit for bit: floating-point accumulation is
done in the same order (filter tap ``k`` outermost, ascending) and the
transcendental functions come from the same C math library.
"""

import math

import numpy as np

# Huffman decoder status codes, shared with the compiled kernels.
DECODE_OK = 0
DECODE_TRUNCATED = 1
DECODE_OVERRUN = 2
DECODE_INVALID = 3

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_TWO_POW_M53 = 1.0 / 9007199254740992.0


def analysis_rows(x, h, g):
    """Periodic analysis along the last axis of a C-contiguous 2-D array.

    ``approx[:, m] = sum_k h[k] * x[:, (2m + k) % n]``; same for ``detail``
    with ``g``.
    """
    rows, n = x.shape
    half = n // 2
    base = 2 * np.arange(half)
    approx = np.zeros((rows, half))
    detail = np.zeros((rows, half))
    for k in range(len(h)):
        col = x[:, (base + k) % n]
        approx += h[k] * col
        detail += g[k] * col
    return approx, detail


def synthesis_rows(approx, detail, h, g):
    """Adjoint of :func:`analysis_rows`; its exact inverse for orthonormal banks."""
    rows, half = approx.shape
    n = 2 * half
    base = 2 * np.arange(half)
    out = np.zeros((rows, n))
    for k in range(len(h)):
        # for fixed k the targets (2m + k) % n are distinct, so fancy-index += is safe
        out[:, (base + k) % n] += h[k] * approx + g[k] * detail
    return out


def splitmix64(state):
    """Advance a SplitMix64 state; return ``(new_state, output)``."""
    state = (state + _GOLDEN) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def gaussian_stream(seed, count, mean, sigma):
    """``count`` draws of N(mean, sigma^2): SplitMix64 uniforms + Box-Muller.

    Each pair of 53-bit uniforms ``(a, b)`` yields ``r*cos(2*pi*b)`` then
    ``r*sin(2*pi*b)`` with ``r = sqrt(-2 ln(1 - a))``.  An odd ``count``
    drops the final sine output.
    """
    out = np.empty(count)
    state = seed & _MASK64
    tau = 2.0 * math.pi
    i = 0
    while i < count:
        state, za = splitmix64(state)
        state, zb = splitmix64(state)
        u1 = 1.0 - (za >> 11) * _TWO_POW_M53
        u2 = (zb >> 11) * _TWO_POW_M53
        r = math.sqrt(-2.0 * math.log(u1))
        theta = tau * u2
        out[i] = mean + sigma * (r * math.cos(theta))
        if i + 1 < count:
            out[i + 1] = mean + sigma * (r * math.sin(theta))
        i += 2
    return out


def pack_bits(symbols, codes, lengths):
    """Concatenate canonical codes MSB-first; return ``(payload, bit_count)``."""
    symbols = np.asarray(symbols, dtype=np.intp)
    sym_len = lengths.astype(np.int64)[symbols]
    sym_code = codes.astype(np.uint64)[symbols]
    bit_count = int(sym_len.sum())
    starts = np.concatenate(([0], np.cumsum(sym_len)[:-1]))
    bits = np.zeros(bit_count, dtype=np.uint8)
    max_len = int(sym_len.max()) if len(sym_len) else 0
    for j in range(max_len):
        sel = sym_len > j
        shift = (sym_len[sel] - 1 - j).astype(np.uint64)
        bits[starts[sel] + j] = (sym_code[sel] >> shift) & np.uint64(1)
    return np.packbits(bits).tobytes(), bit_count


def unpack_symbols(payload, bit_count, count, first_code, first_index, len_count, sorted_symbols):
    """Decode ``count`` symbols from the first ``bit_count`` bits of ``payload``.

    Table arrays are indexed by code length (``0..32``).  Returns
    ``(symbols, status)``.
    """
    out = np.zeros(count, dtype=np.uint8)
    if len(payload) * 8 < bit_count:
        return out, DECODE_TRUNCATED
    first_code = [int(v) for v in first_code]
    first_index = [int(v) for v in first_index]
    len_count = [int(v) for v in len_count]
    max_len = len(len_count) - 1
    pos = 0
    for i in range(count):
        code = 0
        length = 0
        while True:
            if pos >= bit_count:
                return out, DECODE_TRUNCATED
            code = (code << 1) | ((payload[pos >> 3] >> (7 - (pos & 7))) & 1)
            pos += 1
            length += 1
            offset = code - first_code[length]
            if 0 <= offset < len_count[length]:
                out[i] = sorted_symbols[first_index[length] + offset]
                break
            if length >= max_len:
                return out, DECODE_INVALID
    if pos != bit_count:
        return out, DECODE_OVERRUN
    return out, DECODE_OK
