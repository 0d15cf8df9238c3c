# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels. Bit-identical twins of ``poac._pykernels``."""

import numpy as np

from libc.math cimport cos, sin, log, sqrt, M_PI
from libc.stdint cimport uint8_t, uint32_t, uint64_t, int64_t

DEF DECODE_OK = 0
DEF DECODE_TRUNCATED = 1
DEF DECODE_OVERRUN = 2
DEF DECODE_INVALID = 3


def analysis_rows(const double[:, ::1] x, const double[::1] h, const double[::1] g):
    cdef Py_ssize_t rows = x.shape[0], n = x.shape[1], half = n // 2
    cdef Py_ssize_t taps = h.shape[0]
    cdef Py_ssize_t r, m, k
    cdef double a, d, v
    approx_arr = np.empty((rows, half))
    detail_arr = np.empty((rows, half))
    cdef double[:, ::1] approx = approx_arr
    cdef double[:, ::1] detail = detail_arr
    with nogil:
        for r in range(rows):
            for m in range(half):
                a = 0.0
                d = 0.0
                for k in range(taps):
                    v = x[r, (2 * m + k) % n]
                    a += h[k] * v
                    d += g[k] * v
                approx[r, m] = a
                detail[r, m] = d
    return approx_arr, detail_arr


def synthesis_rows(const double[:, ::1] approx, const double[:, ::1] detail,
                   const double[::1] h, const double[::1] g):
    cdef Py_ssize_t rows = approx.shape[0], half = approx.shape[1], n = 2 * half
    cdef Py_ssize_t taps = h.shape[0]
    cdef Py_ssize_t r, m, k
    out_arr = np.zeros((rows, n))
    cdef double[:, ::1] out = out_arr
    with nogil:
        for r in range(rows):
            for k in range(taps):
                for m in range(half):
                    out[r, (2 * m + k) % n] += h[k] * approx[r, m] + g[k] * detail[r, m]
    return out_arr


cdef inline uint64_t _splitmix_next(uint64_t* state) nogil:
    cdef uint64_t z
    state[0] += <uint64_t>0x9E3779B97F4A7C15ULL
    z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBULL
    return z ^ (z >> 31)


def gaussian_stream(uint64_t seed, Py_ssize_t count, double mean, double sigma):
    cdef uint64_t state = seed
    cdef uint64_t za, zb
    cdef double u1, u2, r, theta
    cdef double scale = 1.0 / 9007199254740992.0
    cdef double tau = 2.0 * M_PI
    cdef Py_ssize_t i = 0
    out_arr = np.empty(count)
    cdef double[::1] out = out_arr
    with nogil:
        while i < count:
            za = _splitmix_next(&state)
            zb = _splitmix_next(&state)
            u1 = 1.0 - <double>(za >> 11) * scale
            u2 = <double>(zb >> 11) * scale
            r = sqrt(-2.0 * log(u1))
            theta = tau * u2
            out[i] = mean + sigma * (r * cos(theta))
            if i + 1 < count:
                out[i + 1] = mean + sigma * (r * sin(theta))
            i += 2
    return out_arr


def pack_bits(symbols, codes, lengths):
    cdef const uint8_t[::1] sym = np.ascontiguousarray(symbols, dtype=np.uint8)
    cdef const uint32_t[::1] cd = np.ascontiguousarray(codes, dtype=np.uint32)
    cdef const uint8_t[::1] ln = np.ascontiguousarray(lengths, dtype=np.uint8)
    cdef Py_ssize_t n = sym.shape[0], i
    cdef int64_t total = 0
    for i in range(n):
        total += ln[sym[i]]
    buf_arr = np.zeros((total + 7) // 8, dtype=np.uint8)
    cdef uint8_t[::1] buf = buf_arr
    cdef int64_t pos = 0
    cdef int j, L
    cdef uint32_t c
    with nogil:
        for i in range(n):
            L = ln[sym[i]]
            c = cd[sym[i]]
            for j in range(L - 1, -1, -1):
                if (c >> j) & 1:
                    buf[pos >> 3] |= <uint8_t>(0x80 >> (pos & 7))
                pos += 1
    return buf_arr.tobytes(), int(total)


def unpack_symbols(payload, int64_t bit_count, Py_ssize_t count,
                   first_code, first_index, len_count, sorted_symbols):
    cdef const uint8_t[::1] data = np.frombuffer(payload, dtype=np.uint8) if len(payload) else np.zeros(1, dtype=np.uint8)
    cdef const int64_t[::1] fc = np.ascontiguousarray(first_code, dtype=np.int64)
    cdef const int64_t[::1] fi = np.ascontiguousarray(first_index, dtype=np.int64)
    cdef const int64_t[::1] lc = np.ascontiguousarray(len_count, dtype=np.int64)
    cdef const uint8_t[::1] ss = np.ascontiguousarray(sorted_symbols, dtype=np.uint8)
    out_arr = np.zeros(count, dtype=np.uint8)
    if len(payload) * 8 < bit_count:
        return out_arr, DECODE_TRUNCATED
    cdef uint8_t[::1] out = out_arr
    cdef int max_len = lc.shape[0] - 1
    cdef int64_t pos = 0, code, offset
    cdef int length
    cdef Py_ssize_t i
    cdef int status = DECODE_OK
    with nogil:
        for i in range(count):
            code = 0
            length = 0
            while True:
                if pos >= bit_count:
                    status = DECODE_TRUNCATED
                    break
                code = (code << 1) | ((data[pos >> 3] >> (7 - (pos & 7))) & 1)
                pos += 1
                length += 1
                offset = code - fc[length]
                if offset >= 0 and offset < lc[length]:
                    out[i] = ss[fi[length] + offset]
                    break
                if length >= max_len:
                    status = DECODE_INVALID
                    break
            if status != DECODE_OK:
                break
    if status == DECODE_OK and pos != bit_count:
        status = DECODE_OVERRUN
    return out_arr, status
