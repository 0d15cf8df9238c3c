"""The compiled kernels and the numpy fallback must agree bit for bit."""

import os

import numpy as np
import pytest

from poac import _backend, _pykernels
from poac.dwt2d import WaveletId, filter_bank
from poac.huffman import canonical_codes, code_lengths, decode_tables

compiled = pytest.importorskip("poac._kernels")


def test_backend_selection():
    expected = "python" if os.environ.get("POAC_PURE_PYTHON", "") in ("1", "true", "yes") else "cython"
    assert _backend.BACKEND == expected


@pytest.mark.parametrize("wavelet", list(WaveletId))
@pytest.mark.parametrize("shape", [(1, 2), (3, 8), (16, 64), (5, 6)])
def test_filtering_identical(wavelet, shape, rng):
    fb = filter_bank(wavelet)
    h, g = np.ascontiguousarray(fb.lowpass), np.ascontiguousarray(fb.highpass)
    x = rng.standard_normal(shape) * 100
    a1, d1 = compiled.analysis_rows(x, h, g)
    a2, d2 = _pykernels.analysis_rows(x, h, g)
    assert np.array_equal(a1, a2) and np.array_equal(d1, d2)
    y1 = compiled.synthesis_rows(a1, d1, h, g)
    y2 = _pykernels.synthesis_rows(a2, d2, h, g)
    assert np.array_equal(y1, y2)


@pytest.mark.parametrize("seed", [0, 42, 2**64 - 1])
@pytest.mark.parametrize("count", [0, 1, 7, 1000, 65536])
def test_gaussian_identical(seed, count):
    a = compiled.gaussian_stream(seed, count, 0.1, 0.3)
    b = _pykernels.gaussian_stream(seed, count, 0.1, 0.3)
    assert np.array_equal(a, b)


def test_huffman_kernels_identical(rng):
    syms = rng.geometric(0.02, 20_000).clip(0, 255).astype(np.uint8)
    lengths = code_lengths(np.bincount(syms, minlength=256))
    codes = canonical_codes(lengths)
    p1, n1 = compiled.pack_bits(syms, codes, lengths)
    p2, n2 = _pykernels.pack_bits(syms, codes, lengths)
    assert (p1, n1) == (p2, n2)
    tables = decode_tables(lengths)
    s1, st1 = compiled.unpack_symbols(p1, n1, len(syms), *tables)
    s2, st2 = _pykernels.unpack_symbols(p1, n1, len(syms), *tables)
    assert st1 == st2 == _backend.DECODE_OK
    assert np.array_equal(s1, s2) and np.array_equal(s1, syms)
    for bits, count in [(n1 - 3, len(syms)), (n1, len(syms) - 1)]:
        assert compiled.unpack_symbols(p1, bits, count, *tables)[1] == _pykernels.unpack_symbols(p1, bits, count, *tables)[1]
