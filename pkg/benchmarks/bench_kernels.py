"""Time the compiled kernels against the numpy / pure-Python fallback.

    python benchmarks/bench_kernels.py [--size 256] [--repeat 5]

Both backends are imported directly, so the environment switch is not needed.
Outputs are checked for bit-identity before timing.
"""

import argparse
import timeit

import numpy as np

from poac import _pykernels
from poac.dwt2d import filter_bank
from poac.huffman import canonical_codes, code_lengths, decode_tables

try:
    from poac import _kernels as compiled
except ImportError:
    compiled = None


def cases(size, rng):
    x = rng.uniform(0, 255, (size, size))
    fb = filter_bank("db4")
    h, g = np.ascontiguousarray(fb.lowpass), np.ascontiguousarray(fb.highpass)
    a, d = _pykernels.analysis_rows(x, h, g)
    syms = rng.geometric(0.03, size * size // 4).clip(0, 255).astype(np.uint8)
    lengths = code_lengths(np.bincount(syms, minlength=256))
    codes = canonical_codes(lengths)
    payload, bits = _pykernels.pack_bits(syms, codes, lengths)
    tables = decode_tables(lengths)
    n = size * size
    return {
        f"analysis_rows db4 {size}x{size}": lambda k: k.analysis_rows(x, h, g),
        f"synthesis_rows db4 {size}x{size}": lambda k: k.synthesis_rows(a, d, h, g),
        f"gaussian_stream n={n}": lambda k: k.gaussian_stream(42, n, 0.0, 0.1),
        f"pack_bits n={len(syms)}": lambda k: k.pack_bits(syms, codes, lengths),
        f"unpack_symbols n={len(syms)}": lambda k: k.unpack_symbols(payload, bits, len(syms), *tables),
    }


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=256)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if compiled is None:
        raise SystemExit("compiled kernels not built; run `pip install -e . --no-build-isolation` first")

    rng = np.random.default_rng(0)
    print(f"{'kernel':<32} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in cases(args.size, rng).items():
        assert same(fn(_pykernels), fn(compiled)), f"{name}: backends disagree"
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        cy = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<32} {py:>10.3f} {cy:>10.3f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
