"""End-to-end experiment pipelines behind the ``denoise``, ``compress`` and
``hist`` subcommands.

Each ``run_*`` function writes its artifacts into ``config.out_dir`` and
returns the computed numbers so callers (and tests) need not re-read CSVs.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

from .codec import CompressedBlob, decode, poac_encode, threshold_encode
from .core import poac_denoise, poac_scalars
from .dwt2d import WaveletId, dwt2d_level
from .errors import OddDimension
from .metrics import mse, percent_space_savings, compression_ratio, psnr_from_mse, subband_histogram
from .noise import NoiseParams, add_gaussian
from .pixel_io import Image, load_pgm, save_pgm, to_plane
from .shrinkage import shrink_denoise, shrink_subbands

METHODS = ("ST", "HT", "POAC")
SUBBANDS = ("LL", "LH", "HL", "HH")
HIST_STATES = ("pre", "st", "ht", "poac")


@dataclass
class BenchConfig:
    input_path: Path
    out_dir: Path = Path("out")
    wavelet: WaveletId = WaveletId.DB1
    noise_sigma: float = 0.1
    noise_mean: float = 0.0
    seed: int = 42
    bins: int = 256

    def __post_init__(self):
        self.input_path = Path(self.input_path)
        self.out_dir = Path(self.out_dir)
        self.wavelet = WaveletId.parse(self.wavelet)

    @property
    def noise(self) -> NoiseParams:
        return NoiseParams(self.noise_mean, self.noise_sigma, self.seed)

    def load(self) -> Image:
        image = load_pgm(self.input_path)
        if image.rows % 2 or image.cols % 2:
            raise OddDimension(f"{self.input_path}: dimensions {image.rows}x{image.cols} must be even")
        return image


def fmt(value: float) -> str:
    """Six significant digits; infinities as ``inf``."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.6g}"


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([c if isinstance(c, str) else fmt(c) for c in row])
    return buf.getvalue()


def _write(path: Path, text: str):
    path.write_bytes(text.encode("ascii"))


@dataclass
class DenoiseResult:
    noisy: Image
    outputs: dict  # method -> Image
    mse: dict = field(default_factory=dict)
    psnr: dict = field(default_factory=dict)
    noisy_psnr: float = 0.0


def denoise_all(clean: Image, config: BenchConfig) -> DenoiseResult:
    noisy = add_gaussian(clean, config.noise)
    outputs = {
        "ST": shrink_denoise(noisy, config.wavelet, "soft"),
        "HT": shrink_denoise(noisy, config.wavelet, "hard"),
        "POAC": poac_denoise(noisy, config.wavelet),
    }
    result = DenoiseResult(noisy, outputs, noisy_psnr=psnr_from_mse(mse(clean, noisy)))
    for name, img in outputs.items():
        result.mse[name] = mse(clean, img)
        result.psnr[name] = psnr_from_mse(result.mse[name])
    return result


def run_denoise(config: BenchConfig) -> DenoiseResult:
    clean = config.load()
    result = denoise_all(clean, config)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    save_pgm(result.noisy, config.out_dir / "noisy.pgm")
    for name, img in result.outputs.items():
        save_pgm(img, config.out_dir / f"{name.lower()}.pgm")
    rows = [
        ["MSE"] + [result.mse[m] for m in METHODS],
        ["PSNR"] + [result.psnr[m] for m in METHODS],
    ]
    _write(config.out_dir / "table1.csv", csv_text(["metric", *METHODS], rows))
    return result


@dataclass
class CompressResult:
    blobs: dict  # method -> bytes
    decoded: dict  # method -> Image
    cr: dict = field(default_factory=dict)
    pss: dict = field(default_factory=dict)
    mse: dict = field(default_factory=dict)
    psnr: dict = field(default_factory=dict)


def compress_all(clean: Image, wavelet) -> CompressResult:
    blobs = {
        "ST": threshold_encode(clean, wavelet, "soft").to_bytes(),
        "HT": threshold_encode(clean, wavelet, "hard").to_bytes(),
        "POAC": poac_encode(clean, wavelet).to_bytes(),
    }
    result = CompressResult(blobs, {name: decode(raw) for name, raw in blobs.items()})
    for name, raw in blobs.items():
        result.cr[name] = compression_ratio(clean.pixels.size, len(raw))
        result.pss[name] = percent_space_savings(result.cr[name])
        result.mse[name] = mse(clean, result.decoded[name])
        result.psnr[name] = psnr_from_mse(result.mse[name])
    return result


def run_compress(config: BenchConfig) -> CompressResult:
    clean = config.load()
    result = compress_all(clean, config.wavelet)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    for name, raw in result.blobs.items():
        (config.out_dir / f"{name.lower()}.poac").write_bytes(raw)
        save_pgm(result.decoded[name], config.out_dir / f"decoded_{name.lower()}.pgm")
    rows = [
        [metric] + [getattr(result, metric.lower())[m] for m in METHODS]
        for metric in ("CR", "PSS", "MSE", "PSNR")
    ]
    _write(config.out_dir / "table2.csv", csv_text(["metric", *METHODS], rows))
    return result


def subband_states(noisy: Image, wavelet) -> dict:
    """Coefficient planes per state: before thresholding, after ST, HT and POAC."""
    sb = dwt2d_level(to_plane(noisy), wavelet)
    return {
        "pre": sb,
        "st": shrink_subbands(sb, "soft"),
        "ht": shrink_subbands(sb, "hard"),
        "poac": sb,  # details are rebuilt below from LL
    }


def histograms(noisy: Image, wavelet, bins: int = 256) -> dict:
    """``{(state, subband): HistogramData}`` for all 16 combinations.

    POAC detail planes are ``s * LL`` exactly, so they are binned against
    LL's edges scaled by the same ``s``; with ``s != 0`` the counts then
    reproduce LL's histogram.
    """
    states = subband_states(noisy, wavelet)
    sb = states["pre"]
    scalars = poac_scalars(sb)
    out = {}
    for state in ("pre", "st", "ht"):
        for name, plane in states[state].planes().items():
            out[state, name] = subband_histogram(plane, bins, label=name)
    ll_hist = subband_histogram(sb.ll, bins, label="LL")
    out["poac", "LL"] = ll_hist
    for name, s in zip(("LH", "HL", "HH"), scalars.as_tuple()):
        detail = s * sb.ll
        if s == 0.0:
            out["poac", name] = subband_histogram(detail, bins, label=name)
        else:
            out["poac", name] = subband_histogram(detail, label=name, edges=s * ll_hist.bin_edges)
    return out


def run_hist(config: BenchConfig) -> dict:
    clean = config.load()
    noisy = add_gaussian(clean, config.noise)
    hists = histograms(noisy, config.wavelet, config.bins)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    for (state, name), h in hists.items():
        rows = [[h.bin_edges[i], h.bin_edges[i + 1], str(int(c))] for i, c in enumerate(h.counts)]
        _write(config.out_dir / f"hist_{state}_{name}.csv", csv_text(["bin_lo", "bin_hi", "count"], rows))
    return hists


def read_blob(path) -> CompressedBlob:
    return CompressedBlob.from_bytes(Path(path).read_bytes())
