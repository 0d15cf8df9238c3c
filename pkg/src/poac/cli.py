"""``poac`` command line.

Exit codes: 0 success, 1 data or processing failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench
from .codec import CompressedBlob, decode, encode
from .dwt2d import WaveletId
from .errors import PoacError
from .metrics import quality_report
from .noise import add_gaussian
from .pixel_io import load_pgm, save_pgm

log = logging.getLogger("poac")


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed {text} is not a 64-bit unsigned integer")
    return value


def _sigma(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError("sigma must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, type=Path, help="input PGM (or .poac for decode)")
    common.add_argument("--wavelet", default="db1", choices=[w.label for w in WaveletId])
    common.add_argument("--sigma", type=_sigma, default=0.1, help="noise std on the [0,1] scale (default 0.1, i.e. variance 0.01)")
    common.add_argument("--mean", type=float, default=0.0, help="noise mean on the [0,1] scale")
    common.add_argument("--seed", type=_u64, default=42)
    common.add_argument("--mode", choices=["soft", "hard"], help="encode: use the thresholding baseline instead of POAC")
    common.add_argument("--out", type=Path, default=Path("out"), help="output directory")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="poac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("denoise", parents=[common], help="noisy + ST/HT/POAC denoised PGMs and table1.csv")
    sub.add_parser("compress", parents=[common], help="ST/HT/POAC blobs, decoded PGMs and table2.csv")
    sub.add_parser("hist", parents=[common], help="per-subband coefficient histograms (16 CSVs)")
    sub.add_parser("noise", parents=[common], help="add seeded Gaussian noise")
    sub.add_parser("encode", parents=[common], help="PGM -> .poac")
    sub.add_parser("decode", parents=[common], help=".poac -> PGM")
    metrics = sub.add_parser("metrics", parents=[common], help="MSE/PSNR between two PGMs")
    metrics.add_argument("--reference", required=True, type=Path, help="second PGM")
    metrics.add_argument("--blob", type=Path, help="compressed file whose size gives CR/PSS")
    return parser


def _config(args) -> bench.BenchConfig:
    return bench.BenchConfig(
        input_path=args.input,
        out_dir=args.out,
        wavelet=args.wavelet,
        noise_sigma=args.sigma,
        noise_mean=args.mean,
        seed=args.seed,
    )


def _print_table(title: str, per_metric: dict):
    print(title)
    print(bench.csv_text(["metric", *bench.METHODS], [[k] + [v[m] for m in bench.METHODS] for k, v in per_metric.items()]), end="")


def cmd_denoise(args):
    result = bench.run_denoise(_config(args))
    log.info("noisy PSNR %.4f dB", result.noisy_psnr)
    _print_table("original vs denoised", {"MSE": result.mse, "PSNR": result.psnr})


def cmd_compress(args):
    result = bench.run_compress(_config(args))
    _print_table("original vs decompressed", {"CR": result.cr, "PSS": result.pss, "MSE": result.mse, "PSNR": result.psnr})


def cmd_hist(args):
    config = _config(args)
    hists = bench.run_hist(config)
    print(f"wrote {len(hists)} histogram files to {config.out_dir}")


def cmd_noise(args):
    config = _config(args)
    noisy = add_gaussian(config.load(), config.noise)
    args.out.mkdir(parents=True, exist_ok=True)
    target = args.out / "noisy.pgm"
    save_pgm(noisy, target)
    print(target)


def cmd_encode(args):
    image = load_pgm(args.input)
    raw = encode(image, args.wavelet, args.mode).to_bytes()
    args.out.mkdir(parents=True, exist_ok=True)
    target = args.out / (args.input.stem + ".poac")
    target.write_bytes(raw)
    print(f"{target} {len(raw)} bytes, CR {bench.fmt(image.pixels.size / len(raw))}")


def cmd_decode(args):
    blob = CompressedBlob.from_bytes(args.input.read_bytes())
    image = decode(blob)
    args.out.mkdir(parents=True, exist_ok=True)
    target = args.out / (args.input.stem + ".pgm")
    save_pgm(image, target)
    print(target)


def cmd_metrics(args):
    a = load_pgm(args.input)
    b = load_pgm(args.reference)
    size = args.blob.stat().st_size if args.blob else None
    report = quality_report(a, b, size)
    rows = [["MSE", report.mse], ["PSNR", report.psnr]]
    if report.cr is not None:
        rows += [["CR", report.cr], ["PSS", report.pss]]
    print(bench.csv_text(["metric", "value"], rows), end="")


COMMANDS = {
    "denoise": cmd_denoise,
    "compress": cmd_compress,
    "hist": cmd_hist,
    "noise": cmd_noise,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "metrics": cmd_metrics,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        COMMANDS[args.command](args)
    except (PoacError, OSError, ValueError) as exc:
        print(f"poac {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
