import struct
import sys
from pathlib import Path

import numpy as np
import pytest

from poac import errors
from poac.codec import (
    CodecKind,
    CompressedBlob,
    decode,
    poac_decode,
    poac_encode,
    quantize_uniform,
    threshold_decode,
    threshold_encode,
)
from poac.core import poac_scalars
from poac.dwt2d import dwt2d_level
from poac.huffman import huffman_decode
from poac.metrics import compression_ratio, psnr
from poac.pixel_io import Image, read_pgm, to_plane

from conftest import GOLDEN

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "scripts"))
from make_golden import golden_image  # noqa: E402


def test_quantize_constant():
    q = quantize_uniform(np.full((3, 3), -4.25))
    assert not q.codes.any() and q.step == 1.0 and q.minimum == -4.25
    np.testing.assert_array_equal(q.dequantize(), -4.25)


def test_quantize_endpoints():
    q = quantize_uniform(np.array([[0.0, 255.0]]))
    assert q.codes.tolist() == [[0, 255]] and q.step == 1.0 and q.minimum == 0.0


def test_quantize_error_bound(rng):
    for scale in (1e-3, 1.0, 500.0):
        p = rng.standard_normal((32, 32)) * scale
        q = quantize_uniform(p)
        assert np.max(np.abs(q.dequantize() - p)) <= q.step / 2 * (1 + 1e-9)


def _parse_header(raw):
    magic, version, kind, wavelet, rows, cols = struct.unpack_from("<4sBBBII", raw, 0)
    return magic, version, kind, wavelet, rows, cols


def test_layout_poac_by_hand():
    img = golden_image()
    raw = poac_encode(img, "db2").to_bytes()
    assert _parse_header(raw) == (b"POAC", 1, 1, 2, 8, 8)
    qmin, qstep, s_lh, s_hl, s_hh = struct.unpack_from("<5d", raw, 15)
    sb = dwt2d_level(to_plane(img), "db2")
    assert (s_lh, s_hl, s_hh) == poac_scalars(sb).as_tuple()
    assert qmin == sb.ll.min() and qstep == pytest.approx((sb.ll.max() - sb.ll.min()) / 255)
    lengths = np.frombuffer(raw, np.uint8, 256, 55)
    (bits,) = struct.unpack_from("<Q", raw, 311)
    payload = raw[319:]
    assert len(payload) == (bits + 7) // 8
    codes = huffman_decode(lengths, payload, bits, 16)
    assert codes.tolist() == quantize_uniform(sb.ll).codes.ravel().tolist()


def test_layout_threshold_by_hand():
    raw = threshold_encode(golden_image(), "db1", "hard").to_bytes()
    assert _parse_header(raw)[:4] == (b"POAC", 1, 3, 1)
    pairs = struct.unpack_from("<8d", raw, 15)
    assert all(step > 0 for step in pairs[1::2])
    (bits,) = struct.unpack_from("<Q", raw, 15 + 64 + 256)
    assert len(raw) == 15 + 64 + 256 + 8 + (bits + 7) // 8


@pytest.mark.parametrize(
    "name, make",
    [
        ("poac_db1.poac", lambda img: poac_encode(img, "db1")),
        ("poac_db2.poac", lambda img: poac_encode(img, "db2")),
        ("st_db1.poac", lambda img: threshold_encode(img, "db1", "soft")),
        ("ht_db4.poac", lambda img: threshold_encode(img, "db4", "hard")),
    ],
)
def test_golden_container(name, make):
    img = read_pgm((GOLDEN / "synthetic_8x8.pgm").read_bytes())
    assert img == golden_image()
    expected = (GOLDEN / name).read_bytes()
    assert make(img).to_bytes() == expected
    blob = CompressedBlob.from_bytes(expected)
    assert blob.to_bytes() == expected
    assert decode(expected).shape == (8, 8)


def test_round_trip_dimensions_and_determinism(camera):
    blob = poac_encode(camera, "db1")
    raw = blob.to_bytes()
    out = poac_decode(CompressedBlob.from_bytes(raw))
    assert out.shape == camera.shape
    assert poac_encode(camera, "db1").to_bytes() == raw
    # re-encoding the decoded image is deterministic too
    assert poac_encode(out, "db1").to_bytes() == poac_encode(out, "db1").to_bytes()


def test_poac_fixture_targets(camera):
    raw = poac_encode(camera, "db1").to_bytes()
    assert len(raw) < camera.pixels.size / 3
    assert 25.0 <= psnr(camera, decode(raw)) <= 38.0


def test_constant_image_compresses_hard():
    img = Image(np.full((256, 256), 200, np.uint8))
    raw = poac_encode(img, "db1").to_bytes()
    assert compression_ratio(img.pixels.size, len(raw)) > 100
    assert decode(raw) == img


def test_zero_image_degenerate():
    with pytest.raises(errors.DegenerateProjection):
        poac_encode(Image(np.zeros((8, 8), np.uint8)), "db1")


def test_odd_image_rejected():
    with pytest.raises(errors.OddDimension):
        poac_encode(Image(np.ones((7, 8), np.uint8)), "db1")
    with pytest.raises(errors.OddDimension):
        threshold_encode(Image(np.ones((8, 5), np.uint8)), "db1", "soft")


@pytest.mark.parametrize("mode", ["soft", "hard"])
def test_threshold_codec(camera, mode):
    blob = threshold_encode(camera, "db1", mode)
    assert blob.kind is CodecKind.for_mode(mode)
    raw = blob.to_bytes()
    out = threshold_decode(CompressedBlob.from_bytes(raw))
    assert out.shape == camera.shape
    assert len(raw) > len(poac_encode(camera, "db1").to_bytes())


def test_threshold_entropy_stage_lossless(camera):
    from poac.shrinkage import shrink_subbands

    blob = threshold_encode(camera, "db2", "hard")
    sb = shrink_subbands(dwt2d_level(to_plane(camera), "db2"), "hard")
    codes = blob.decode_symbols()
    expect = np.concatenate([quantize_uniform(p).codes.ravel() for p in (sb.ll, sb.lh, sb.hl, sb.hh)])
    np.testing.assert_array_equal(codes, expect)


def test_kind_dispatch(camera):
    with pytest.raises(errors.UnsupportedKind):
        poac_decode(threshold_encode(camera, "db1", "soft"))
    with pytest.raises(errors.UnsupportedKind):
        threshold_decode(poac_encode(camera, "db1"))


def _golden_raw():
    return bytearray((GOLDEN / "poac_db1.poac").read_bytes())


def test_decode_errors():
    raw = _golden_raw()
    raw[0] ^= 0xFF
    with pytest.raises(errors.BadMagic):
        CompressedBlob.from_bytes(raw)
    raw = _golden_raw()
    raw[4] = 9
    with pytest.raises(errors.BadVersion):
        CompressedBlob.from_bytes(raw)
    raw = _golden_raw()
    raw[5] = 7
    with pytest.raises(errors.UnsupportedKind):
        CompressedBlob.from_bytes(raw)
    with pytest.raises(errors.TruncatedPayload):
        CompressedBlob.from_bytes(_golden_raw()[:-1])
    with pytest.raises(errors.TruncatedPayload):
        CompressedBlob.from_bytes(_golden_raw()[:10])
    with pytest.raises(errors.DecodeError):
        CompressedBlob.from_bytes(bytes(_golden_raw()) + b"\x00")
    raw = _golden_raw()
    struct.pack_into("<I", raw, 7, 7)
    with pytest.raises(errors.DecodeError):
        CompressedBlob.from_bytes(raw)


def test_symbol_overrun_detected():
    raw = _golden_raw()
    # shrink the declared image: the payload now holds more symbols than 2x2 LL needs
    struct.pack_into("<II", raw, 7, 4, 4)
    with pytest.raises(errors.SymbolOverrun):
        decode(bytes(raw))


def test_cr_matches_byte_length(camera):
    raw = poac_encode(camera, "db4").to_bytes()
    assert compression_ratio(camera.rows * camera.cols, len(raw)) == camera.pixels.size / len(raw)
