import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from poac import errors
from poac.pixel_io import Image, read_pgm, to_image, to_plane, write_pgm

from conftest import GOLDEN


def test_read_2x2():
    img = read_pgm(b"P5\n2 2\n255\n" + bytes([0x00, 0x7F, 0x80, 0xFF]))
    assert img.shape == (2, 2)
    assert img.pixels.ravel().tolist() == [0, 127, 128, 255]


def test_read_1x1():
    img = read_pgm(b"P5\n1 1\n255\n\x00")
    assert img.shape == (1, 1) and img.pixels[0, 0] == 0


def test_comments_between_tokens():
    data = b"P5\n# made by hand\n3 # width\n2\n# maxval next\n255\n" + bytes(range(6))
    img = read_pgm(data)
    assert img.shape == (2, 3)
    assert img.pixels.tolist() == [[0, 1, 2], [3, 4, 5]]


@pytest.mark.parametrize(
    "data, exc",
    [
        (b"P2\n1 1\n255\n\x00", errors.BadPgmMagic),
        (b"P6\n1 1\n255\n\x00\x00\x00", errors.BadPgmMagic),
        (b"P5\n1 1\n65535\n\x00\x00", errors.MaxvalUnsupported),
        (b"P5\n1 1\n15\n\x00", errors.MaxvalUnsupported),
        (b"P5\n2 2\n255\n\x00\x00\x00", errors.TruncatedImage),
        (b"P5\n0 2\n255\n", errors.ZeroDimension),
        (b"P5\n2 0\n255\n", errors.ZeroDimension),
        (b"P5\n2 x\n255\n\x00\x00", errors.MalformedHeader),
        (b"P5\n2 2", errors.MalformedHeader),
    ],
)
def test_parse_errors(data, exc):
    with pytest.raises(exc):
        read_pgm(data)


def test_parse_errors_are_distinct():
    kinds = {errors.BadPgmMagic, errors.MaxvalUnsupported, errors.TruncatedImage, errors.ZeroDimension}
    assert len(kinds) == 4
    for k in kinds:
        assert issubclass(k, errors.PgmError)


def test_write_1x1_canonical():
    assert write_pgm(Image(np.zeros((1, 1), np.uint8))) == b"P5\n1 1\n255\n\x00"


def test_write_puts_cols_first():
    out = write_pgm(Image(np.arange(6, dtype=np.uint8).reshape(2, 3)))
    assert out.startswith(b"P5\n3 2\n255\n")
    assert len(out) == len(b"P5\n3 2\n255\n") + 6


@pytest.mark.parametrize("name", ["tiny_2x2.pgm", "single_1x1.pgm", "rect_2x3.pgm", "ramp_8x16.pgm"])
def test_golden_round_trip(name):
    raw = (GOLDEN / name).read_bytes()
    assert write_pgm(read_pgm(raw)) == raw


@given(arrays(np.uint8, st.tuples(st.integers(1, 12), st.integers(1, 12))))
def test_round_trip_identity(px):
    img = Image(px)
    raw = write_pgm(img)
    header = f"P5\n{img.cols} {img.rows}\n255\n".encode()
    assert len(raw) == len(header) + img.rows * img.cols
    assert read_pgm(raw) == img
    assert to_image(to_plane(img)) == img


def test_to_plane_values():
    plane = to_plane(Image(np.array([[1, 2], [3, 4]], np.uint8)))
    assert plane.dtype == np.float64
    assert plane.ravel().tolist() == [1.0, 2.0, 3.0, 4.0]
    assert to_plane(Image(np.array([[255, 0]], np.uint8))).tolist() == [[255.0, 0.0]]


@pytest.mark.parametrize(
    "value, expected",
    [(254.5, 255), (-3.2, 0), (127.49, 127), (0.5, 1), (1.5, 2), (2.5, 3), (300.0, 255), (-0.5, 0), (0.49999999999999994, 0)],
)
def test_to_image_rounding(value, expected):
    assert to_image(np.array([[value]])).pixels[0, 0] == expected


def test_to_image_rejects_nonfinite():
    with pytest.raises(ValueError):
        to_image(np.array([[np.nan]]))


def test_image_validation():
    with pytest.raises(ValueError):
        Image(np.array([[256]]))
    with pytest.raises(ValueError):
        Image(np.zeros((2, 2, 2), np.uint8))
    img = Image(np.array([[7]], dtype=np.int32))
    assert img.pixels.dtype == np.uint8 and img.max_value == 255 and img.bit_depth == 8
