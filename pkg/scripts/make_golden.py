"""Regenerate the container golden files in tests/golden/.

Only run this after an intentional format change; the tests treat these
bytes as the frozen wire format.
"""

from pathlib import Path

import numpy as np

from poac.codec import poac_encode, threshold_encode
from poac.pixel_io import Image

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def golden_image() -> Image:
    r, c = np.mgrid[0:8, 0:8]
    return Image(((r * 37 + c * 11 + (r * c) % 7) % 256).astype(np.uint8))


if __name__ == "__main__":
    img = golden_image()
    (GOLDEN / "synthetic_8x8.pgm").write_bytes(b"P5\n8 8\n255\n" + img.pixels.tobytes())
    (GOLDEN / "poac_db1.poac").write_bytes(poac_encode(img, "db1").to_bytes())
    (GOLDEN / "poac_db2.poac").write_bytes(poac_encode(img, "db2").to_bytes())
    (GOLDEN / "st_db1.poac").write_bytes(threshold_encode(img, "db1", "soft").to_bytes())
    (GOLDEN / "ht_db4.poac").write_bytes(threshold_encode(img, "db4", "hard").to_bytes())
    print("golden files written to", GOLDEN)
