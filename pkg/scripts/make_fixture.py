"""Regenerate tests/fixtures/camera256.pgm.

Source: scikit-image's ``data.camera()`` (CC0, photographer Lav Varshney),
512x512 8-bit.  Downsampled by 2x2 block mean, rounded half up.
Needs scikit-image, which is not a runtime dependency.
"""

from pathlib import Path

import numpy as np
from skimage import data

from poac.pixel_io import Image, save_pgm

out = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "camera256.pgm"
cam = data.camera().astype(np.int64)
blocks = cam.reshape(256, 2, 256, 2).sum(axis=(1, 3))
save_pgm(Image(((blocks + 2) // 4).astype(np.uint8)), out)
print(f"wrote {out}")
