"""Seeded additive white Gaussian noise on the [0, 1]-normalized pixel scale."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .pixel_io import MAX_VALUE, Image, round_half_away

_U64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class NoiseParams:
    """Gaussian noise parameters in units of the [0, 1] scale.

    ``sigma=0.1`` is variance 0.01, the bench default.
    """

    mean: float = 0.0
    sigma: float = 0.1
    seed: int = 42

    def __post_init__(self):
        if not self.sigma >= 0:
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")
        if not 0 <= self.seed <= _U64_MAX:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def gaussian_samples(count: int, params: NoiseParams) -> np.ndarray:
    """Raw N(mean, sigma^2) stream, in row-major consumption order."""
    return kernels.gaussian_stream(params.seed, int(count), float(params.mean), float(params.sigma))


def add_gaussian(image: Image, params: NoiseParams) -> Image:
    n = gaussian_samples(image.pixels.size, params).reshape(image.shape)
    noisy = (image.pixels / float(MAX_VALUE) + n) * float(MAX_VALUE)
    return Image(np.clip(round_half_away(noisy), 0, MAX_VALUE).astype(np.uint8))
