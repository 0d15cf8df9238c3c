"""Wavelet-domain denoising and compression by projecting detail subbands
onto the approximation subband (POAC), with soft/hard shrinkage baselines."""

from ._backend import BACKEND
from .codec import CompressedBlob, decode, encode, poac_decode, poac_encode, threshold_decode, threshold_encode
from .core import PoacScalars, poac_denoise, poac_reconstruct_subbands, poac_scalars, projection_scalar
from .dwt2d import FilterBank, Subbands, WaveletId, dwt1d, dwt2d_level, filter_bank, idwt1d, idwt2d_level
from .metrics import QualityReport, compression_ratio, mse, percent_space_savings, psnr, subband_histogram
from .noise import NoiseParams, add_gaussian
from .pixel_io import Image, read_pgm, to_image, to_plane, write_pgm
from .shrinkage import ThresholdMode, hard_threshold, mad_sigma, shrink_denoise, soft_threshold, universal_threshold

__version__ = "0.1.0"
