"""In-memory raster image model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class RasterImage:
    """8-bit image stored as a read-only (height, width, channels) uint8 array.

    Samples are row-major and channel-interleaved; channels is 1 (grayscale)
    or 3 (RGB). A 2D array is accepted and treated as a single channel.
    """

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim == 2:
            arr = arr[:, :, np.newaxis]
        if arr.ndim != 3:
            raise ValueError(f"expected a 2D or 3D pixel array, got {arr.ndim}D")
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"samples must be integers, got dtype {arr.dtype}")
        height, width, channels = arr.shape
        if height < 1 or width < 1:
            raise ValueError(f"dimensions must be at least 1x1, got {width}x{height}")
        if channels not in (1, 3):
            raise ValueError(f"channels must be 1 or 3, got {channels}")
        if int(arr.min()) < 0 or int(arr.max()) > 255:
            raise ValueError("samples must lie in [0, 255]")
        arr = np.ascontiguousarray(arr, dtype=np.uint8)
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def channels(self) -> int:
        return self.pixels.shape[2]

    def plane(self, channel: int = 0) -> np.ndarray:
        """One channel as a read-only (height, width) view."""
        if not 0 <= channel < self.channels:
            raise ValueError(f"channel {channel} out of range for {self.channels}-channel image")
        return self.pixels[:, :, channel]

    @classmethod
    def from_planes(cls, planes) -> "RasterImage":
        """Stack per-channel (height, width) arrays into one image."""
        return cls(np.stack([np.asarray(p) for p in planes], axis=-1))

    def __eq__(self, other):
        if not isinstance(other, RasterImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(
            self.pixels, other.pixels
        )

    __hash__ = None
