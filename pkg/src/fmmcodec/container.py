"""The .fmm container: header plus per-channel block streams.

Layout, all multi-byte integers big-endian:

    bytes 0..3    magic "FMM1"
    byte  4       format version, currently 1
    byte  5       modulus k, odd, 3..127
    bytes 6..9    width,  unsigned 32-bit
    bytes 10..13  height, unsigned 32-bit
    byte  14      channel count, 1 or 3

then for each channel an unsigned 32-bit byte length followed by that many
bytes of bit-packed blocks (row-major block-grid order, final partial byte
zero-padded). Decoding returns the quantized image, so a compressed file
decodes bit-identically no matter where it is read.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import core
from .bitstream import BitReader, BitWriter, BlockFields, encode_block, read_block_fields
from .errors import CorruptStreamError, FormatError, ModulusError
from .image import RasterImage

MAGIC = b"FMM1"
VERSION = 1
_HEADER = struct.Struct(">4sBBIIB")
_STREAM_LEN = struct.Struct(">I")
HEADER_SIZE = _HEADER.size


@dataclass(frozen=True)
class ContainerHeader:
    modulus: int
    width: int
    height: int
    channels: int


def compress(image: RasterImage, modulus: int = core.DEFAULT_MODULUS) -> bytes:
    """Encode an image; the result decompresses to its quantized form."""
    k = core.validate_modulus(modulus)
    parts = [_HEADER.pack(MAGIC, VERSION, k, image.width, image.height, image.channels)]
    for channel in range(image.channels):
        indices = core.to_indices(core.quantize_plane(image.plane(channel), k), k)
        writer = BitWriter()
        for block in core.split_blocks(indices):
            encode_block(block.values, k, writer)
        stream = writer.getvalue()
        parts.append(_STREAM_LEN.pack(len(stream)))
        parts.append(stream)
    return b"".join(parts)


def read_header(data: bytes) -> ContainerHeader:
    """Parse and validate the 15-byte container header."""
    if len(data) < HEADER_SIZE:
        raise FormatError(f"container too short for a header: {len(data)} bytes")
    magic, version, k, width, height, channels = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise FormatError(f"unsupported version {version}, expected {VERSION}")
    try:
        core.validate_modulus(k)
    except ModulusError as exc:
        raise FormatError(f"header carries an invalid modulus: {exc}") from exc
    if width < 1 or height < 1:
        raise FormatError(f"dimensions must be at least 1x1, got {width}x{height}")
    if channels not in (1, 3):
        raise FormatError(f"channels must be 1 or 3, got {channels}")
    return ContainerHeader(k, width, height, channels)


def _channel_streams(data: bytes, header: ContainerHeader) -> list[bytes]:
    offset = HEADER_SIZE
    streams = []
    for channel in range(header.channels):
        if offset + _STREAM_LEN.size > len(data):
            raise CorruptStreamError(f"missing stream length for channel {channel}")
        (length,) = _STREAM_LEN.unpack_from(data, offset)
        offset += _STREAM_LEN.size
        if offset + length > len(data):
            raise CorruptStreamError(
                f"channel {channel} stream truncated: declared {length} bytes, "
                f"{len(data) - offset} available"
            )
        streams.append(data[offset : offset + length])
        offset += length
    if offset != len(data):
        raise CorruptStreamError(f"{len(data) - offset} trailing bytes after the last stream")
    return streams


def _iter_stream_blocks(
    stream: bytes, header: ContainerHeader
) -> Iterator[tuple[int, int, BlockFields]]:
    """Blocks of one channel stream, enforcing the exact byte length."""
    reader = BitReader(stream)
    for row, col, rows, cols in core.block_grid(header.height, header.width):
        yield row, col, read_block_fields(reader, rows, cols, header.modulus)
    expected = (reader.bit_position + 7) // 8
    if len(stream) != expected:
        raise CorruptStreamError(
            f"stream is {len(stream)} bytes but its blocks need {expected}"
        )


def _decode_stream(stream: bytes, header: ContainerHeader) -> np.ndarray:
    blocks = [
        core.Block(row, col, fields.values)
        for row, col, fields in _iter_stream_blocks(stream, header)
    ]
    plane = core.assemble_plane(blocks, header.height, header.width)
    if int(plane.max()) > core.max_index(header.modulus):
        raise CorruptStreamError("decoded index exceeds the modulus limit")
    return plane


def decompress(data: bytes) -> RasterImage:
    """Decode a container back to the quantized image it stores."""
    header = read_header(data)
    planes = [
        core.from_indices(_decode_stream(stream, header), header.modulus)
        for stream in _channel_streams(data, header)
    ]
    return RasterImage.from_planes(planes)


def iter_block_fields(data: bytes) -> Iterator[tuple[int, int, int, BlockFields]]:
    """Walk a container block by block: (channel, block_row, block_col, fields)."""
    header = read_header(data)
    for channel, stream in enumerate(_channel_streams(data, header)):
        for row, col, fields in _iter_stream_blocks(stream, header):
            yield channel, row, col, fields
