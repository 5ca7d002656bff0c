"""MSB-first bit packing and the per-block stream protocol.

Block grammar, all fields most-significant-bit first, W = bit_length(255 // k)
(W = 6 for the default modulus 5):

    min_index   W bits        smallest index in the block
    repetition  1 bit         1 if every index equals min_index, else 0
    max_delta   W bits        only when repetition = 0; always >= 1
    deltas      rows * cols   fields of bit_length(max_delta) bits each,
                              row-major, delta = index - min_index

A constant block is always sent with repetition = 1, so repetition = 0
with max_delta = 0 is not canonical and the decoder rejects it. Blocks
are written back to back with no byte alignment between them.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_MODULUS, max_index, validate_modulus
from .errors import CorruptStreamError, TruncatedStreamError

MAX_FIELD_WIDTH = 32


def index_field_width(k: int = DEFAULT_MODULUS) -> int:
    """Bits used by the min_index and max_delta fields (6 for k = 5)."""
    return max_index(k).bit_length()


class BitWriter:
    """Append-only MSB-first bit sink backed by a bytearray."""

    def __init__(self):
        self._buf = bytearray()
        self._spare = 0  # pending bits that do not yet fill a byte
        self._spare_bits = 0  # how many, 0..7

    @property
    def bit_length(self) -> int:
        """Total bits written so far."""
        return len(self._buf) * 8 + self._spare_bits

    def write_bits(self, value: int, width: int) -> None:
        """Append the width-bit big-endian representation of value."""
        if not 1 <= width <= MAX_FIELD_WIDTH:
            raise ValueError(f"width must be 1..{MAX_FIELD_WIDTH}, got {width}")
        value = operator.index(value)
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        self._append(value, width)

    def write_array(self, values, width: int) -> None:
        """Append every element of values as one width-bit field, in order.

        Bulk equivalent of repeated write_bits; width is limited to 8.
        """
        if not 1 <= width <= 8:
            raise ValueError(f"array field width must be 1..8, got {width}")
        arr = np.asarray(values)
        if arr.size == 0:
            return
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"values must be integers, got dtype {arr.dtype}")
        if int(arr.min()) < 0 or int(arr.max()) >> width:
            raise ValueError(f"a value does not fit in {width} bits")
        cells = np.ascontiguousarray(arr, dtype=np.uint8).reshape(-1, 1)
        bits = np.unpackbits(cells, axis=1)[:, 8 - width :].ravel()
        value = int.from_bytes(np.packbits(bits).tobytes(), "big") >> (-bits.size % 8)
        self._append(value, bits.size)

    def _append(self, value: int, nbits: int) -> None:
        acc = (self._spare << nbits) | value
        total = self._spare_bits + nbits
        whole, rem = divmod(total, 8)
        if whole:
            self._buf += (acc >> rem).to_bytes(whole, "big")
        self._spare = acc & ((1 << rem) - 1)
        self._spare_bits = rem

    def getvalue(self) -> bytes:
        """Packed bytes written so far, final partial byte zero-padded."""
        out = bytes(self._buf)
        if self._spare_bits:
            out += bytes([self._spare << (8 - self._spare_bits)])
        return out


class BitReader:
    """MSB-first bit source over an immutable byte sequence."""

    def __init__(self, data: bytes):
        self._bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
        self._pos = 0

    @property
    def bit_position(self) -> int:
        """Bits consumed from the start of the buffer."""
        return self._pos

    @property
    def bits_remaining(self) -> int:
        return self._bits.size - self._pos

    def read_bits(self, width: int) -> int:
        """Read one width-bit big-endian unsigned value; inverse of write_bits."""
        if not 1 <= width <= MAX_FIELD_WIDTH:
            raise ValueError(f"width must be 1..{MAX_FIELD_WIDTH}, got {width}")
        if width > self.bits_remaining:
            raise TruncatedStreamError(
                f"needed {width} bits, only {self.bits_remaining} left"
            )
        chunk = self._bits[self._pos : self._pos + width]
        self._pos += width
        return int.from_bytes(np.packbits(chunk).tobytes(), "big") >> (-width % 8)

    def read_array(self, count: int, width: int) -> np.ndarray:
        """Read count consecutive width-bit fields as a uint8 array."""
        if not 1 <= width <= 8:
            raise ValueError(f"array field width must be 1..8, got {width}")
        if count < 0:
            raise ValueError(f"count must be non-negative, got {count}")
        need = count * width
        if need > self.bits_remaining:
            raise TruncatedStreamError(
                f"needed {need} bits, only {self.bits_remaining} left"
            )
        chunk = self._bits[self._pos : self._pos + need].reshape(count, width)
        self._pos += need
        weights = 1 << np.arange(width - 1, -1, -1, dtype=np.int64)
        return (chunk @ weights).astype(np.uint8)


@dataclass(frozen=True)
class BlockFields:
    """One decoded block: its protocol fields plus the reconstructed indices."""

    min_index: int
    repeated: bool
    max_delta: int | None
    delta_width: int | None
    bit_length: int
    values: np.ndarray

    @property
    def payload_bits(self) -> int:
        """Bits spent on the packed deltas alone (0 for a repeated block)."""
        return 0 if self.repeated else self.values.size * self.delta_width


def encode_block(values, k: int = DEFAULT_MODULUS, writer: BitWriter | None = None) -> BitWriter:
    """Append one block of indices to writer (a fresh one when omitted)."""
    k = validate_modulus(k)
    arr = np.asarray(values)
    if arr.ndim != 2 or not (1 <= arr.shape[0] <= 8 and 1 <= arr.shape[1] <= 8):
        raise ValueError(f"block must be 2D with sides 1..8, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"indices must be integers, got dtype {arr.dtype}")
    lo, hi = int(arr.min()), int(arr.max())
    if lo < 0 or hi > max_index(k):
        raise ValueError(f"index out of range 0..{max_index(k)}")
    if writer is None:
        writer = BitWriter()
    w = index_field_width(k)
    writer.write_bits(lo, w)
    if hi == lo:
        writer.write_bits(1, 1)
    else:
        writer.write_bits(0, 1)
        spread = hi - lo
        writer.write_bits(spread, w)
        writer.write_array(arr.astype(np.uint8) - lo, spread.bit_length())
    return writer


def read_block_fields(
    reader: BitReader, rows: int, cols: int, k: int = DEFAULT_MODULUS
) -> BlockFields:
    """Read one block at the cursor; rows/cols come from image geometry."""
    k = validate_modulus(k)
    if not 1 <= rows <= 8 or not 1 <= cols <= 8:
        raise ValueError(f"block sides must be 1..8, got {rows}x{cols}")
    w = index_field_width(k)
    top = max_index(k)
    start = reader.bit_position
    lo = reader.read_bits(w)
    repeated = bool(reader.read_bits(1))
    if lo > top:
        raise CorruptStreamError(f"block minimum {lo} exceeds index limit {top}")
    if repeated:
        values = np.full((rows, cols), lo, dtype=np.uint8)
        return BlockFields(lo, True, None, None, reader.bit_position - start, values)
    spread = reader.read_bits(w)
    if spread == 0:
        raise CorruptStreamError("non-repeated block with zero max_delta is not canonical")
    if lo + spread > top:
        raise CorruptStreamError(f"block range {lo}+{spread} exceeds index limit {top}")
    width = spread.bit_length()
    deltas = reader.read_array(rows * cols, width)
    values = (deltas + lo).reshape(rows, cols)
    return BlockFields(lo, False, spread, width, reader.bit_position - start, values)


def decode_block(reader: BitReader, rows: int, cols: int, k: int = DEFAULT_MODULUS) -> np.ndarray:
    """Exact inverse of encode_block; returns the block's indices."""
    return read_block_fields(reader, rows, cols, k).values
