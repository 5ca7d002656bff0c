"""Exception types shared across the codec."""


class FmmError(Exception):
    """Base class for all codec errors."""


class ModulusError(FmmError, ValueError):
    """Invalid quantization modulus (must be odd and within 3..127)."""


class FormatError(FmmError, ValueError):
    """Container framing is wrong: bad magic, version, or header fields."""


class CorruptStreamError(FmmError, ValueError):
    """Bit stream disagrees with the geometry or ranges the header implies."""


class TruncatedStreamError(CorruptStreamError):
    """Bit stream ended before a read completed."""


class NetpbmError(FmmError, ValueError):
    """Malformed PGM/PPM input."""
