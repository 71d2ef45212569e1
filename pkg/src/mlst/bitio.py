"""MSB-first bit sink and bit source over byte buffers."""

from __future__ import annotations


class CorruptStreamError(ValueError):
    """Raised when an encoded stream cannot be decoded.

    ``offset`` is the byte offset in the input at which decoding failed,
    or ``None`` when it is not meaningful.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class TruncatedStreamError(CorruptStreamError):
    """The bit source ran out in the middle of a value."""


class BitWriter:
    """Accumulates bits most-significant first; the last byte is zero padded."""

    __slots__ = ("_buf", "_acc", "_nacc", "bits_written")

    def __init__(self) -> None:
        self._buf = bytearray()
        self._acc = 0
        self._nacc = 0
        self.bits_written = 0

    def write(self, value: int, nbits: int) -> None:
        """Append the low ``nbits`` bits of ``value``."""
        if nbits <= 0:
            return
        acc = (self._acc << nbits) | (value & ((1 << nbits) - 1))
        n = self._nacc + nbits
        buf = self._buf
        while n >= 8:
            n -= 8
            buf.append((acc >> n) & 0xFF)
        self._acc = acc & ((1 << n) - 1)
        self._nacc = n
        self.bits_written += nbits

    def write_bit(self, bit: int) -> None:
        self.write(bit & 1, 1)

    def getvalue(self) -> bytes:
        out = bytes(self._buf)
        if self._nacc:
            out += bytes([(self._acc << (8 - self._nacc)) & 0xFF])
        return out

    def to_bitstring(self) -> str:
        """The written bits as a '0'/'1' string, without padding."""
        full = "".join(f"{b:08b}" for b in self._buf)
        if self._nacc:
            full += format(self._acc, f"0{self._nacc}b")
        return full


class BitReader:
    """Reads bits most-significant first from ``data[start:]``."""

    __slots__ = ("_data", "_pos", "_end")

    def __init__(self, data: bytes, start: int = 0):
        self._data = data
        self._pos = start * 8
        self._end = len(data) * 8

    @classmethod
    def from_bitstring(cls, bits: str) -> "BitReader":
        """Reader over a '0'/'1' string; the tail is zero padded to a byte."""
        padded = bits + "0" * (-len(bits) % 8)
        data = int(padded, 2).to_bytes(len(padded) // 8, "big") if padded else b""
        reader = cls(data)
        reader._end = len(bits)
        return reader

    @property
    def bit_position(self) -> int:
        return self._pos

    @property
    def byte_offset(self) -> int:
        return self._pos // 8

    def bits_left(self) -> int:
        return self._end - self._pos

    def read_bit(self) -> int:
        pos = self._pos
        if pos >= self._end:
            raise TruncatedStreamError("bit stream exhausted", pos // 8)
        self._pos = pos + 1
        return (self._data[pos >> 3] >> (7 - (pos & 7))) & 1

    def read(self, nbits: int) -> int:
        if self._pos + nbits > self._end:
            raise TruncatedStreamError("bit stream exhausted", self._pos // 8)
        if nbits <= 0:
            return 0
        pos = self._pos
        first = pos >> 3
        last = (pos + nbits - 1) >> 3
        chunk = int.from_bytes(self._data[first:last + 1], "big")
        drop = (last + 1) * 8 - (pos + nbits)
        self._pos = pos + nbits
        return (chunk >> drop) & ((1 << nbits) - 1)
