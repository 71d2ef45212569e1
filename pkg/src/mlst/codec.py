"""Greedy LZ77 over the multilayer index, with a gamma-coded container.

Container layout (all multi-byte integers little-endian)::

    b"MLST" | version 0x01 | model id | window log | original length (u64)

followed by the token bits, most significant bit first, final byte zero
padded.  A literal is ``0`` plus 8 raw bits; a match is ``1`` then
``gamma(length - 1)`` then ``gamma(offset)``.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .bitio import BitReader, BitWriter, CorruptStreamError, TruncatedStreamError
from .cost_model import CostModel, bitlen, gamma_decode, gamma_encode
from .multilayer import MultiLayerSuffixTree

MAGIC = b"MLST"
VERSION = 0x01
HEADER = struct.Struct("<4sBBBQ")
HEADER_SIZE = HEADER.size
MIN_MATCH = 2
MAX_WINDOW_LOG = 30
DEFAULT_WINDOW_LOG = 20


class EncodeError(ValueError):
    """A token cannot be represented in the container."""


class Literal(NamedTuple):
    byte: int


class Match(NamedTuple):
    length: int
    offset: int


Token = Union[Literal, Match]


@dataclass(frozen=True)
class ContainerHeader:
    model: CostModel = CostModel.GAMMA
    window_log: int = DEFAULT_WINDOW_LOG
    original_length: int = 0
    version: int = VERSION

    def __post_init__(self):
        object.__setattr__(self, "model", CostModel.parse(self.model))
        check_window_log(self.window_log)

    @property
    def max_window(self) -> int:
        return 1 << self.window_log

    def pack(self) -> bytes:
        return HEADER.pack(MAGIC, self.version, self.model.value,
                           self.window_log, self.original_length)

    @classmethod
    def unpack(cls, data: bytes) -> "ContainerHeader":
        if len(data) < HEADER_SIZE:
            raise TruncatedStreamError(
                f"container header needs {HEADER_SIZE} bytes, got {len(data)}",
                offset=len(data))
        magic, version, model_id, window_log, length = HEADER.unpack_from(data)
        if magic != MAGIC:
            raise CorruptStreamError(f"bad magic {magic!r}", offset=0)
        if version != VERSION:
            raise CorruptStreamError(f"unsupported version {version}", offset=4)
        try:
            model = CostModel(model_id)
        except ValueError:
            raise CorruptStreamError(f"unknown model id {model_id}", offset=5) from None
        if window_log > MAX_WINDOW_LOG:
            raise CorruptStreamError(f"window log {window_log} too large", offset=6)
        return cls(model, window_log, length, version)


def index_for(model: CostModel, window: int, length: int) -> MultiLayerSuffixTree:
    """Index for a text of ``length`` bytes; layers wider than the text add nothing.

    Offsets never exceed ``length - 1``, and every class below the cap keeps
    its bounds, so equal-cost answers are unchanged.
    """
    return MultiLayerSuffixTree(model, max(1, min(window, length)))


def check_window_log(window_log: int) -> None:
    if not 0 <= window_log <= MAX_WINDOW_LOG:
        raise ValueError(f"window log must be in 0..{MAX_WINDOW_LOG}, got {window_log}")


# ------------------------------------------------------------------ parsing

def parse_greedy(index: MultiLayerSuffixTree, text: bytes) -> list[Token]:
    """Greedy parse of ``text`` driven by ``index.rep_lpf()``.

    ``index`` must be fresh; the whole text is handed to it as lookahead.
    """
    if index.time or len(index.text):
        raise ValueError("parse_greedy needs a fresh index")
    index.extend(text)
    tokens: list[Token] = []
    n = len(text)
    i = 0
    while i < n:
        ref = index.rep_lpf()
        if ref.length >= MIN_MATCH:
            tokens.append(Match(ref.length, ref.offset))
            index.skip(ref.length)
            i += ref.length
        else:
            tokens.append(Literal(text[i]))
            index.skip(1)
            i += 1
    return tokens


# ----------------------------------------------------------------- encoding

def encode(tokens: Iterable[Token], header: ContainerHeader) -> bytes:
    """Serialize ``tokens`` under ``header``; validates offsets against the window."""
    w = BitWriter()
    produced = 0
    limit = header.max_window
    for tok in tokens:
        if isinstance(tok, Literal):
            if not 0 <= tok.byte <= 255:
                raise EncodeError(f"literal {tok.byte} is not a byte")
            w.write(tok.byte, 9)
            produced += 1
            continue
        length, offset = tok
        if length < MIN_MATCH:
            raise EncodeError(f"match length {length} below {MIN_MATCH}")
        if not 1 <= offset <= min(produced, limit):
            raise EncodeError(f"offset {offset} out of range at position {produced}")
        w.write_bit(1)
        gamma_encode(length - 1, w)
        gamma_encode(offset, w)
        produced += length
    if produced != header.original_length:
        raise EncodeError(
            f"tokens cover {produced} bytes, header says {header.original_length}")
    return header.pack() + w.getvalue()


def decode_tokens(data: bytes) -> tuple[ContainerHeader, list[Token]]:
    header = ContainerHeader.unpack(data)
    r = BitReader(data, HEADER_SIZE)
    tokens: list[Token] = []
    produced = 0
    while produced < header.original_length:
        if r.read_bit():
            length = gamma_decode(r) + 1
            at = r.byte_offset
            offset = gamma_decode(r)
            if offset > produced:
                raise CorruptStreamError(
                    f"offset {offset} reaches before the start at position {produced}",
                    offset=at)
            if produced + length > header.original_length:
                raise CorruptStreamError("match runs past the declared length",
                                         offset=r.byte_offset)
            tokens.append(Match(length, offset))
            produced += length
        else:
            tokens.append(Literal(r.read(8)))
            produced += 1
    return header, tokens


def expand(tokens: Iterable[Token]) -> bytes:
    """Replay tokens; match copies go byte by byte when source and target overlap."""
    out = bytearray()
    for tok in tokens:
        if isinstance(tok, Literal):
            out.append(tok.byte)
            continue
        length, offset = tok
        src = len(out) - offset
        if src < 0:
            raise CorruptStreamError(f"offset {offset} reaches before the start")
        if offset >= length:
            out += out[src:src + length]
        else:
            for k in range(length):
                out.append(out[src + k])
    return bytes(out)


def decode(data: bytes) -> bytes:
    """Rebuild the original bytes; raises CorruptStreamError on malformed input."""
    return expand(decode_tokens(data)[1])


def compress(data: bytes, *, window_log: int = DEFAULT_WINDOW_LOG,
             model: CostModel | str = CostModel.GAMMA) -> bytes:
    data = bytes(data)
    header = ContainerHeader(CostModel.parse(model), window_log, len(data))
    index = index_for(header.model, header.max_window, len(data))
    return encode(parse_greedy(index, data), header)


def decompress(data: bytes) -> bytes:
    return decode(data)


# ------------------------------------------------------------------ billing

class Strategy(enum.Enum):
    REP = "rep"
    RIGHTMOST_ORACLE = "rightmost"
    LEFTMOST = "leftmost"


def offset_bills(text: bytes, strategies: Iterable[Strategy] = tuple(Strategy), *,
                 window_log: int = DEFAULT_WINDOW_LOG,
                 model: CostModel | str = CostModel.GAMMA) -> dict[Strategy, int]:
    """Total offset bits of the greedy parse under each strategy.

    Match lengths always come from the greedy parse.  REP keeps the index's
    offsets; the other two rescan the window for the nearest or farthest
    previous occurrence of each matched factor.
    """
    model = CostModel.parse(model)
    check_window_log(window_log)
    window = 1 << window_log
    text = bytes(text)
    bills = {Strategy(s): 0 for s in strategies}
    tokens = parse_greedy(index_for(model, window, len(text)), text)
    i = 0
    for tok in tokens:
        if isinstance(tok, Literal):
            i += 1
            continue
        lo = max(0, i - window)
        hi = i - 1 + tok.length
        factor = text[i:i + tok.length]
        for s in bills:
            if s is Strategy.REP:
                d = tok.offset
            elif s is Strategy.RIGHTMOST_ORACLE:
                d = i - text.rfind(factor, lo, hi)
            else:
                d = i - text.find(factor, lo, hi)
            bills[s] += bitlen(model, d)
        i += tok.length
    return bills


def offset_bill(text: bytes, strategy: Strategy | str, *,
                window_log: int = DEFAULT_WINDOW_LOG,
                model: CostModel | str = CostModel.GAMMA) -> int:
    """Total offset bits of the greedy parse with offsets chosen by ``strategy``."""
    strategy = Strategy(strategy)
    return offset_bills(text, (strategy,), window_log=window_log, model=model)[strategy]


@dataclass
class ParseStats:
    length: int
    literals: int
    matches: int
    bills: dict[Strategy, int]
    compressed_size: int


def parse_stats(text: bytes, *, window_log: int = DEFAULT_WINDOW_LOG,
                model: CostModel | str = CostModel.GAMMA) -> ParseStats:
    model = CostModel.parse(model)
    text = bytes(text)
    header = ContainerHeader(model, window_log, len(text))
    tokens = parse_greedy(index_for(model, header.max_window, len(text)), text)
    matches = sum(isinstance(t, Match) for t in tokens)
    bills = offset_bills(text, window_log=window_log, model=model)
    return ParseStats(len(text), len(tokens) - matches, matches, bills,
                      len(encode(tokens, header)))
