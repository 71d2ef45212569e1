"""Integer cost functions, the Elias gamma codec and the layer-size set.

A cost model maps a positive back-offset to the bit length of its codeword.
Both supported models depend only on ``floor(log2 x)``, so equal-cost
offsets form contiguous intervals whose right ends are the layer sizes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bitio import BitReader, BitWriter, TruncatedStreamError


class CostModel(enum.Enum):
    GAMMA = 0x01
    BINARY = 0x02

    def bitlen(self, x: int) -> int:
        return bitlen(self, x)

    @classmethod
    def parse(cls, name: "str | CostModel") -> "CostModel":
        if isinstance(name, CostModel):
            return name
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown cost model {name!r}") from None


def bitlen(model: CostModel, x: int) -> int:
    """Codeword length in bits of the positive integer ``x`` under ``model``.

    GAMMA gives ``2*floor(log2 x) + 1``; BINARY gives ``floor(log2 x) + 1``.
    """
    if x < 1:
        raise ValueError(f"bit length is undefined for {x}")
    e = x.bit_length() - 1
    if model is CostModel.GAMMA:
        return 2 * e + 1
    return e + 1


def gamma_encode(x: int, sink: BitWriter) -> int:
    """Write the Elias gamma codeword of ``x``; returns the number of bits."""
    if x < 1:
        raise ValueError(f"gamma code is undefined for {x}")
    nbits = x.bit_length()
    # floor(log2 x) zeros followed by x itself, leading one first
    sink.write(x, 2 * nbits - 1)
    return 2 * nbits - 1


def gamma_decode(source: BitReader) -> int:
    zeros = 0
    start = source.byte_offset
    try:
        while source.read_bit() == 0:
            zeros += 1
        return (1 << zeros) | source.read(zeros)
    except TruncatedStreamError as exc:
        raise TruncatedStreamError("truncated gamma codeword", start) from exc


def gamma_codeword(x: int) -> str:
    """The gamma codeword of ``x`` as a bit string, e.g. ``gamma_codeword(2) == '010'``."""
    sink = BitWriter()
    gamma_encode(x, sink)
    return sink.to_bitstring()


@dataclass(frozen=True)
class LayerSizes:
    """Window sizes ``sw_1 < ... < sw_s`` and their bit costs ``b_1 < ... < b_s``.

    ``sizes[x]`` is the largest offset ``j <= n`` whose cost does not exceed
    ``bit_costs[x]``.
    """

    model: CostModel
    n: int
    sizes: tuple[int, ...]
    bit_costs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sizes)

    def class_of(self, d: int) -> int:
        """1-based index of the layer class holding offset ``d``."""
        if not 1 <= d <= self.n:
            raise ValueError(f"offset {d} outside [1, {self.n}]")
        b = bitlen(self.model, d)
        return self.bit_costs.index(b) + 1


def _largest_with_cost(model: CostModel, b: int, n: int) -> int:
    # bitlen is monotone, so binary search on [1, n]
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if bitlen(model, mid) <= b:
            lo = mid
        else:
            hi = mid - 1
    return lo


def layer_sizes(model: CostModel, n: int) -> LayerSizes:
    if n < 1:
        raise ValueError("layer sizes need n >= 1")
    costs = sorted({bitlen(model, 1 << e) for e in range(n.bit_length())})
    sizes = tuple(_largest_with_cost(model, b, n) for b in costs)
    return LayerSizes(model, n, sizes, tuple(costs))


def class_interval(ls: LayerSizes, x: int) -> tuple[int, int]:
    """Offsets ``(lo, hi]`` that share the cost of layer ``x`` (1-based)."""
    if not 1 <= x <= len(ls.sizes):
        raise IndexError(f"layer index {x} outside [1, {len(ls.sizes)}]")
    lo = ls.sizes[x - 2] if x > 1 else 0
    return lo, ls.sizes[x - 1]


def growth_property_holds(ls: LayerSizes, k: "Fraction | float | int", k_hat: int) -> bool:
    """Check ``sw_i >= k * sw_(i-1)`` for every ``k_hat <= i < s`` (1-based).

    An index ``i = 1`` in range refers to the nonexistent ``sw_0`` and makes
    the check fail.
    """
    k = Fraction(k)
    sizes = ls.sizes
    for i in range(k_hat, len(sizes)):
        if i < 2:
            return False
        if sizes[i - 1] < k * sizes[i - 2]:
            return False
    return True
