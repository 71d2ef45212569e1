"""Multilayer sliding-window suffix trees for cost-aware LZ77 offsets."""

from .bitio import BitReader, BitWriter, CorruptStreamError, TruncatedStreamError
from .codec import (ContainerHeader, EncodeError, Literal, Match, MIN_MATCH, Strategy,
                    compress, decode, decompress, encode, offset_bill, offset_bills,
                    parse_greedy)
from .cost_model import (CostModel, LayerSizes, bitlen, class_interval, gamma_decode,
                         gamma_encode, growth_property_holds, layer_sizes)
from .multilayer import LookaheadError, MatchRef, MultiLayerSuffixTree, NO_MATCH
from .swtree import NO_POSITION, Layer

__all__ = [
    "BitReader", "BitWriter", "ContainerHeader", "CorruptStreamError", "CostModel",
    "EncodeError", "Layer", "LayerSizes", "Literal", "LookaheadError", "MIN_MATCH",
    "Match", "MatchRef", "MultiLayerSuffixTree", "NO_MATCH", "NO_POSITION", "Strategy",
    "TruncatedStreamError", "bitlen", "class_interval", "compress", "decode",
    "decompress", "encode", "gamma_decode", "gamma_encode", "growth_property_holds",
    "layer_sizes", "offset_bill", "offset_bills", "parse_greedy",
]
