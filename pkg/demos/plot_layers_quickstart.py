"""
Layers and cost classes
=======================

Build a multilayer index over a short text and ask which cost class the
nearest copy of a pattern falls in.
"""

# %%
# Cost classes
# ------------
#
# Every back-offset has a codeword length.  Offsets sharing a length form a
# class, and each class gets one sliding window sized to its largest offset.

from mlst import CostModel, MultiLayerSuffixTree, bitlen, class_interval, layer_sizes
from mlst.cost_model import gamma_codeword

for x in (1, 2, 3, 4, 7, 8, 18):
    print(f"{x:>3}  gamma={gamma_codeword(x):<10} bits={bitlen(CostModel.GAMMA, x)}")

sizes = layer_sizes(CostModel.GAMMA, 18)
print("window sizes:", sizes.sizes)
for x in range(1, len(sizes) + 1):
    print(f"class {x}: offsets in {class_interval(sizes, x)}, {sizes.bit_costs[x - 1]} bits")

# %%
# One tree per class
# ------------------

idx = MultiLayerSuffixTree(CostModel.GAMMA, 6)
for b in b"ababaa":
    idx.advance(b)
for layer in idx.layers:
    print(f"layer {layer.capacity}: window {layer.window!r}")

# %%
# The smallest layer holding ``ba`` has capacity 3, so the nearest ``ba``
# costs 3 bits to reference.  The index answers with an occurrence in
# that class.

ref = idx.rep_pattern(b"ba")
print(ref, "->", bitlen(CostModel.GAMMA, ref.offset), "bits")
print(idx.rep_pattern(b"c"))
