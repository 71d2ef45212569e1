"""
Offset bills
============

Parse the same text greedily three times, paying for offsets three ways:
the index's answer, the true nearest copy, and the farthest copy.
"""

# %%

import random
from pathlib import Path

from mlst import Strategy, compress, decompress, offset_bills

rng = random.Random(0)
samples = {
    "source": Path(__file__).read_bytes() * 4,
    "dna-ish": bytes(rng.choice(b"acgt") for _ in range(4000)),
    "runs": b"".join(b"a" * k + b"b" for k in range(1, 60)),
}

print(f"{'input':<10}{'rep':>8}{'nearest':>9}{'farthest':>10}{'ratio':>8}")
for name, text in samples.items():
    bills = offset_bills(text, window_log=12)
    packed = compress(text, window_log=12)
    assert decompress(packed) == text
    print(f"{name:<10}{bills[Strategy.REP]:>8}{bills[Strategy.RIGHTMOST_ORACLE]:>9}"
          f"{bills[Strategy.LEFTMOST]:>10}{len(packed) / len(text):>8.3f}")

# %%
# The first two columns agree: the index never pays more than the nearest
# copy would, even though it rarely returns that exact copy.
