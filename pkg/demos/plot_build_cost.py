"""
Build cost against a rightmost-maintaining tree
===============================================

Time the multilayer build and a single tree that keeps its nodes pointing
at their latest occurrence, on random bytes and on inputs made of long runs.
"""

# %%

import random

from mlst.cli import time_mlst, time_rmst

inputs = {
    "random": random.Random(1).randbytes(1 << 13),
    "run": b"a" * (1 << 13),
    "blocks": b"".join(b"a" * 256 + bytes([c]) for c in range(98, 130)),
}
window = 1 << 13
print(f"{'input':<8}{'bytes':>7}{'MLST us/B':>11}{'RMST us/B':>11}{'MLST ops':>10}{'RMST upd':>10}")
for name, data in inputs.items():
    m_s, ops = time_mlst(data, window)
    r_s, upd = time_rmst(data, window)
    n = len(data)
    print(f"{name:<8}{n:>7}{1e6 * m_s / n:>11.1f}{1e6 * r_s / n:>11.1f}{ops:>10}{upd:>10}")

# %%
# A pure run never branches, so the baseline has nothing to update.  Runs cut
# by fresh symbols build deep node chains, and the baseline's update count
# grows with the square of the run length there.
