"""Acceptance gate: one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python tests/test_acceptance.py``.
"""

import gc
import random
import subprocess
import sys
import time

import pytest

from mlst.codec import Strategy, compress, decompress, offset_bills
from mlst.cost_model import CostModel, bitlen, gamma_codeword, growth_property_holds, layer_sizes
from mlst.multilayer import MultiLayerSuffixTree
from mlst.oracle import naive_lpf, naive_rightmost, naive_spf, rmst_build_and_query

from helpers import corpus, random_text

G = CostModel.GAMMA

GAMMA_CODES = {
    1: "1", 2: "010", 3: "011", 4: "00100", 5: "00101", 6: "00110", 7: "00111",
    8: "0001000", 9: "0001001", 10: "0001010", 11: "0001011", 12: "0001100",
    13: "0001101", 14: "0001110", 15: "0001111", 16: "000010000",
    17: "000010001", 18: "000010010",
}


@pytest.fixture
def verdict(capsys):
    def report(label, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, detail
    return report


def test_1_gamma_table(verdict):
    start = time.perf_counter()
    wrong = [x for x, code in GAMMA_CODES.items()
             if gamma_codeword(x) != code or bitlen(G, x) != len(code)]
    ms = 1e3 * (time.perf_counter() - start)
    verdict("1 gamma codewords 1..18", not wrong and ms < 1.0,
            f"{18 - len(wrong)}/18 equal, {ms:.3f} ms")


def test_2_layer_sizes(verdict):
    ls18, ls6 = layer_sizes(G, 18), layer_sizes(G, 6)
    ok = (ls18.sizes == (1, 3, 7, 15, 18) and ls18.bit_costs == (1, 3, 5, 7, 9)
          and ls6.sizes == (1, 3, 6)
          and growth_property_holds(ls18, 2, 2) and growth_property_holds(ls6, 2, 2))
    verdict("2 layer sizes and growth", ok,
            f"n=18 sizes {ls18.sizes} costs {ls18.bit_costs}; n=6 sizes {ls6.sizes}")


def test_3_rep_pattern_soundness(verdict):
    rng = random.Random(2024)
    start = time.perf_counter()
    violations = checked = absent = 0
    for k in range(200):
        sigma = (2, 4, 26)[k % 3]
        n = rng.randint(1, 4096)
        text = random_text(rng, n, sigma)
        window = rng.choice([n, n, 1 << 12, 300, 37])
        idx = MultiLayerSuffixTree(G, window)
        for b in text:
            idx.advance(b)
        for _ in range(1000):
            if rng.random() < 0.75:
                a = rng.randrange(n)
                p = text[a:a + rng.randint(1, 16)]
            else:
                p = random_text(rng, rng.randint(1, 8), sigma)
            ref = idx.rep_pattern(p)
            d = naive_rightmost(text, n, p, window=window)
            checked += 1
            if d == 0:
                absent += 1
                violations += ref.offset != 0
                continue
            j = n - ref.offset
            genuine = ref.offset >= 1 and n - window <= j and text[j:j + len(p)] == p \
                and j + len(p) <= n
            violations += not genuine or bitlen(G, ref.offset) != bitlen(G, d)
    secs = time.perf_counter() - start
    verdict("3 REP(pattern) equal cost", violations == 0 and secs < 120,
            f"{checked} queries ({absent} absent), {violations} violations, {secs:.1f} s")


def test_4_lpf_spf(verdict):
    rng = random.Random(4)
    violations = positions = 0
    for k in range(50):
        text = random_text(rng, rng.randint(1, 2048), (2, 4, 26)[k % 3])
        window = rng.choice([len(text), 64, 9])
        idx = MultiLayerSuffixTree(G, window)
        idx.extend(text)
        for i in range(len(text)):
            positions += 1
            length, j = naive_lpf(text, i, window=window)
            ref = idx.rep_lpf()
            bad = ref.length != length
            if length and not bad:
                s = i - ref.offset
                bad = not (i - window <= s < i and text[s:s + length] == text[i:i + length]
                           and bitlen(G, ref.offset) == bitlen(G, i - j))
            spf = idx.rep_spf()
            lengths = [e.length for e in spf]
            bad = bad or len(spf) > len(idx) or lengths != sorted(set(lengths), reverse=True)
            for m, d in naive_spf(text, i, G, window=window):
                cover = [e for e in spf if e.length >= m]
                if not cover:
                    bad = True
                    break
                e = cover[-1]
                s = i - e.offset
                if text[s:s + m] != text[i:i + m] or bitlen(G, e.offset) != bitlen(G, d):
                    bad = True
                    break
            violations += bad
            idx.advance()
    verdict("4 REP(LPF) and REP(SPF)", violations == 0,
            f"{positions} parse positions, {violations} violations")


def billing_corpus():
    items = corpus(seed=5, count=60, max_len=4096)
    items += [("run65536", b"a" * (1 << 16)), ("bytes256", random.Random(1).randbytes(256))]
    return items


def test_5_equal_cost_billing(verdict):
    equal = dominated = 0
    items = billing_corpus()
    for name, text in items:
        for model in ("gamma", "binary"):
            bills = offset_bills(text, window_log=12, model=model)
            equal += bills[Strategy.REP] == bills[Strategy.RIGHTMOST_ORACLE]
            dominated += bills[Strategy.LEFTMOST] >= bills[Strategy.REP]
    total = 2 * len(items)
    verdict("5 equal-cost billing", equal == dominated == total,
            f"REP == RIGHTMOST on {equal}/{total}, LEFTMOST >= REP on {dominated}/{total}")


def test_6_round_trip(verdict):
    items = billing_corpus()
    rng = random.Random(6)
    items += [(f"extra{k}", random_text(rng, rng.randint(0, 4096), (2, 16, 256)[k % 3], base=0))
              for k in range(60)]
    failures = [name for name, text in items if decompress(compress(text)) != text]
    failures += [name + "/binary" for name, text in items[:20]
                 if decompress(compress(text, model="binary", window_log=6)) != text]
    verdict("6 round trip", not failures,
            f"{len(items) + 20} inputs, failures: {failures or 'none'}")


def test_7_space(verdict):
    rng = random.Random(7)
    worst = 0.0
    ok = True
    for model in (CostModel.GAMMA, CostModel.BINARY):
        for window in (1, 6, 18, 100, 1000, 4096):
            text = random_text(rng, 3 * window + 50, 2)
            synced = MultiLayerSuffixTree(model, window)
            parsed = MultiLayerSuffixTree(model, window)
            parsed.extend(text)
            for b in text:
                synced.advance(b)
                parsed.rep_lpf()
                parsed.advance()
                a = sum(synced.window_lengths())
                c = sum(parsed.dictionary_lengths())
                worst = max(worst, a / (3 * window), c / (3 * window))
                ok = ok and a <= 3 * window and c <= 3 * window
    verdict("7 space linearity", ok, f"max sum of window lengths / 3M = {worst:.3f}")


def mlst_seconds(text):
    idx = MultiLayerSuffixTree(G, len(text))
    gc.disable()
    try:
        start = time.perf_counter()
        for b in text:
            idx.advance(b)
        return time.perf_counter() - start, len(idx), idx.tree_ops
    finally:
        gc.enable()


TIMING_SCRIPT = """
import gc, random, sys, time
from mlst.cost_model import CostModel
from mlst.multilayer import MultiLayerSuffixTree
n = int(sys.argv[1])
text = random.Random(n).randbytes(n)
idx = MultiLayerSuffixTree(CostModel.GAMMA, n)
gc.disable()
start = time.perf_counter()
for b in text:
    idx.advance(b)
print(time.perf_counter() - start, len(idx))
"""


def isolated_build(n, repeats=2):
    """Best wall time of building over n random bytes, each run in a fresh interpreter."""
    best = float("inf")
    for _ in range(repeats):
        out = subprocess.run([sys.executable, "-c", TIMING_SCRIPT, str(n)],
                             capture_output=True, text=True, check=True).stdout.split()
        best = min(best, float(out[0]))
    return best, int(out[1])


def test_8a_scaling_random(verdict):
    (s_small, l_small), (s_big, l_big) = isolated_build(1 << 16), isolated_build(1 << 18)
    per_small, per_big = s_small / (1 << 16), s_big / (1 << 18)
    ratio = per_big / per_small
    verdict("8a time per byte 2^16 -> 2^18", ratio <= 1.5,
            f"{1e6 * per_small:.1f} -> {1e6 * per_big:.1f} us/B, ratio {ratio:.2f} "
            f"(layers {l_small} -> {l_big}, best of 2 fresh processes)")


RUN_SIZES = (1024, 2048, 4096)


def test_8b_rmst_superlinear_on_runs(verdict):
    counts = [rmst_build_and_query(b"a" * n, n, query=False).path_updates for n in RUN_SIZES]
    growth = [b / a if a else float("nan") for a, b in zip(counts, counts[1:])]
    ok = all(a > 0 for a in counts) and all(g > 2.0 for g in growth)
    verdict("8b RMST updates superlinear on a^n", ok,
            f"path updates {dict(zip(RUN_SIZES, counts))}")


def test_8c_mlst_bounded_on_runs(verdict):
    per_char = []
    start = time.perf_counter()
    for n in RUN_SIZES:
        _, _, ops = mlst_seconds(b"a" * n)
        per_char.append(ops / n / len(layer_sizes(G, n)))
    secs = time.perf_counter() - start
    ok = max(per_char) < 4 and per_char[-1] <= per_char[0] * 1.1
    verdict("8c MLST ops per byte per layer bounded on a^n", ok,
            "ops/byte/layer " + ", ".join(f"{n}:{p:.2f}" for n, p in zip(RUN_SIZES, per_char))
            + f", {secs:.1f} s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
