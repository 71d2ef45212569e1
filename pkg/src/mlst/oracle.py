"""Brute-force references and the rightmost-maintaining baseline tree.

The ``naive_*`` functions scan the text with ``bytes.find``/``rfind`` and
share no code with the suffix trees, so they can referee them in tests.
They are quadratic or worse; keep inputs to a few thousand symbols.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cost_model import CostModel, bitlen
from .multilayer import MatchRef, NO_MATCH
from .swtree import NO_POSITION, Layer


def _lower(i: int, window: int | None) -> int:
    return 0 if window is None else max(0, i - window)


def naive_rightmost(text: bytes, i: int, p: bytes, *, overlap: bool = False,
                    window: int | None = None) -> int:
    """Smallest back-offset ``i - j`` of an occurrence of ``p``, or 0.

    By default the occurrence must end by ``i`` (``j + |p| <= i``).  With
    ``overlap=True`` any start ``j < i`` counts, the copy running past ``i``
    as LZ77 self-references do.  ``window`` restricts starts to
    ``j >= i - window``.
    """
    if i > len(text):
        raise ValueError("time beyond end of text")
    p = bytes(p)
    lo = _lower(i, window)
    hi = i - 1 + len(p) if overlap else i
    j = text.rfind(p, lo, hi)
    return 0 if j < 0 else i - j


def naive_leftmost(text: bytes, i: int, p: bytes, *, overlap: bool = False,
                   window: int | None = None) -> int:
    """Largest back-offset of an occurrence of ``p``, or 0 (same rules)."""
    p = bytes(p)
    lo = _lower(i, window)
    hi = i - 1 + len(p) if overlap else i
    j = text.find(p, lo, hi)
    return 0 if j < 0 else i - j


def naive_lpf(text: bytes, i: int, *, window: int | None = None) -> tuple[int, int]:
    """``(length, j)``: longest ``text[i:i+length]`` also starting at some ``j < i``.

    Overlap is allowed.  ``j`` is the rightmost such start; ``(0, NO_POSITION)``
    when even ``text[i]`` is new.
    """
    if i >= len(text):
        raise ValueError("LPF needs at least one symbol after i")
    lo = _lower(i, window)
    n = len(text)
    length, best = 0, NO_POSITION
    while i + length < n:
        ell = length + 1
        j = text.rfind(text[i:i + ell], lo, i - 1 + ell)
        if j < 0:
            break
        length, best = ell, j
    return length, best


def naive_spf(text: bytes, i: int, model: CostModel = CostModel.GAMMA, *,
              window: int | None = None) -> list[tuple[int, int]]:
    """``[(m, d_m)]`` for every prefix length ``m`` of the LPF at ``i``.

    ``d_m`` is the rightmost back-offset of ``text[i:i+m]`` (overlap allowed).
    ``model`` is accepted for symmetry with the indexed query; the rightmost
    offset does not depend on it.
    """
    if i >= len(text):
        return []
    length, _ = naive_lpf(text, i, window=window)
    return [(m, naive_rightmost(text, i, text[i:i + m], overlap=True, window=window))
            for m in range(1, length + 1)]


def naive_greedy(text: bytes, window: int, min_match: int = 2) -> list[tuple[int, int, int]]:
    """Greedy LZ77 parse as ``(i, length, rightmost offset)``; literals have length 1, offset 0."""
    out = []
    i = 0
    n = len(text)
    while i < n:
        length, j = naive_lpf(text, i, window=window)
        if length >= min_match:
            out.append((i, length, i - j))
            i += length
        else:
            out.append((i, 1, 0))
            i += 1
    return out


def naive_factors(window: bytes, max_len: int) -> set[bytes]:
    """Every nonempty factor of ``window`` up to ``max_len`` symbols."""
    n = len(window)
    return {window[a:b] for a in range(n) for b in range(a + 1, min(n, a + max_len) + 1)}


def naive_lrs(window: bytes) -> int:
    """Length of the longest suffix of ``window`` occurring at least twice in it."""
    n = len(window)
    for length in range(n - 1, 0, -1):
        if window.find(window[n - length:]) < n - length:
            return length
    return 0


class RightmostSuffixTree:
    """One sliding-window suffix tree whose nodes hold their latest occurrence.

    Each leaf insertion rewrites the occurrence of every node on the path
    from the root, so ``path_updates`` can grow faster than the text.
    """

    def __init__(self, capacity: int):
        self.layer = Layer(capacity, rightmost=True)
        self.capacity = capacity

    @property
    def text(self) -> bytearray:
        return self.layer.text

    @property
    def path_updates(self) -> int:
        return self.layer.path_updates

    @property
    def time(self) -> int:
        return self.layer.front

    def push(self, symbol: int) -> None:
        self.layer.push(symbol)

    def _rightmost_start(self, slot: int, pattern: bytes) -> int:
        # Latest leaf below the locus.  Suffixes no longer than the longest
        # repeated suffix have no leaf yet, so scan that short tail too.
        layer = self.layer
        j = layer.occurrence_of(slot)
        front = layer.front
        tail_start = max(layer.tail, front - layer.lrs_length)
        k = bytes(layer.text[tail_start:front]).rfind(pattern)
        if k >= 0:
            j = max(j, tail_start + k)
        return j

    def rightmost(self, pattern: bytes) -> int:
        """Rightmost back-offset of ``pattern`` fully inside the window, or 0."""
        slot = self.layer.locate(pattern)
        if slot is None or not pattern:
            return 0
        return self.layer.front - self._rightmost_start(slot, bytes(pattern))

    def longest_match(self, text: bytes, i: int) -> MatchRef:
        """Longest prefix of ``text[i:]`` in the window and its rightmost offset."""
        length, slot = self.layer.match_prefix(text[i:i + self.capacity])
        if length == 0:
            return NO_MATCH
        j = self._rightmost_start(slot, text[i:i + length])
        return MatchRef(length, self.layer.front - j)


@dataclass
class RmstReport:
    """Parse-time answers and work counters of one baseline run."""

    refs: list[tuple[int, MatchRef]] = field(default_factory=list)
    seconds: float = 0.0
    path_updates: int = 0
    length: int = 0

    @property
    def ns_per_byte(self) -> float:
        return 1e9 * self.seconds / self.length if self.length else 0.0


def rmst_build_and_query(text: bytes, max_window: int, *, min_match: int = 2,
                         query: bool = True) -> RmstReport:
    """Build the baseline over ``text``, answering rightmost matches at greedy parse positions.

    At each parse position ``i`` the tree holds ``text[i - M:i]``; the
    answer is the longest prefix of ``text[i:]`` occurring there, with its
    rightmost back-offset (0 when even one symbol is new).  With
    ``query=False`` only the build is run and timed.
    """
    text = bytes(text)
    report = RmstReport(length=len(text))
    tree = RightmostSuffixTree(max_window)
    n = len(text)
    start = time.perf_counter()
    if query:
        i = 0
        while i < n:
            while tree.time < i:
                tree.push(text[tree.time])
            ref = tree.longest_match(text, i)
            report.refs.append((i, ref))
            i += ref.length if ref.length >= min_match else 1
    while tree.time < n:
        tree.push(text[tree.time])
    report.seconds = time.perf_counter() - start
    report.path_updates = tree.path_updates
    return report
