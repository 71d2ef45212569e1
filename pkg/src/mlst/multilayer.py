"""The multilayer suffix tree and its REP queries.

One :class:`~mlst.swtree.Layer` per cost class.  Layer ``a`` indexes the
symbols whose back-offset from the current time ``i`` is at most ``a``, so
the smallest layer containing a pattern pins down the cost class of the
pattern's rightmost occurrence.

Time ``i`` is the parse position.  The index may hold text beyond ``i``
(see :meth:`MultiLayerSuffixTree.extend`); for longest-previous-factor
queries each layer runs ahead of ``i`` while the suffix starting at ``i``
keeps repeating, with its window stretched to ``size + lookahead`` so the
dictionary part stays exactly ``text[i - size:i]``.
"""

from __future__ import annotations

from typing import NamedTuple

from .cost_model import CostModel, LayerSizes, bitlen, layer_sizes
from .swtree import Layer


class MatchRef(NamedTuple):
    """A ``(length, offset)`` answer; offset 0 means "no occurrence"."""

    length: int
    offset: int


NO_MATCH = MatchRef(0, 0)


class LookaheadError(RuntimeError):
    """A pattern query was made while layers hold text beyond time ``i``."""


class MultiLayerSuffixTree:
    """Sliding-window multilayer suffix tree over a byte stream.

    >>> idx = MultiLayerSuffixTree(CostModel.GAMMA, 6)
    >>> idx.sizes
    (1, 3, 6)
    >>> for b in b"ababaa":
    ...     idx.advance(b)
    >>> idx.rep_pattern(b"ba")
    MatchRef(length=2, offset=3)
    """

    def __init__(self, model: CostModel | str, max_window: int):
        if max_window < 1:
            raise ValueError("max_window must be >= 1")
        self.model = CostModel.parse(model)
        self.max_window = max_window
        self.layer_sizes: LayerSizes = layer_sizes(self.model, max_window)
        self.text = bytearray()
        self.time = 0
        self.layers = [Layer(a, self.text) for a in self.layer_sizes.sizes]
        # state of each layer just before its last lookahead push:
        # (front, lrs length, lrs start, occurrence)
        self._snap: list[tuple[int, int, int, int] | None] = [None] * len(self.layers)
        self._lpf_time = -1
        self._lpf: list[MatchRef] = []
        self._spf: list[MatchRef] = []

    @property
    def sizes(self) -> tuple[int, ...]:
        return self.layer_sizes.sizes

    def __len__(self) -> int:
        return len(self.layers)

    # ------------------------------------------------------------- feeding

    def extend(self, data: bytes) -> None:
        """Make ``data`` available as lookahead without advancing time."""
        self.text.extend(data)

    def advance(self, symbol: int | None = None) -> None:
        """Consume one symbol, either given or taken from the lookahead.

        Every layer is brought up to the new time before returning.
        """
        i = self.time
        if symbol is not None:
            if i == len(self.text):
                self.text.append(symbol)
            elif self.text[i] != symbol:
                raise ValueError(f"symbol {symbol} disagrees with lookahead at {i}")
        elif i >= len(self.text):
            raise ValueError("no lookahead symbol to advance over")
        self.time = i + 1
        for layer in self.layers:
            if layer.front == i and not layer.extension:
                layer.push()
            else:
                self._catch_up(layer)

    def skip(self, count: int) -> None:
        """Advance time by ``count`` buffered symbols; layers catch up lazily."""
        if count < 0 or self.time + count > len(self.text):
            raise ValueError("cannot skip past the buffered text")
        self.time += count

    def _catch_up(self, layer: Layer) -> None:
        i = self.time
        while layer.front < i:
            layer.extension = 0
            layer.push()
        layer.extension = layer.front - i
        layer.trim()

    @property
    def synchronized(self) -> bool:
        return all(layer.front == self.time for layer in self.layers)

    # ------------------------------------------------------------ queries

    def rep_pattern(self, pattern: bytes) -> MatchRef:
        """An occurrence of ``pattern`` in ``text[:i]`` of rightmost-equal cost.

        Binary search for the smallest layer holding ``pattern``; any
        occurrence there has the same cost class as the rightmost one.
        """
        if not pattern:
            raise ValueError("pattern must be nonempty")
        pattern = bytes(pattern)
        layers = self.layers
        for layer in layers:
            self._catch_up(layer)
            if layer.front != self.time:
                raise LookaheadError(
                    "layers hold lookahead text; pattern queries need a "
                    "synchronized index")
        if pattern not in layers[-1]:
            return MatchRef(len(pattern), 0)
        lo, hi = 0, len(layers) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if pattern in layers[mid]:
                hi = mid
            else:
                lo = mid + 1
        j = layers[lo].find(pattern)
        return MatchRef(len(pattern), self.time - j)

    def smallest_layer(self, pattern: bytes) -> int | None:
        """Index of the smallest layer containing ``pattern`` (linear scan)."""
        for x, layer in enumerate(self.layers):
            self._catch_up(layer)
            if pattern in layer:
                return x
        return None

    def _layer_lpf(self, x: int) -> MatchRef:
        layer = self.layers[x]
        self._catch_up(layer)
        i = self.time
        text_len = len(self.text)
        k = layer.front
        length, occ = layer.longest_repeated_suffix()
        start = k - length
        if start > i:
            # overshot on an earlier query: the answer is one symbol back
            return self._from_snapshot(x, k, i)
        while k < text_len:
            self._snap[x] = (k, length, start, occ)
            layer.extension = k + 1 - i
            layer.push()
            k += 1
            length, occ = layer.longest_repeated_suffix()
            start = k - length
            if start > i:
                return self._from_snapshot(x, k, i)
        if k == i:
            return NO_MATCH
        return MatchRef(k - i, start - occ)

    def _from_snapshot(self, x: int, k: int, i: int) -> MatchRef:
        snap = self._snap[x]
        assert snap is not None and snap[0] == k - 1, "lost lookahead snapshot"
        if k - 1 == i:
            return NO_MATCH
        _, _, start, occ = snap
        return MatchRef(k - 1 - i, start - occ)

    def _refresh(self) -> None:
        if self._lpf_time == self.time:
            return
        lpf = [self._layer_lpf(x) for x in range(len(self.layers))]
        spf: list[MatchRef] = []
        for ref in reversed(lpf):
            if ref.length == 0:
                break
            if spf and spf[-1].length == ref.length:
                spf[-1] = ref
            else:
                spf.append(ref)
        self._lpf = lpf
        self._spf = spf
        self._lpf_time = self.time

    def rep_lpf(self) -> MatchRef:
        """Longest previous factor at time ``i`` with a rightmost-equal-cost offset."""
        self._refresh()
        return self._spf[0] if self._spf else NO_MATCH

    def rep_spf(self) -> list[MatchRef]:
        """One ``(length, offset)`` per cost class among the LPF's prefixes.

        Lengths strictly decrease; a prefix of length ``m`` with
        ``spf[t+1].length < m <= spf[t].length`` is matched at
        ``spf[t].offset``.  The list is owned by the index.
        """
        self._refresh()
        return self._spf

    def layer_lpf(self) -> list[MatchRef]:
        """Per-layer longest previous factors at time ``i``, smallest layer first."""
        self._refresh()
        return list(self._lpf)

    # --------------------------------------------------------- accounting

    def dictionary_lengths(self) -> list[int]:
        """Symbols each layer keeps behind time ``i``."""
        return [min(self.time, layer.front) - layer.tail for layer in self.layers]

    def window_lengths(self) -> list[int]:
        """Symbols each layer indexes, lookahead included."""
        return [len(layer) for layer in self.layers]

    @property
    def tree_ops(self) -> int:
        return sum(layer.ops for layer in self.layers)

    @property
    def stale_repairs(self) -> int:
        return sum(layer.stale_repairs for layer in self.layers)

    def cost(self, offset: int) -> int:
        return bitlen(self.model, offset)
