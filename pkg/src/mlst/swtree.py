"""Online suffix tree over a sliding window of bytes.

Ukkonen's construction with Larsson's leaf deletion: the tree always indexes
exactly the factors of ``text[tail:front]``.  The active point is kept at the
longest repeated suffix (LRS) of the window, which is what the multilayer
index reads after every step.

Nodes are stored in parallel lists indexed by node id (0 is the root).  A
child slot holds either an internal node id (>= 0) or ``~s`` for the leaf of
the suffix starting at global position ``s``.  ``pos[v]`` is the global start
of one occurrence of the string spelled by ``v``; edge labels are read through
it, so the text buffer must keep every byte pushed so far.

Occurrence positions are kept inside the window with Larsson's credit scheme.
If a position still turns out to be stale when queried, the query walks down
to a live occurrence and refreshes it (counted in ``stale_repairs``).
"""

from __future__ import annotations

NO_POSITION = -1


class Layer:
    """Sliding-window suffix tree of fixed capacity.

    The window holds the last ``capacity + extension`` symbols; ``extension``
    is raised by an owner that wants the layer to look ahead of its own
    notion of time without losing older dictionary symbols.

    With ``rightmost=True`` every internal node holds the most recent leaf
    start in its subtree, refreshed along the whole root path on each leaf
    insertion (the costly baseline); ``path_updates`` counts those writes.
    """

    def __init__(self, capacity: int, text: bytearray | None = None, *, rightmost: bool = False):
        if capacity < 1:
            raise ValueError("layer capacity must be >= 1")
        self.capacity = capacity
        self.extension = 0
        self.text = bytearray() if text is None else text
        self.rightmost = rightmost
        self.front = 0
        self.tail = 0
        self._depth = [0]
        self._pos = [0]
        self._parent = [-1]
        self._link = [0]
        self._credit = [0]
        self._kids: list[dict[int, int]] = [{}]
        self._free: list[int] = []
        self._leaf_parent: dict[int, int] = {}
        self._an = 0
        self._al = 0
        self.ops = 0
        self.path_updates = 0
        self.stale_repairs = 0

    # ------------------------------------------------------------------ info

    def __len__(self) -> int:
        return self.front - self.tail

    @property
    def window(self) -> bytes:
        return bytes(self.text[self.tail:self.front])

    @property
    def node_count(self) -> int:
        """Live nodes: root, internal nodes and leaves."""
        return len(self._depth) - len(self._free) + len(self._leaf_parent)

    @property
    def lrs_length(self) -> int:
        return self._depth[self._an] + self._al

    # --------------------------------------------------------------- updates

    def push(self, symbol: int | None = None, position: int | None = None) -> None:
        """Append one symbol (or consume the next buffered one) and slide.

        ``position``, if given, must equal the number of symbols pushed so far.
        """
        if position is not None and position != self.front:
            raise ValueError(f"push at position {position}, layer is at {self.front}")
        text = self.text
        if symbol is not None:
            if self.front == len(text):
                text.append(symbol)
            elif text[self.front] != symbol:
                raise ValueError(
                    f"symbol {symbol} disagrees with buffered text at {self.front}")
        elif self.front >= len(text):
            raise ValueError("no buffered symbol to push")
        self._insert()
        limit = self.capacity + self.extension
        while self.front - self.tail > limit:
            self._delete_oldest()

    def set_extension(self, extra: int) -> None:
        if extra < 0:
            raise ValueError("extension must be >= 0")
        self.extension = extra

    def trim(self) -> None:
        """Evict down to ``capacity + extension`` without pushing."""
        limit = self.capacity + self.extension
        while self.front - self.tail > limit:
            self._delete_oldest()

    def _new_node(self, depth: int, pos: int, parent: int) -> int:
        if self._free:
            v = self._free.pop()
            self._depth[v] = depth
            self._pos[v] = pos
            self._parent[v] = parent
            self._link[v] = 0
            self._credit[v] = 0
            self._kids[v] = {}
            return v
        self._depth.append(depth)
        self._pos.append(pos)
        self._parent.append(parent)
        self._link.append(0)
        self._credit.append(0)
        self._kids.append({})
        return len(self._depth) - 1

    def _announce(self, v: int, s: int) -> None:
        """Node ``v`` gained the leaf ``s`` somewhere below it."""
        pos = self._pos
        if self.rightmost:
            parent = self._parent
            n = 0
            while v:
                pos[v] = s
                v = parent[v]
                n += 1
            self.path_updates += n
            return
        credit = self._credit
        parent = self._parent
        while v:
            if pos[v] < s:
                pos[v] = s
            else:
                s = pos[v]
            self.ops += 1
            if not credit[v]:
                credit[v] = 1
                return
            credit[v] = 0
            v = parent[v]

    def _insert(self) -> None:
        text = self.text
        depth = self._depth
        pos = self._pos
        kids = self._kids
        link = self._link
        f = self.front
        c = text[f]
        an = self._an
        al = self._al
        prev = 0
        ops = 0
        while True:
            ops += 1
            if al == 0:
                if c in kids[an]:
                    if prev:
                        link[prev] = an
                    al = 1
                    f += 1
                    child = kids[an][c]
                    if child >= 0 and depth[child] - depth[an] == 1:
                        an = child
                        al = 0
                    break
                s = f - depth[an]
                kids[an][c] = ~s
                self._leaf_parent[s] = an
                if prev:
                    link[prev] = an
                    prev = 0
                if an == 0:
                    f += 1
                    break
                self._announce(an, s)
                an = link[an]
                continue
            dn = depth[an]
            key = text[f - al]
            child = kids[an][key]
            if child < 0:
                cp = ~child
            else:
                cp = pos[child]
            if text[cp + dn + al] == c:
                if prev:
                    link[prev] = an
                al += 1
                f += 1
                if child >= 0 and al == depth[child] - dn:
                    an = child
                    al = 0
                break
            # split the edge and hang a new leaf off the split point
            s = f - dn - al
            m = self._new_node(dn + al, s, an)
            kids[an][key] = m
            mk = kids[m]
            mk[text[cp + dn + al]] = child
            mk[c] = ~s
            if child < 0:
                self._leaf_parent[cp] = m
            else:
                self._parent[child] = m
            self._leaf_parent[s] = m
            self._announce(m, s)
            if prev:
                link[prev] = m
            prev = m
            if an == 0:
                al -= 1
            else:
                an = link[an]
            # walk down so the active point is canonical again (suffix ends at f)
            while al:
                child = kids[an][text[f - al]]
                if child < 0:
                    break
                el = depth[child] - depth[an]
                if al < el:
                    break
                an = child
                al -= el
        self.front += 1
        self._an = an
        self._al = al
        self.ops += ops

    def _canonize(self) -> None:
        text = self.text
        depth = self._depth
        kids = self._kids
        f = self.front
        an = self._an
        al = self._al
        while al:
            child = kids[an][text[f - al]]
            if child < 0:
                break
            el = depth[child] - depth[an]
            if al < el:
                break
            an = child
            al -= el
        self._an = an
        self._al = al

    def _delete_oldest(self) -> None:
        t = self.tail
        text = self.text
        depth = self._depth
        kids = self._kids
        v = self._leaf_parent.pop(t)
        self.tail = t + 1
        self.ops += 1
        an = self._an
        al = self._al
        f = self.front
        if al and an == v and kids[v][text[f - al]] == ~t:
            # The LRS only recurred inside the evicted suffix: it becomes a
            # leaf in place of the old one, and the next shorter suffix takes
            # over as LRS.
            s = f - depth[v] - al
            kids[v][text[f - al]] = ~s
            self._leaf_parent[s] = v
            if v:
                self._announce(v, s)
            if an == 0:
                self._al = al - 1
            else:
                self._an = self._link[an]
            self._canonize()
            return
        vk = kids[v]
        del vk[text[t + depth[v]]]
        if v == 0:
            return
        if len(vk) == 1:
            # unary node: splice it out
            (w,) = vk.values()
            u = self._parent[v]
            pos = self._pos
            key = text[pos[v] + depth[u]]
            kids[u][key] = w
            if w < 0:
                self._leaf_parent[~w] = u
                wpos = ~w
            else:
                self._parent[w] = u
                wpos = pos[w]
            if an == v:
                self._an = u
                self._al = al + depth[v] - depth[u]
            if self._credit[v] and u and not self.rightmost:
                self._announce(u, max(pos[v], wpos))
            self._free.append(v)
            kids[v] = {}
            return
        pos = self._pos
        if pos[v] <= t and not self.rightmost:
            for child in vk.values():
                cand = ~child if child < 0 else pos[child]
                if cand > t:
                    pos[v] = cand
                    break

    # --------------------------------------------------------------- queries

    def _fresh(self, v: int) -> int:
        """A live occurrence start of node ``v``'s string."""
        pos = self._pos
        p = pos[v]
        tail = self.tail
        if p >= tail:
            return p
        self.stale_repairs += 1
        kids = self._kids
        node = v
        while True:
            fallback = -1
            for child in kids[node].values():
                if child < 0:
                    p = ~child
                    break
                if pos[child] >= tail:
                    p = pos[child]
                    break
                fallback = child
            else:
                node = fallback
                continue
            break
        pos[v] = p
        return p

    def occurrence_of(self, slot: int) -> int:
        return ~slot if slot < 0 else self._fresh(slot)

    def longest_repeated_suffix(self) -> tuple[int, int]:
        """``(length, start)`` of one earlier occurrence of the LRS.

        Returns ``(0, NO_POSITION)`` when no nonempty suffix repeats.
        """
        an = self._an
        al = self._al
        length = self._depth[an] + al
        if length == 0:
            return 0, NO_POSITION
        if al == 0:
            return length, self._fresh(an)
        child = self._kids[an][self.text[self.front - al]]
        return length, (~child if child < 0 else self._fresh(child))

    def locate(self, pattern: bytes) -> int | None:
        """Deepest slot whose path spells ``pattern`` as a prefix, or None.

        Returns 0 (the root) for the empty pattern.
        """
        text = self.text
        depth = self._depth
        pos = self._pos
        kids = self._kids
        front = self.front
        node = 0
        i = 0
        n = len(pattern)
        while i < n:
            child = kids[node].get(pattern[i])
            if child is None:
                return None
            dn = depth[node]
            if child < 0:
                start = ~child + dn
                end = front
            else:
                start = pos[child] + dn
                end = pos[child] + depth[child]
            take = min(end - start, n - i)
            if text[start:start + take] != pattern[i:i + take]:
                return None
            i += take
            if i == n or child < 0:
                return child if i == n else None
            node = child
        return node

    def match_prefix(self, pattern: bytes) -> tuple[int, int]:
        """``(length, slot)`` for the longest prefix of ``pattern`` in the window.

        ``slot`` is the child slot below the locus (0 when length is 0).
        """
        text = self.text
        depth = self._depth
        pos = self._pos
        kids = self._kids
        front = self.front
        node = 0
        slot = 0
        i = 0
        n = len(pattern)
        while i < n:
            child = kids[node].get(pattern[i])
            if child is None:
                return i, slot
            dn = depth[node]
            if child < 0:
                start = ~child + dn
                end = front
            else:
                start = pos[child] + dn
                end = pos[child] + depth[child]
            stop = min(end - start, n - i)
            k = 1
            while k < stop and text[start + k] == pattern[i + k]:
                k += 1
            i += k
            slot = child
            if k < end - start or child < 0:
                return i, slot
            node = child
        return i, slot

    def find(self, pattern: bytes) -> int | None:
        """Global start of an in-window occurrence of ``pattern``, or None.

        The empty pattern is found at the current front.
        """
        if not pattern:
            return self.front
        slot = self.locate(pattern)
        if slot is None:
            return None
        return self.occurrence_of(slot)

    def __contains__(self, pattern: bytes) -> bool:
        return not pattern or self.locate(pattern) is not None

    def check(self) -> None:
        """Verify structural invariants; raises AssertionError. For tests."""
        text = self.text
        depth = self._depth
        seen_leaves = set()
        stack = [0]
        nodes = 0
        while stack:
            v = stack.pop()
            nodes += 1
            if v and len(self._kids[v]) < 2:
                raise AssertionError(f"internal node {v} has {len(self._kids[v])} children")
            for key, child in self._kids[v].items():
                if child < 0:
                    s = ~child
                    assert self.tail <= s < self.front, (s, self.tail, self.front)
                    assert self._leaf_parent[s] == v
                    assert text[s + depth[v]] == key
                    seen_leaves.add(s)
                else:
                    assert self._parent[child] == v
                    assert depth[child] > depth[v]
                    assert text[self._pos[child] + depth[v]] == key
                    stack.append(child)
        assert seen_leaves == set(self._leaf_parent), "leaf bookkeeping out of sync"
        assert self.node_count == nodes + len(seen_leaves)
