"""Dynamic rooted forests used while balancing excess in the fat-tree solver.

:class:`CapacityForest` is a link-cut tree.  Vertex ``x`` stores the capacity
of the arc from ``x`` to its parent; queries report the minimum over the path
from a vertex to its root and add a constant along such a path.

:class:`CostForest` is an Euler-tour tree.  The whole forest lives in one
splay-tree sequence of open/close tokens, so a subtree is a contiguous range.
Designated vertices carry a cost; the structure reports the cheapest
designated vertex and adds constants to whole subtrees.

Every operation runs in O(log n) amortized time.
"""
from __future__ import annotations

import math

from .errors import CycleCreation, DetachedVertex, EmptyLeafSet, ForestError, MissingArc

INF = math.inf


class CapacityForest:
    def __init__(self, n: int):
        self.n = n
        self.parent = [-1] * n
        self._left = [-1] * n
        self._right = [-1] * n
        self._up = [-1] * n          # splay parent or path-parent
        self._val = [INF] * n
        self._min = [INF] * n
        self._arg = list(range(n))
        self._lazy = [0] * n

    @classmethod
    def from_parents(cls, parents, capacities):
        """Build in linear time; ``capacities[x]`` is ignored for roots."""
        forest = cls(len(parents))
        for x, p in enumerate(parents):
            if p != -1:
                forest.parent[x] = p
                forest._up[x] = p
                forest._val[x] = forest._min[x] = capacities[x]
        return forest

    # -- splay machinery -------------------------------------------------

    def _is_root(self, x):
        p = self._up[x]
        return p == -1 or (self._left[p] != x and self._right[p] != x)

    def _push(self, x):
        d = self._lazy[x]
        if d:
            for c in (self._left[x], self._right[x]):
                if c != -1:
                    self._val[c] += d
                    self._min[c] += d
                    self._lazy[c] += d
            self._lazy[x] = 0

    def _pull(self, x):
        # splay order is root-to-leaf; ties go to the deepest arc
        left, right = self._left[x], self._right[x]
        if left != -1:
            m, a = self._min[left], self._arg[left]
            if self._val[x] <= m:
                m, a = self._val[x], x
        else:
            m, a = self._val[x], x
        if right != -1 and self._min[right] <= m:
            m, a = self._min[right], self._arg[right]
        self._min[x], self._arg[x] = m, a

    def _rotate(self, x):
        left, right, up = self._left, self._right, self._up
        p = up[x]
        g = up[p]
        p_was_root = self._is_root(p)
        if left[p] == x:
            b = right[x]
            left[p] = b
            right[x] = p
        else:
            b = left[x]
            right[p] = b
            left[x] = p
        if b != -1:
            up[b] = p
        if not p_was_root:
            if left[g] == p:
                left[g] = x
            else:
                right[g] = x
        up[x] = g
        up[p] = x
        self._pull(p)
        self._pull(x)

    def _splay(self, x):
        path = [x]
        y = x
        while not self._is_root(y):
            y = self._up[y]
            path.append(y)
        for y in reversed(path):
            self._push(y)
        while not self._is_root(x):
            p = self._up[x]
            if not self._is_root(p):
                g = self._up[p]
                if (self._left[g] == p) == (self._left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x):
        last = -1
        y = x
        while y != -1:
            self._splay(y)
            self._right[y] = last
            self._pull(y)
            last = y
            y = self._up[y]
        self._splay(x)

    # -- public operations -----------------------------------------------

    def find_root(self, x: int) -> int:
        self._access(x)
        while True:
            self._push(x)
            if self._left[x] == -1:
                break
            x = self._left[x]
        self._splay(x)
        return x

    def link(self, child: int, parent: int, capacity) -> None:
        if self.parent[child] != -1:
            raise ForestError(f"vertex {child} already has a parent")
        if self.find_root(parent) == child:
            raise CycleCreation(f"linking {child} under {parent} closes a cycle")
        self._access(child)
        self._val[child] = capacity
        self._pull(child)
        self._up[child] = parent
        self.parent[child] = parent

    def cut(self, child: int) -> None:
        if self.parent[child] == -1:
            raise MissingArc(f"vertex {child} has no parent arc")
        self._access(child)
        left = self._left[child]
        self._up[left] = -1
        self._left[child] = -1
        self._val[child] = INF
        self._pull(child)
        self.parent[child] = -1

    def replace(self, child: int, capacity) -> None:
        """Swap the arc to the parent for a parallel one with ``capacity``."""
        if self.parent[child] == -1:
            raise MissingArc(f"vertex {child} has no parent arc")
        self._access(child)
        self._val[child] = capacity
        self._pull(child)

    def capacity(self, child: int):
        if self.parent[child] == -1:
            raise MissingArc(f"vertex {child} has no parent arc")
        self._access(child)
        return self._val[child]

    def values(self) -> list:
        """Capacity of every vertex's parent arc (INF for roots), in O(n)."""
        for x in range(self.n):
            if self._is_root(x):
                stack = [x]
                while stack:
                    y = stack.pop()
                    self._push(y)
                    for c in (self._left[y], self._right[y]):
                        if c != -1:
                            stack.append(c)
        return [self._val[x] if self.parent[x] != -1 else INF for x in range(self.n)]

    def path_min(self, x: int):
        """``(capacity, vertex)`` of the minimum arc on the root path of ``x``;
        the arc is identified by its child endpoint, deepest under ties."""
        if self.parent[x] == -1:
            raise DetachedVertex(f"vertex {x} is a root")
        self._access(x)
        return self._min[x], self._arg[x]

    def path_add(self, x: int, delta) -> None:
        if self.parent[x] == -1:
            raise DetachedVertex(f"vertex {x} is a root")
        self._access(x)
        self._val[x] += delta
        self._min[x] += delta
        self._lazy[x] += delta


class CostForest:
    def __init__(self, n: int):
        self._init_arrays(n)
        self._root = self._build(list(range(2 * n)))

    @classmethod
    def from_parents(cls, parents, costs=None):
        """Build in linear time.  ``costs[v]`` is None for undesignated ``v``."""
        forest = cls.__new__(cls)
        n = len(parents)
        forest._init_arrays(n)
        forest.parent = list(parents)
        children = [[] for _ in range(n)]
        for v, p in enumerate(parents):
            if p != -1:
                children[p].append(v)
        if costs is not None:
            for v, c in enumerate(costs):
                if c is not None:
                    forest._val[2 * v] = forest._min[2 * v] = c
        order = []
        for r in range(n):
            if parents[r] != -1:
                continue
            stack = [r]
            while stack:
                v = stack.pop()
                if v >= 0:
                    order.append(2 * v)
                    stack.append(~v)
                    stack.extend(reversed(children[v]))
                else:
                    order.append(2 * ~v + 1)
        if len(order) != 2 * n:
            raise CycleCreation("parent pointers contain a cycle")
        forest._root = forest._build(order)
        return forest

    def _init_arrays(self, n):
        self.n = n
        self.parent = [-1] * n
        size = 2 * n
        self._left = [-1] * size
        self._right = [-1] * size
        self._up = [-1] * size
        self._size = [1] * size
        self._val = [INF] * size
        self._min = [INF] * size
        self._arg = [t >> 1 for t in range(size)]
        self._lazy = [0] * size

    def _build(self, tokens):
        def build(lo, hi, up):
            if lo >= hi:
                return -1
            mid = (lo + hi) // 2
            x = tokens[mid]
            self._up[x] = up
            self._left[x] = build(lo, mid, x)
            self._right[x] = build(mid + 1, hi, x)
            self._pull(x)
            return x
        return build(0, len(tokens), -1)

    # -- splay machinery -------------------------------------------------

    def _apply(self, x, d):
        self._val[x] += d
        self._min[x] += d
        self._lazy[x] += d

    def _push(self, x):
        d = self._lazy[x]
        if d:
            if self._left[x] != -1:
                self._apply(self._left[x], d)
            if self._right[x] != -1:
                self._apply(self._right[x], d)
            self._lazy[x] = 0

    def _pull(self, x):
        m, a = self._val[x], x >> 1
        s = 1
        for c in (self._left[x], self._right[x]):
            if c != -1:
                s += self._size[c]
                cm = self._min[c]
                if cm < m or (cm == m and self._arg[c] < a):
                    m, a = cm, self._arg[c]
        self._min[x], self._arg[x], self._size[x] = m, a, s

    def _rotate(self, x):
        left, right, up = self._left, self._right, self._up
        p = up[x]
        g = up[p]
        if left[p] == x:
            b = right[x]
            left[p] = b
            right[x] = p
        else:
            b = left[x]
            right[p] = b
            left[x] = p
        if b != -1:
            up[b] = p
        if g != -1:
            if left[g] == p:
                left[g] = x
            else:
                right[g] = x
        up[x] = g
        up[p] = x
        self._pull(p)
        self._pull(x)

    def _splay(self, x):
        path = [x]
        y = self._up[x]
        while y != -1:
            path.append(y)
            y = self._up[y]
        for y in reversed(path):
            self._push(y)
        up, left = self._up, self._left
        while up[x] != -1:
            p = up[x]
            g = up[p]
            if g != -1:
                if (left[g] == p) == (left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _position(self, t):
        self._splay(t)
        left = self._left[t]
        return self._size[left] if left != -1 else 0

    def _split3(self, a, b):
        """Split the sequence into (before a, a..b, after b)."""
        self._splay(a)
        before = self._left[a]
        if before != -1:
            self._up[before] = -1
            self._left[a] = -1
            self._pull(a)
        self._splay(b)
        after = self._right[b]
        if after != -1:
            self._up[after] = -1
            self._right[b] = -1
            self._pull(b)
        return before, b, after

    def _join(self, a, b):
        if a == -1:
            return b
        if b == -1:
            return a
        x = a
        while True:
            self._push(x)
            if self._right[x] == -1:
                break
            x = self._right[x]
        self._splay(x)
        self._right[x] = b
        self._up[b] = x
        self._pull(x)
        return x

    # -- public operations -----------------------------------------------

    def in_subtree(self, v: int, root: int) -> bool:
        """True when ``v`` lies in the subtree of ``root`` (inclusive)."""
        lo = self._position(2 * root)
        hi = self._position(2 * root + 1)
        pos = self._position(2 * v)
        self._root = 2 * v
        return lo <= pos <= hi

    def link(self, child: int, parent: int) -> None:
        if self.parent[child] != -1:
            raise ForestError(f"vertex {child} already has a parent")
        if self.in_subtree(parent, child):
            raise CycleCreation(f"linking {child} under {parent} closes a cycle")
        before, mid, after = self._split3(2 * child, 2 * child + 1)
        self._join(before, after)
        anchor = 2 * parent
        self._splay(anchor)
        tail = self._right[anchor]
        if tail != -1:
            self._up[tail] = -1
        joined = self._join(mid, tail)
        self._right[anchor] = joined
        self._up[joined] = anchor
        self._pull(anchor)
        self._root = anchor
        self.parent[child] = parent

    def cut(self, child: int) -> None:
        if self.parent[child] == -1:
            raise MissingArc(f"vertex {child} has no parent arc")
        before, mid, after = self._split3(2 * child, 2 * child + 1)
        self._root = self._join(self._join(before, after), mid)
        self.parent[child] = -1

    def subtree_add(self, v: int, delta) -> None:
        before, mid, after = self._split3(2 * v, 2 * v + 1)
        self._apply(mid, delta)
        self._root = self._join(self._join(before, mid), after)

    def set_cost(self, v: int, cost) -> None:
        """Designate ``v`` with ``cost``; ``None`` removes the designation."""
        t = 2 * v
        self._splay(t)
        self._val[t] = INF if cost is None else cost
        self._pull(t)
        self._root = t

    def cost(self, v: int):
        t = 2 * v
        self._splay(t)
        self._root = t
        c = self._val[t]
        return None if c == INF else c

    def global_min(self):
        """``(vertex, cost)`` of the cheapest designated vertex; ties go to
        the smallest vertex id."""
        r = self._root
        if r == -1 or self._min[r] == INF:
            raise EmptyLeafSet("no designated vertex with finite cost")
        return self._arg[r], self._min[r]
