"""Plain reference structures mirrored against the dynamic forests."""
import math

import numpy as np

INF = math.inf


class NaiveCapacityForest:
    def __init__(self, n):
        self.parent = [-1] * n
        self.cap = [INF] * n

    def root(self, v):
        while self.parent[v] != -1:
            v = self.parent[v]
        return v

    def path(self, v):
        out = []
        while self.parent[v] != -1:
            out.append(v)
            v = self.parent[v]
        return out

    def path_min(self, v):
        best, arg = INF, -1
        for x in self.path(v):
            # walking upward, so strict < keeps the deepest minimum
            if self.cap[x] < best:
                best, arg = self.cap[x], x
        return best, arg

    def path_add(self, v, delta):
        for x in self.path(v):
            self.cap[x] += delta


class NaiveCostForest:
    def __init__(self, n):
        self.parent = [-1] * n
        self.children = [set() for _ in range(n)]
        self.cost = np.full(n, np.inf)

    def link(self, child, parent):
        self.parent[child] = parent
        self.children[parent].add(child)

    def cut(self, child):
        self.children[self.parent[child]].discard(child)
        self.parent[child] = -1

    def subtree(self, v):
        out, stack = [], [v]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self.children[x])
        return out

    def in_subtree(self, v, root):
        while v != -1:
            if v == root:
                return True
            v = self.parent[v]
        return False

    def subtree_add(self, v, delta):
        idx = self.subtree(v)
        self.cost[idx] += delta

    def global_min(self):
        i = int(np.argmin(self.cost))
        return i, self.cost[i]


def replay_capacity(fast, n, ops, rng):
    """Drive ``fast`` (a CapacityForest on ``n`` vertices) and a naive
    mirror through ``ops`` random operations; returns the number of
    compared answers.  Every step performs exactly one operation."""
    from planarflow.errors import CycleCreation, DetachedVertex, ForestError, MissingArc

    slow = NaiveCapacityForest(n)
    compared = 0

    def expect(exc, fn, *args):
        try:
            fn(*args)
        except exc:
            return
        raise AssertionError(f"{fn.__name__}{args} did not raise {exc.__name__}")

    for _ in range(ops):
        kind = rng.random()
        v = rng.randrange(n)
        rooted = slow.parent[v] == -1
        if kind < 0.25:
            p = rng.randrange(n)
            if not rooted:
                expect(ForestError, fast.link, v, p, 0)
            elif slow.root(p) == v:
                expect(CycleCreation, fast.link, v, p, 0)
            else:
                c = rng.randint(0, 50)
                fast.link(v, p, c)
                slow.parent[v], slow.cap[v] = p, c
        elif kind < 0.35:
            if rooted:
                expect(MissingArc, fast.cut, v)
            else:
                fast.cut(v)
                slow.parent[v], slow.cap[v] = -1, INF
        elif kind < 0.45:
            c = rng.randint(0, 50)
            if rooted:
                expect(MissingArc, fast.replace, v, c)
            else:
                fast.replace(v, c)
                slow.cap[v] = c
        elif kind < 0.7:
            if rooted:
                expect(DetachedVertex, fast.path_min, v)
            else:
                assert fast.path_min(v) == slow.path_min(v)
            compared += 1
        elif kind < 0.9:
            d = rng.randint(-5, 5)
            if rooted:
                expect(DetachedVertex, fast.path_add, v, d)
            else:
                fast.path_add(v, d)
                slow.path_add(v, d)
                u = rng.choice(slow.path(v))
                assert fast.path_min(u) == slow.path_min(u)
            compared += 1
        else:
            assert fast.find_root(v) == slow.root(v)
            compared += 1
    assert fast.values() == [slow.cap[v] if slow.parent[v] != -1 else INF for v in range(n)]
    return compared


def replay_cost(fast, n, ops, rng):
    """Same as :func:`replay_capacity` for a CostForest."""
    from planarflow.errors import CycleCreation, EmptyLeafSet, ForestError, MissingArc

    slow = NaiveCostForest(n)
    compared = 0

    def check_min():
        if math.isinf(slow.cost.min()):
            try:
                fast.global_min()
            except EmptyLeafSet:
                return
            raise AssertionError("global_min on an empty leaf set did not raise")
        assert fast.global_min() == slow.global_min()

    for _ in range(ops):
        kind = rng.random()
        v = rng.randrange(n)
        rooted = slow.parent[v] == -1
        if kind < 0.2:
            p = rng.randrange(n)
            try:
                fast.link(v, p)
            except CycleCreation:
                assert rooted and slow.in_subtree(p, v)
            except ForestError:
                assert not rooted
            else:
                assert rooted and not slow.in_subtree(p, v)
                slow.link(v, p)
        elif kind < 0.3:
            try:
                fast.cut(v)
            except MissingArc:
                assert rooted
            else:
                assert not rooted
                slow.cut(v)
        elif kind < 0.5:
            c = None if rng.random() < 0.2 else rng.randint(-50, 50)
            fast.set_cost(v, c)
            slow.cost[v] = INF if c is None else c
        elif kind < 0.7:
            d = rng.randint(-5, 5)
            fast.subtree_add(v, d)
            slow.subtree_add(v, d)
            check_min()
            compared += 1
        elif kind < 0.9:
            check_min()
            compared += 1
        else:
            u = rng.randrange(n)
            assert fast.in_subtree(u, v) == slow.in_subtree(u, v)
            compared += 1
    return compared
