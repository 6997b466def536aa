"""Flow networks, darts, residual networks and optimality certificates.

All data are Python integers; an uncapacitated arc has upper bound
``INF`` (``math.inf``), never a large number.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .embedded import EmbeddedGraph
from .errors import CapacityViolated, InvalidNetwork

INF = math.inf


@dataclass
class FlowNetwork:
    n: int
    tails: list[int]
    heads: list[int]
    lower: list[int]
    upper: list            # int or INF
    cost: list[int]
    balance: list[int]
    embedding: EmbeddedGraph | None = None

    def __post_init__(self):
        m = len(self.tails)
        if not (len(self.heads) == len(self.lower) == len(self.upper) == len(self.cost) == m):
            raise InvalidNetwork("per-arc lists differ in length")
        if len(self.balance) != self.n:
            raise InvalidNetwork("balance list length differs from vertex count")
        for a in range(m):
            if not (0 <= self.tails[a] < self.n and 0 <= self.heads[a] < self.n):
                raise InvalidNetwork(f"arc {a} endpoint out of range")
            if not 0 <= self.lower[a] <= self.upper[a]:
                raise InvalidNetwork(f"arc {a} violates 0 <= lower <= upper")
        if sum(self.balance) != 0:
            raise InvalidNetwork("balances do not sum to zero")

    @property
    def m(self) -> int:
        return len(self.tails)

    @classmethod
    def from_arcs(cls, n, arcs, balance=None, embedding=None):
        """Build from ``(tail, head, lower, upper, cost)`` tuples."""
        arcs = list(arcs)
        return cls(
            n=n,
            tails=[a[0] for a in arcs],
            heads=[a[1] for a in arcs],
            lower=[a[2] for a in arcs],
            upper=[a[3] for a in arcs],
            cost=[a[4] for a in arcs],
            balance=list(balance) if balance is not None else [0] * n,
            embedding=embedding,
        )

    def is_circulation(self) -> bool:
        return all(b == 0 for b in self.balance)


@dataclass
class Dart:
    tail: int
    head: int
    capacity: object       # int or INF
    cost: int

    @property
    def capacitated(self) -> bool:
        return self.capacity != INF


@dataclass
class DartTable:
    forward: list[Dart]
    backward: list[Dart]


def build_darts(net: FlowNetwork) -> DartTable:
    fwd, bwd = [], []
    for a in range(net.m):
        t, h = net.tails[a], net.heads[a]
        fwd.append(Dart(t, h, net.upper[a], net.cost[a]))
        bwd.append(Dart(h, t, -net.lower[a], -net.cost[a]))
    return DartTable(forward=fwd, backward=bwd)


@dataclass
class InstanceStats:
    n: int
    m: int
    U: int
    C: int


def instance_stats(net: FlowNetwork) -> InstanceStats:
    finite = [u for u in net.upper if u != INF]
    U = max([0, *finite, *net.lower, *(abs(b) for b in net.balance)])
    C = max([0, *(abs(c) for c in net.cost)])
    return InstanceStats(n=net.n, m=net.m, U=U, C=C)


@dataclass
class FeasibilityReport:
    balance_violations: list[tuple[int, int]] = field(default_factory=list)
    capacity_violations: list[tuple[int, int, object]] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return not self.balance_violations and not self.capacity_violations


def excesses(net: FlowNetwork, flow) -> list[int]:
    """``b(v) + inflow(v) - outflow(v)`` for every vertex."""
    ex = list(net.balance)
    for a in range(net.m):
        ex[net.tails[a]] -= flow[a]
        ex[net.heads[a]] += flow[a]
    return ex


def check_feasible(net: FlowNetwork, flow) -> FeasibilityReport:
    """Report every violated balance constraint as ``(vertex, excess)`` and
    every violated capacity constraint as ``(arc, flow, bound)``."""
    report = FeasibilityReport()
    for a in range(net.m):
        f = flow[a]
        if f < net.lower[a]:
            report.capacity_violations.append((a, f, net.lower[a]))
        elif f > net.upper[a]:
            report.capacity_violations.append((a, f, net.upper[a]))
    for v, e in enumerate(excesses(net, flow)):
        if e != 0:
            report.balance_violations.append((v, e))
    return report


def flow_cost(net: FlowNetwork, flow) -> int:
    return sum(c * f for c, f in zip(net.cost, flow))


@dataclass
class ResidualNetwork:
    n: int
    tails: list[int]
    heads: list[int]
    capacity: list
    cost: list[int]
    origin: list[int]          # originating arc
    forward: list[bool]        # False for the reversed copy e^-1


def residual(net: FlowNetwork, flow) -> ResidualNetwork:
    res = ResidualNetwork(net.n, [], [], [], [], [], [])
    for a in range(net.m):
        f, lo, up = flow[a], net.lower[a], net.upper[a]
        if f < lo or f > up:
            raise CapacityViolated(f"arc {a} carries {f} outside [{lo}, {up}]")
        t, h, c = net.tails[a], net.heads[a], net.cost[a]
        if f < up:
            _push_arc(res, t, h, up - f, c, a, True)
        if f > lo:
            _push_arc(res, h, t, f - lo, -c, a, False)
    return res


def _push_arc(res, t, h, cap, c, a, fwd):
    res.tails.append(t)
    res.heads.append(h)
    res.capacity.append(cap)
    res.cost.append(c)
    res.origin.append(a)
    res.forward.append(fwd)


def shortest_paths(n, tails, heads, lengths, source=None):
    """Label-correcting shortest paths that may use negative lengths.

    With ``source=None`` every vertex starts at distance 0 (a virtual source
    joined to all vertices).  Returns ``(dist, pred_arc, cycle)``; ``cycle``
    is a list of arc indices forming a negative cycle, or None.  Unreachable
    vertices get distance ``INF``.
    """
    out = [[] for _ in range(n)]
    for a in range(len(tails)):
        out[tails[a]].append(a)
    if source is None:
        dist = [0] * n
        queue = deque(range(n))
        queued = [True] * n
    else:
        dist = [INF] * n
        dist[source] = 0
        queue = deque([source])
        queued = [False] * n
        queued[source] = True
    pred = [-1] * n
    budget = n
    while queue:
        v = queue.popleft()
        queued[v] = False
        dv = dist[v]
        for a in out[v]:
            w = heads[a]
            nd = dv + lengths[a]
            if nd < dist[w]:
                dist[w] = nd
                pred[w] = a
                budget -= 1
                if budget <= 0:
                    # every cycle of the predecessor graph is negative
                    cycle = _pred_cycle(pred, tails, n)
                    if cycle is not None:
                        return dist, pred, cycle
                    budget = n
                if not queued[w]:
                    queued[w] = True
                    queue.append(w)
    return dist, pred, None


def _pred_cycle(pred, tails, n):
    stamp = [0] * n
    for s in range(n):
        u = s
        while u != -1 and stamp[u] == 0:
            stamp[u] = s + 1
            a = pred[u]
            u = tails[a] if a != -1 else -1
        if u != -1 and stamp[u] == s + 1:
            cycle = []
            v = u
            while True:
                a = pred[v]
                cycle.append(a)
                v = tails[a]
                if v == u:
                    break
            cycle.reverse()
            return cycle
    return None


def find_negative_cycle(n, tails, heads, lengths):
    return shortest_paths(n, tails, heads, lengths)[2]


@dataclass
class Certificate:
    optimal: bool
    report: FeasibilityReport
    cycle: list[tuple[int, bool]] | None = None   # (arc, forward) residual arcs

    def __bool__(self):
        return self.optimal


def certify_optimal(net: FlowNetwork, flow) -> Certificate:
    report = check_feasible(net, flow)
    if report.capacity_violations:
        return Certificate(False, report)
    res = residual(net, flow)
    cycle = find_negative_cycle(res.n, res.tails, res.heads, res.cost)
    if cycle is not None:
        return Certificate(False, report, [(res.origin[a], res.forward[a]) for a in cycle])
    return Certificate(report.feasible, report)


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class Outcome:
    """Result of a solver: ``status`` is one of optimal/infeasible/unbounded.

    ``witness`` carries the evidence for non-optimal outcomes (a negative
    cycle, saturated arcs, or the stranded excess).
    """
    status: str
    flow: list[int] | None = None
    cost: int | None = None
    witness: object = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL
