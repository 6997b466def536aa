"""Reference min-cost flow solvers for arbitrary directed multigraphs.

These are deliberately plain: successive shortest paths with label-correcting
searches, and brute-force enumeration for tiny instances.  Every other part
of the package is checked against them.
"""
from __future__ import annotations

import itertools
from collections import deque

from .errors import TooLarge
from .network import (
    INF,
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    FlowNetwork,
    Outcome,
    find_negative_cycle,
    flow_cost,
)


def solve_reference(net: FlowNetwork) -> Outcome:
    m = net.m
    # shift lower bounds away: f = lower + g
    supply = list(net.balance)
    for a in range(m):
        supply[net.tails[a]] -= net.lower[a]
        supply[net.heads[a]] += net.lower[a]
    room = [net.upper[a] - net.lower[a] for a in range(m)]

    uncapped = [a for a in range(m) if room[a] == INF]
    cycle = find_negative_cycle(
        net.n,
        [net.tails[a] for a in uncapped],
        [net.heads[a] for a in uncapped],
        [net.cost[a] for a in uncapped],
    )
    big = sum(s for s in supply if s > 0) + sum(r for r in room if r != INF) + 1
    room = [big if r == INF else r for r in room]

    if cycle is not None:
        g = _successive_shortest_paths(net.n, net.tails, net.heads, room, [0] * m, supply)
        if g is None:
            return Outcome(INFEASIBLE)
        return Outcome(UNBOUNDED, witness=[uncapped[i] for i in cycle])

    g = _successive_shortest_paths(net.n, net.tails, net.heads, room, net.cost, supply)
    if g is None:
        return Outcome(INFEASIBLE)
    flow = [net.lower[a] + g[a] for a in range(m)]
    return Outcome(OPTIMAL, flow=flow, cost=flow_cost(net, flow))


def _successive_shortest_paths(n, tails, heads, cap, cost, supply):
    """Min-cost ``g`` with ``0 <= g <= cap`` and out - in = supply, or None."""
    m = len(tails)
    source, sink = n, n + 1
    # residual arc 2a is the original direction, 2a + 1 its reversal
    to, rcap, rcost = [], [], []
    out = [[] for _ in range(n + 2)]
    g = [0] * m

    def add(u, v, c, w):
        out[u].append(len(to))
        to.append(v)
        rcap.append(c)
        rcost.append(w)
        out[v].append(len(to))
        to.append(u)
        rcap.append(0)
        rcost.append(-w)

    for a in range(m):
        add(tails[a], heads[a], cap[a], cost[a])
    residual_excess = list(supply)
    for a in range(m):
        if cost[a] < 0 and cap[a] > 0:
            # saturate so that every residual arc has non-negative cost
            rcap[2 * a], rcap[2 * a + 1] = 0, cap[a]
            residual_excess[tails[a]] -= cap[a]
            residual_excess[heads[a]] += cap[a]
    need = 0
    for v in range(n):
        if residual_excess[v] > 0:
            add(source, v, residual_excess[v], 0)
            need += residual_excess[v]
        elif residual_excess[v] < 0:
            add(v, sink, -residual_excess[v], 0)

    total = n + 2
    while need > 0:
        dist = [INF] * total
        pred = [-1] * total
        queued = [False] * total
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            queued[v] = False
            for e in out[v]:
                if rcap[e] > 0:
                    w = to[e]
                    nd = dist[v] + rcost[e]
                    if nd < dist[w]:
                        dist[w] = nd
                        pred[w] = e
                        if not queued[w]:
                            queued[w] = True
                            queue.append(w)
        if dist[sink] == INF:
            return None
        push = need
        v = sink
        while v != source:
            e = pred[v]
            push = min(push, rcap[e])
            v = to[e ^ 1]
        v = sink
        while v != source:
            e = pred[v]
            rcap[e] -= push
            rcap[e ^ 1] += push
            v = to[e ^ 1]
        need -= push
    for a in range(m):
        g[a] = rcap[2 * a + 1]
    return g


def solve_tiny_exhaustive(net: FlowNetwork, limit: int = 10**6) -> Outcome:
    """Enumerate every integral flow within bounds.

    Uncapacitated arcs are enumerated up to ``B + 1`` where ``B`` bounds any
    useful acyclic flow; an improvement from the extra unit means unbounded.
    """
    bound = (sum(abs(b) for b in net.balance) + sum(net.lower)
             + sum(u for u in net.upper if u != INF) + 1)
    ranges = []
    size = 1
    for a in range(net.m):
        hi = bound + 1 if net.upper[a] == INF else net.upper[a]
        ranges.append(range(net.lower[a], hi + 1))
        size *= hi - net.lower[a] + 1
        if size > limit:
            raise TooLarge(f"more than {limit} flow combinations")
    uncapped = [a for a in range(net.m) if net.upper[a] == INF]
    best = best_capped = None
    best_flow = None
    for flow in itertools.product(*ranges):
        ex = list(net.balance)
        for a, f in enumerate(flow):
            ex[net.tails[a]] -= f
            ex[net.heads[a]] += f
        if any(ex):
            continue
        c = flow_cost(net, flow)
        if best is None or c < best:
            best = c
        if all(flow[a] <= bound for a in uncapped):
            if best_capped is None or c < best_capped:
                best_capped, best_flow = c, list(flow)
    if best is None:
        return Outcome(INFEASIBLE)
    if best < best_capped:
        return Outcome(UNBOUNDED)
    return Outcome(OPTIMAL, flow=best_flow, cost=best_capped)
