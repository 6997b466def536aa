"""Divide-and-conquer min-cost transshipment on apex-plus-fat-tree networks.

The input network has a vertex ``apex`` whose removal leaves a directed fat
tree.  The solver splits the tree at a centroid ``c``, merges ``c`` into the
apex inside every component, solves the components recursively, saturates
the negative arcs between ``c`` and the apex, and finally moves the leftover
excess between apex and ``c`` along least-cost residual paths with two
dynamic forests.
"""
from __future__ import annotations

from dataclasses import dataclass

from .embedded import tree_adjacency
from .errors import EmptyLeafSet, InvalidNetwork, NotFatTree
from .forest import CapacityForest, CostForest
from .network import (
    INF,
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    FlowNetwork,
    Outcome,
    find_negative_cycle,
    flow_cost,
    instance_stats,
)


@dataclass
class FatTreeInstance:
    """Transshipment-form network (all lower bounds zero) with an apex."""
    network: FlowNetwork
    apex: int

    def __post_init__(self):
        net = self.network
        if not 0 <= self.apex < net.n:
            raise InvalidNetwork(f"apex {self.apex} out of range")
        if any(net.lower):
            raise InvalidNetwork("fat-tree instances need zero lower bounds")
        others = [v for v in range(net.n) if v != self.apex]
        index = {v: i for i, v in enumerate(others)}
        arcs = [(index[t], index[h]) for t, h in zip(net.tails, net.heads)
                if t != self.apex and h != self.apex]
        adj = tree_adjacency(len(others), arcs)
        if others and not _is_tree(adj):
            raise NotFatTree("removing the apex does not leave a fat tree")


def _is_tree(adj) -> bool:
    n = len(adj)
    if sum(len(x) for x in adj) != 2 * (n - 1):
        return False
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


def cap_uncapacitated(net: FlowNetwork, U: int | None = None) -> FlowNetwork:
    """Replace every infinite capacity by ``n * U + 1``."""
    if U is None:
        U = instance_stats(net).U
    cap = net.n * U + 1
    return FlowNetwork(
        n=net.n,
        tails=list(net.tails),
        heads=list(net.heads),
        lower=list(net.lower),
        upper=[cap if u == INF else u for u in net.upper],
        cost=list(net.cost),
        balance=list(net.balance),
        embedding=net.embedding,
    )


@dataclass
class CombineSnapshot:
    """State right after combining the recursive solutions of one level.

    ``network`` is the subproblem (apex-side vertices merged into ``apex``),
    ``flow`` its flow, ``arcs`` the original ids of its arcs.
    """
    network: FlowNetwork
    flow: list[int]
    apex: int
    center: int
    arcs: list[int]
    depth: int


class _Infeasible(Exception):
    def __init__(self, witness):
        super().__init__("excess left after every apex copy was disconnected")
        self.witness = witness


class _Solver:
    def __init__(self, net: FlowNetwork, apex: int, trace=None):
        self.net = net
        self.apex = apex
        self.tails = net.tails
        self.heads = net.heads
        self.cost = net.cost
        self.cap = net.upper
        self.balance = net.balance
        self.flow = [0] * net.m
        self.trace = trace
        self.mark = [0] * net.n
        self.local = [0] * net.n
        self._stamp = 0
        self.max_depth = 0

    def _stamp_vertices(self, verts):
        self._stamp += 1
        s = self._stamp
        mark, local = self.mark, self.local
        for i, v in enumerate(verts):
            mark[v] = s
            local[v] = i
        return s

    def run(self):
        verts = [v for v in range(self.net.n) if v != self.apex]
        self.solve(verts, list(range(self.net.m)), 0)

    def solve(self, verts, arcs, depth):
        self.max_depth = max(self.max_depth, depth)
        s = self._stamp_vertices(verts)
        mark, tails, heads, cost, cap, flow = (
            self.mark, self.tails, self.heads, self.cost, self.cap, self.flow)

        inner = []
        for a in arcs:
            t, h = tails[a], heads[a]
            if t == h or (mark[t] != s and mark[h] != s):
                flow[a] = cap[a] if cost[a] < 0 else 0
            else:
                inner.append(a)
        k = len(verts)
        if k == 0:
            return
        if k == 1:
            self._solve_single(verts[0], inner)
            return

        adj = [[] for _ in range(k)]
        local = self.local
        for a in inner:
            t, h = tails[a], heads[a]
            if mark[t] == s and mark[h] == s:
                lt, lh = local[t], local[h]
                adj[lt].append(lh)
                adj[lh].append(lt)
        c = _centroid(adj)
        comp = [-1] * k
        comp[c] = -2
        groups = []
        for start in adj[c]:
            if comp[start] != -1:
                continue
            gid = len(groups)
            comp[start] = gid
            members = [start]
            for x in members:
                for y in adj[x]:
                    if comp[y] == -1:
                        comp[y] = gid
                        members.append(y)
            groups.append(members)

        center = verts[c]
        sub_arcs = [[] for _ in groups]
        around = []
        for a in inner:
            t, h = tails[a], heads[a]
            if mark[t] == s and t != center:
                sub_arcs[comp[local[t]]].append(a)
            elif mark[h] == s and h != center:
                sub_arcs[comp[local[h]]].append(a)
            else:
                around.append(a)
        for gid, members in enumerate(groups):
            self.solve([verts[i] for i in members], sub_arcs[gid], depth + 1)
        self._stamp_vertices(verts)

        for a in around:
            flow[a] = cap[a] if cost[a] < 0 else 0
        # every vertex but apex and center is balanced now
        excess_c = self.balance[center]
        for a in inner:
            if tails[a] == center:
                excess_c -= flow[a]
            elif heads[a] == center:
                excess_c += flow[a]
        if self.trace is not None:
            self.trace(self._snapshot(verts, arcs, center, depth))
        self.balance_excess(verts, inner, center, -excess_c)

    def _solve_single(self, v, arcs):
        tails, cost, cap, flow = self.tails, self.cost, self.cap, self.flow
        excess = self.balance[v]
        for a in arcs:
            flow[a] = cap[a] if cost[a] < 0 else 0
            excess += -flow[a] if tails[a] == v else flow[a]
        if excess == 0:
            return
        send_out = excess > 0
        options = []
        for a in arcs:
            if (tails[a] == v) == send_out:
                if flow[a] < cap[a]:
                    options.append((cost[a], a, 1, cap[a] - flow[a]))
            elif flow[a] > 0:
                options.append((-cost[a], a, -1, flow[a]))
        options.sort()
        need = abs(excess)
        for _, a, sign, room in options:
            d = min(room, need)
            flow[a] += sign * d
            need -= d
            if need == 0:
                return
        raise _Infeasible({"vertex": v, "excess": need})

    def balance_excess(self, verts, arcs, center, excess_apex):
        """Send ``excess_apex`` units from the apex to ``center`` (or back when
        negative) along least-cost residual paths."""
        if excess_apex == 0:
            return
        upward = excess_apex > 0
        s = self.mark[verts[0]]
        mark, local = self.mark, self.local
        tails, heads, cost, cap, flow = self.tails, self.heads, self.cost, self.cap, self.flow
        k = len(verts)
        c = local[center]

        adj = [[] for _ in range(k)]
        for a in arcs:
            t, h = tails[a], heads[a]
            if mark[t] == s and mark[h] == s:
                lt, lh = local[t], local[h]
                adj[lt].append((lh, a))
                adj[lh].append((lt, a))
        parent = [-1] * k
        parent[c] = c
        order = [c]
        for x in order:
            for y, _ in adj[x]:
                if parent[y] == -1:
                    parent[y] = x
                    order.append(y)
        parent[c] = -1

        # bundles[x]: residual arcs (cost, arc, sign, capacity) from x toward
        # the root when pushing upward, from the root side toward x otherwise
        bundles = [[] for _ in range(k)]
        copy_of = {}
        for a in arcs:
            t, h = tails[a], heads[a]
            t_in, h_in = mark[t] == s, mark[h] == s
            if t_in and h_in:
                lt, lh = local[t], local[h]
                if parent[lt] == lh:
                    child, arc_points_up = lt, True
                else:
                    child, arc_points_up = lh, False
                node = child
            else:
                x = local[t] if t_in else local[h]
                node = copy_of.get(x)
                if node is None:
                    node = copy_of[x] = len(bundles)
                    bundles.append([])
                    parent.append(x)
                # the copy sits below x; its arc to x points "up" when it
                # leaves the apex
                arc_points_up = not t_in
            if arc_points_up == upward:
                if flow[a] < cap[a]:
                    bundles[node].append((cost[a], a, 1, cap[a] - flow[a]))
            elif flow[a] > 0:
                bundles[node].append((-cost[a], a, -1, flow[a]))
        total = len(bundles)
        for b in bundles:
            b.sort()

        linked = [-1] * total
        caps = [0] * total
        children = [[] for _ in range(total)]
        for x in range(total):
            if x != c and bundles[x]:
                linked[x] = parent[x]
                caps[x] = bundles[x][0][3]
                children[parent[x]].append(x)
        costs = [None] * total
        dist = [0] * total
        stack = [c]
        while stack:
            x = stack.pop()
            for y in children[x]:
                dist[y] = dist[x] + bundles[y][0][0]
                if y >= k:
                    costs[y] = dist[y]
                stack.append(y)

        tu = CapacityForest.from_parents(linked, caps)
        tc = CostForest.from_parents(linked, costs)
        active = [0] * total
        remaining = abs(excess_apex)
        while remaining > 0:
            try:
                q, _ = tc.global_min()
            except EmptyLeafSet:
                raise _Infeasible({"center": center, "excess": remaining}) from None
            low, w = tu.path_min(q)
            if low > 0:
                d = min(low, remaining)
                tu.path_add(q, -d)
                remaining -= d
                if remaining == 0:
                    break
                low, w = tu.path_min(q)
            # w's active arc is saturated: retire it for the next parallel arc
            old = bundles[w][active[w]]
            flow[old[1]] += old[2] * old[3]
            active[w] += 1
            if active[w] < len(bundles[w]):
                new = bundles[w][active[w]]
                tu.replace(w, new[3])
                tc.subtree_add(w, new[0] - old[0])
            else:
                tu.cut(w)
                tc.cut(w)
                tc.subtree_add(w, INF)
        left = tu.values()
        for x in range(total):
            if tu.parent[x] != -1:
                entry = bundles[x][active[x]]
                used = entry[3] - left[x]
                flow[entry[1]] += entry[2] * used

    def _snapshot(self, verts, arcs, center, depth):
        s = self.mark[verts[0]]
        apex_local = len(verts)
        local = self.local

        def vid(v):
            return local[v] if self.mark[v] == s else apex_local

        balance = [self.balance[v] for v in verts]
        balance.append(-sum(balance))
        net = FlowNetwork(
            n=len(verts) + 1,
            tails=[vid(self.tails[a]) for a in arcs],
            heads=[vid(self.heads[a]) for a in arcs],
            lower=[0] * len(arcs),
            upper=[self.cap[a] for a in arcs],
            cost=[self.cost[a] for a in arcs],
            balance=balance,
        )
        return CombineSnapshot(net, [self.flow[a] for a in arcs], apex_local,
                               local[center], list(arcs), depth)


def _centroid(adj) -> int:
    """Lowest local id whose removal leaves parts of at most k // 2 vertices."""
    k = len(adj)
    parent = [-1] * k
    parent[0] = 0
    order = [0]
    for x in order:
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    parent[0] = -1
    size = [1] * k
    heaviest = [0] * k
    for x in reversed(order):
        p = parent[x]
        if p >= 0:
            size[p] += size[x]
            if size[x] > heaviest[p]:
                heaviest[p] = size[x]
    half = k // 2
    return min(x for x in range(k) if heaviest[x] <= half and k - size[x] <= half)


def solve(instance: FatTreeInstance, trace=None) -> Outcome:
    """Optimal flow, infeasibility, or a negative cycle (unbounded).

    ``trace`` is called with a :class:`CombineSnapshot` at every level.
    """
    net = instance.network
    capped = cap_uncapacitated(net)
    solver = _Solver(capped, instance.apex, trace)
    try:
        solver.run()
    except _Infeasible as exc:
        return Outcome(INFEASIBLE, witness=exc.witness)
    flow = solver.flow
    saturated = [a for a in range(net.m)
                 if net.upper[a] == INF and flow[a] == capped.upper[a]]
    if saturated:
        uncapped = [a for a in range(net.m) if net.upper[a] == INF]
        cycle = find_negative_cycle(
            net.n,
            [net.tails[a] for a in uncapped],
            [net.heads[a] for a in uncapped],
            [net.cost[a] for a in uncapped],
        )
        if cycle is not None:
            return Outcome(UNBOUNDED, flow=flow, witness=saturated)
    return Outcome(OPTIMAL, flow=flow, cost=flow_cost(net, flow))


def balance_excess(net: FlowNetwork, flow, apex: int, center: int) -> Outcome:
    """Move the apex excess of ``flow`` to ``center`` along least-cost paths.

    ``flow`` must leave every vertex except ``apex`` and ``center`` balanced
    and have no negative residual cycle.  Capacities must be finite.
    """
    solver = _Solver(net, apex)
    solver.flow = list(flow)
    verts = [v for v in range(net.n) if v != apex]
    solver._stamp_vertices(verts)
    excess = net.balance[apex]
    for a in range(net.m):
        if net.tails[a] == apex:
            excess -= flow[a]
        if net.heads[a] == apex:
            excess += flow[a]
    try:
        solver.balance_excess(verts, list(range(net.m)), center, excess)
    except _Infeasible as exc:
        return Outcome(INFEASIBLE, flow=solver.flow, witness=exc.witness)
    return Outcome(OPTIMAL, flow=solver.flow, cost=flow_cost(net, solver.flow))
