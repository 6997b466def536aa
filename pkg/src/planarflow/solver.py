"""End-to-end min-cost flow on outerplanar networks.

Each biconnected block is solved on its own once the balances have been
redistributed over the articulation points.  Blocks with at least two
arcs go through the circulation, dual transshipment and fat-tree solver;
bridges and self-loops are settled directly.
"""
from __future__ import annotations

from . import fattree
from .duality import (
    build_lp_dual,
    flow_to_circulation,
    pullback_flow,
    recover_circulation,
    recover_potentials,
)
from .embedded import biconnected_components, build_embedding, check_outerplanar, trace_faces
from .errors import DisconnectedGraph, NotOuterplanar
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


def block_balances(n, tails, heads, blocks, balance):
    """Balance of every vertex inside every block.

    Returns one ``{vertex: balance}`` dict per block, or None when some
    connected component has non-zero total balance.
    """
    containing = [[] for _ in range(n)]
    block_verts = []
    for i, arcs in enumerate(blocks):
        verts = sorted({tails[a] for a in arcs} | {heads[a] for a in arcs})
        if len(verts) == 1:
            verts = []            # self-loops never carry balance
        block_verts.append(verts)
        for v in verts:
            containing[v].append(i)
    home = [-1] * n               # first block reaching v in BFS order
    parent_vertex = [-1] * len(blocks)
    order = []
    seen = [False] * len(blocks)
    for root in range(len(blocks)):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for b in queue:
            order.append(b)
            for v in block_verts[b]:
                if home[v] != -1:
                    continue
                home[v] = b
                for c in containing[v]:
                    if not seen[c]:
                        seen[c] = True
                        parent_vertex[c] = v
                        queue.append(c)
    for v in range(n):
        if home[v] == -1 and balance[v] != 0:
            return None
    # subtotal[b]: total balance hanging below block b
    subtotal = [0] * len(blocks)
    for b in reversed(order):
        subtotal[b] += sum(balance[v] for v in block_verts[b] if home[v] == b)
        if parent_vertex[b] == -1:
            if subtotal[b] != 0:
                return None
        else:
            subtotal[home[parent_vertex[b]]] += subtotal[b]
    result = []
    for b in range(len(blocks)):
        bal = {}
        for v in block_verts[b]:
            if home[v] == b:
                bal[v] = balance[v] + sum(
                    subtotal[c] for c in containing[v] if c != b and parent_vertex[c] == v)
            else:
                bal[v] = -subtotal[b]
        result.append(bal)
    return result


def _restrict(net: FlowNetwork, arcs, bal):
    """Sub-network of one block with local vertex ids."""
    verts = sorted(bal)
    local = {v: i for i, v in enumerate(verts)}
    in_block = {a: i for i, a in enumerate(arcs)}
    g = net.embedding
    rotation = []
    for v in verts:
        rot = []
        for d in g.rotation[v]:
            i = in_block.get(d >> 1)
            if i is not None:
                rot.append(2 * i + (d & 1))
        rotation.append(rot)
    pairs = [(local[net.tails[a]], local[net.heads[a]]) for a in arcs]
    emb = build_embedding(len(verts), pairs, rotation)
    sub = FlowNetwork(
        n=len(verts),
        tails=[t for t, _ in pairs],
        heads=[h for _, h in pairs],
        lower=[net.lower[a] for a in arcs],
        upper=[net.upper[a] for a in arcs],
        cost=[net.cost[a] for a in arcs],
        balance=[bal[v] for v in verts],
        embedding=emb,
    )
    return sub, in_block


def solve_block(sub: FlowNetwork, outer_dart: int | None = None) -> Outcome:
    """Solve a biconnected outerplanar block through its dual transshipment."""
    circ = flow_to_circulation(sub, outer_dart)
    dual = build_lp_dual(circ)
    out = fattree.solve(fattree.FatTreeInstance(dual.network, dual.apex))
    if out.status == UNBOUNDED:
        return Outcome(INFEASIBLE, witness=out.witness)
    if out.status == INFEASIBLE:
        # the circulation is feasible iff no cycle of negative dual length
        dn = dual.network
        cycle = find_negative_cycle(dn.n, dn.tails, dn.heads, dn.cost)
        if cycle is not None:
            return Outcome(INFEASIBLE, witness=[dual.origin[a] for a in cycle])
        return Outcome(UNBOUNDED, witness=out.witness)
    pi = recover_potentials(dual, out.flow)
    circulation = recover_circulation(dual.faces, pi)
    flow = pullback_flow(circulation, circ.pullback)
    return Outcome(OPTIMAL, flow=flow, cost=flow_cost(sub, flow))


def decompose_and_solve_outerplanar(net: FlowNetwork, outer_dart: int | None = None) -> Outcome:
    """Optimal flow, infeasibility or unboundedness of an outerplanar network.

    ``net.embedding`` must be given; ``outer_dart`` names a dart whose left
    face touches every vertex (found automatically when omitted).
    """
    g = net.embedding
    if g is None:
        raise NotOuterplanar("an embedding is required")
    if net.m == 0:
        if any(net.balance):
            return Outcome(INFEASIBLE, flow=[], witness=[])
        return Outcome(OPTIMAL, flow=[], cost=0)
    if not g.is_connected():
        raise DisconnectedGraph("the network must be connected")
    faces = trace_faces(g)
    if outer_dart is None:
        outer_walk = faces.faces[check_outerplanar(g, faces)]
    else:
        outer_walk = faces.faces[faces.face_of[outer_dart]]
        if len(faces.face_vertices(g, faces.face_of[outer_dart])) != g.n:
            raise NotOuterplanar(f"the face left of dart {outer_dart} misses a vertex")

    blocks, _ = biconnected_components(g)
    balances = block_balances(net.n, net.tails, net.heads, blocks, net.balance)
    if balances is None:
        return Outcome(INFEASIBLE, witness=[])
    flow = [0] * net.m
    infeasible, unbounded = [], []
    for arcs, bal in zip(blocks, balances):
        if len(arcs) == 1:
            status = _settle_single(net, arcs[0], bal, flow)
        else:
            sub, in_block = _restrict(net, arcs, bal)
            local_outer = next(2 * in_block[d >> 1] + (d & 1)
                               for d in outer_walk if (d >> 1) in in_block)
            out = solve_block(sub, local_outer)
            status = out.status
            if status == OPTIMAL:
                for i, a in enumerate(arcs):
                    flow[a] = out.flow[i]
        if status == INFEASIBLE:
            infeasible.append(arcs)
        elif status == UNBOUNDED:
            unbounded.append(arcs)
    if infeasible:
        return Outcome(INFEASIBLE, witness=infeasible)
    if unbounded:
        return Outcome(UNBOUNDED, witness=unbounded)
    return Outcome(OPTIMAL, flow=flow, cost=flow_cost(net, flow))


def _settle_single(net, a, bal, flow):
    t, h = net.tails[a], net.heads[a]
    lo, up, c = net.lower[a], net.upper[a], net.cost[a]
    if t == h:
        if c < 0:
            if up == INF:
                return UNBOUNDED
            flow[a] = up
        else:
            flow[a] = lo
        return OPTIMAL
    # a bridge carries exactly the balance on its tail side
    f = bal[t]
    if not lo <= f <= up:
        return INFEASIBLE
    flow[a] = f
    return OPTIMAL
