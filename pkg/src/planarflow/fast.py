"""Compiled counterpart of :func:`planarflow.solver.decompose_and_solve_outerplanar`.

Same pipeline and outcome semantics, run on int64 arrays through the
kernels in :mod:`planarflow._kernels`.  Inputs whose numbers could overflow
64-bit arithmetic are routed to the pure-Python solver instead.
"""
from __future__ import annotations

import numpy as np

from . import _kernels as K
from .embedded import build_embedding
from .errors import DisconnectedGraph, NotOuterplanar
from .network import INF, INFEASIBLE, OPTIMAL, UNBOUNDED, FlowNetwork, Outcome, flow_cost
from .solver import _settle_single, block_balances, decompose_and_solve_outerplanar, solve_block

_LIMIT = 1 << 55


def _rotation_csr(rotation):
    ptr = np.zeros(len(rotation) + 1, np.int64)
    ptr[1:] = np.cumsum([len(r) for r in rotation])
    flat = np.fromiter((d for r in rotation for d in r), np.int64, count=int(ptr[-1]))
    return ptr, flat


def _too_large(net: FlowNetwork) -> bool:
    finite = [u for u in net.upper if u != INF]
    big = max([0, *finite, *net.lower, *(abs(b) for b in net.balance),
               *(abs(c) for c in net.cost)])
    return big * (net.m + 2) * 4 >= _LIMIT


def warm_up() -> None:
    """Compile every kernel once (cached on disk afterwards)."""
    from .generator import OUTER_DART, random_outerplanar
    net = random_outerplanar(6, 2, lower_bounds=True, balance="random", inf_prob=0.3, seed=0)
    solve_outerplanar_fast(net, OUTER_DART)


def solve_outerplanar_fast(net: FlowNetwork, outer_dart: int | None = None) -> Outcome:
    g = net.embedding
    if g is None:
        raise NotOuterplanar("an embedding is required")
    if net.m == 0 or _too_large(net):
        return decompose_and_solve_outerplanar(net, outer_dart)
    if not g.is_connected():
        raise DisconnectedGraph("the network must be connected")
    n = net.n
    tails = np.asarray(net.tails, np.int64)
    heads = np.asarray(net.heads, np.int64)
    lower = np.asarray(net.lower, np.int64)
    upper = np.asarray([-1 if u == INF else u for u in net.upper], np.int64)
    cost = np.asarray(net.cost, np.int64)
    balance = np.asarray(net.balance, np.int64)
    rot_ptr, rot = _rotation_csr(g.rotation)

    face_of, face_ptr, walk = K.trace_faces(tails, heads, rot_ptr, rot)
    origins = np.where(walk & 1 == 0, tails[walk >> 1], heads[walk >> 1])
    if outer_dart is None:
        fid = _first_full_face(n, face_ptr, origins)
        if fid < 0:
            raise NotOuterplanar("no face of the given embedding touches every vertex")
    else:
        fid = int(face_of[outer_dart])
        if np.unique(origins[face_ptr[fid]:face_ptr[fid + 1]]).size != n:
            raise NotOuterplanar(f"the face left of dart {outer_dart} misses a vertex")
    outer_walk = walk[face_ptr[fid]:face_ptr[fid + 1]]

    block_of, nb = K.biconnected_blocks(n, tails, heads)
    if nb == 1 and net.m > 1:
        start = int(outer_walk[0]) if outer_dart is None else outer_dart
        status, flow = _solve_block(n, tails, heads, lower, upper, cost, balance,
                                    rot_ptr, rot, outer_walk, start)
        if status != OPTIMAL:
            return Outcome(status, witness=[list(range(net.m))])
        flow = flow.tolist()
        return Outcome(OPTIMAL, flow=flow, cost=flow_cost(net, flow))
    return _solve_blocks(net, tails, heads, lower, upper, cost, rot_ptr, rot,
                         outer_walk, block_of, nb)


def _first_full_face(n, face_ptr, origins):
    for fid in range(len(face_ptr) - 1):
        lo, hi = face_ptr[fid], face_ptr[fid + 1]
        if hi - lo >= n and np.unique(origins[lo:hi]).size == n:
            return fid
    return -1


def _solve_blocks(net, tails, heads, lower, upper, cost, rot_ptr, rot, outer_walk,
                  block_of, nb):
    members = [[] for _ in range(nb)]
    for a, b in enumerate(block_of.tolist()):
        members[b].append(a)
    balances = block_balances(net.n, net.tails, net.heads, members, net.balance)
    if balances is None:
        return Outcome(INFEASIBLE, witness=[])
    flow = [0] * net.m
    walk_blocks = block_of[outer_walk >> 1]
    first = {}
    for d, b in zip(outer_walk.tolist(), walk_blocks.tolist()):
        first.setdefault(b, d)
    dart_block = block_of[rot >> 1]
    infeasible, unbounded = [], []
    for b, arcs in enumerate(members):
        if len(arcs) == 1:
            status = _settle_single(net, arcs[0], balances[b], flow)
        else:
            verts = sorted(balances[b])
            local = np.full(net.n, -1, np.int64)
            local[verts] = np.arange(len(verts))
            arc_idx = np.asarray(arcs, np.int64)
            in_block = np.full(net.m, -1, np.int64)
            in_block[arc_idx] = np.arange(len(arcs))
            # filter each rotation to this block, keeping the cyclic order
            keep = dart_block == b
            kept = rot[keep]
            owner = np.repeat(np.arange(net.n), np.diff(rot_ptr))[keep]
            sub_rot = 2 * in_block[kept >> 1] + (kept & 1)
            sub_ptr = np.zeros(len(verts) + 1, np.int64)
            np.add.at(sub_ptr, local[owner] + 1, 1)
            sub_ptr = np.cumsum(sub_ptr)
            sub_tails = local[tails[arc_idx]]
            sub_heads = local[heads[arc_idx]]
            sub_bal = np.asarray([balances[b][v] for v in verts], np.int64)
            d = first[b]
            local_outer = int(2 * in_block[d >> 1] + (d & 1))
            face_of, face_ptr, walk = K.trace_faces(sub_tails, sub_heads, sub_ptr, sub_rot)
            fid = face_of[local_outer]
            fw = walk[face_ptr[fid]:face_ptr[fid + 1]]
            origins = np.where(fw & 1 == 0, sub_tails[fw >> 1], sub_heads[fw >> 1])
            if np.unique(origins).size != len(verts):
                raise NotOuterplanar(f"block {b} has no face touching all its vertices")
            status, sub_flow = _solve_block(
                len(verts), sub_tails, sub_heads, lower[arc_idx], upper[arc_idx],
                cost[arc_idx], sub_bal, sub_ptr, sub_rot, fw, local_outer)
            if status == OPTIMAL:
                for i, a in enumerate(arcs):
                    flow[a] = int(sub_flow[i])
        if status == INFEASIBLE:
            infeasible.append(arcs)
        elif status == UNBOUNDED:
            unbounded.append(arcs)
    if infeasible:
        return Outcome(INFEASIBLE, witness=infeasible)
    if unbounded:
        return Outcome(UNBOUNDED, witness=unbounded)
    return Outcome(OPTIMAL, flow=flow, cost=flow_cost(net, flow))


def _solve_block(n, tails, heads, lower, upper, cost, balance, rot_ptr, rot, walk, outer_dart):
    """``(status, flow)`` for one biconnected block; ``walk`` is its outer face."""
    k = int(np.nonzero(walk == outer_dart)[0][0])
    walk = np.concatenate((walk[k:], walk[:k]))
    if np.any(balance):
        (cn, ct, ch, cl, cu, cc, c_ptr, c_rot, c_outer, forced) = K.to_circulation(
            n, tails, heads, lower, upper, cost, balance, rot_ptr, rot, walk)
    else:
        _cn, ct, ch, cl, cu, cc = n, tails, heads, lower, upper, cost
        c_ptr, c_rot, c_outer = rot_ptr, rot, outer_dart
        forced = np.empty((0, 3), np.int64)
    face_of, face_ptr, _ = K.trace_faces(ct, ch, c_ptr, c_rot)
    nf = face_ptr.shape[0] - 1
    dt, dh, dc, _, fb = K.lp_dual(cl, cu, cc, face_of, nf)
    apex = int(face_of[c_outer])

    # every transshipment arc is uncapacitated: cap at nf * U + 1
    U = int(np.abs(fb).max()) if nf else 0
    cap_value = nf * U + 1
    cap = np.full(dt.shape[0], cap_value, np.int64)
    # partial sums reach about nf * cap; keep them clear of the sentinel
    if nf * (cap_value + 1) * 4 >= K.HALF:
        return _python_block(n, tails, heads, lower, upper, cost, balance,
                             rot_ptr, rot, outer_dart)
    feasible, phi = K.fat_tree(nf, apex, dt, dh, cap, dc, fb)
    if not feasible:
        _, negative = K.shortest_paths(nf, dt, dh, dc)
        return (INFEASIBLE if negative else UNBOUNDED), None
    if np.any(phi == cap_value):
        _, negative = K.shortest_paths(nf, dt, dh, dc)
        if negative:
            return INFEASIBLE, None
    # potentials from the residual network of phi
    pos = phi > 0
    rt = np.concatenate((dt, dh[pos]))
    rh = np.concatenate((dh, dt[pos]))
    rl = np.concatenate((dc, -dc[pos]))
    pi, negative = K.shortest_paths(nf, rt, rh, rl)
    if negative:
        raise AssertionError("transshipment solution is not optimal")
    pi = pi - pi[0]
    m = tails.shape[0]
    circ = pi[face_of[1::2]] - pi[face_of[0::2]]
    for a, a2, value in forced.tolist():
        if circ[a] != value or (a2 >= 0 and circ[a2] != value):
            raise AssertionError("forced arc deviates from its value")
    return OPTIMAL, circ[:m]


def _python_block(n, tails, heads, lower, upper, cost, balance, rot_ptr, rot, outer_dart):
    rotation = [rot[rot_ptr[v]:rot_ptr[v + 1]].tolist() for v in range(n)]
    pairs = list(zip(tails.tolist(), heads.tolist()))
    sub = FlowNetwork(n, tails.tolist(), heads.tolist(), lower.tolist(),
                      [INF if u < 0 else u for u in upper.tolist()], cost.tolist(),
                      balance.tolist(), build_embedding(n, pairs, rotation))
    out = solve_block(sub, outer_dart)
    flow = np.asarray(out.flow, np.int64) if out.optimal else None
    return out.status, flow


def certify_fast(net: FlowNetwork, flow) -> bool:
    """Array version of :func:`planarflow.network.certify_optimal`."""
    if _too_large(net):
        from .network import certify_optimal
        return bool(certify_optimal(net, flow))
    f = np.asarray(flow, np.int64)
    tails = np.asarray(net.tails, np.int64)
    heads = np.asarray(net.heads, np.int64)
    lower = np.asarray(net.lower, np.int64)
    upper = np.asarray([-1 if u == INF else u for u in net.upper], np.int64)
    cost = np.asarray(net.cost, np.int64)
    finite = upper >= 0
    if np.any(f < lower) or np.any(finite & (f > upper)):
        return False
    excess = np.asarray(net.balance, np.int64).copy()
    np.subtract.at(excess, tails, f)
    np.add.at(excess, heads, f)
    if np.any(excess):
        return False
    fwd = ~finite | (f < upper)
    bwd = f > lower
    rt = np.concatenate((tails[fwd], heads[bwd]))
    rh = np.concatenate((heads[fwd], tails[bwd]))
    rl = np.concatenate((cost[fwd], -cost[bwd]))
    _, negative = K.shortest_paths(net.n, rt, rh, rl)
    return not negative
