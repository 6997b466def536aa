"""Planar min-cost flow through the geometric dual and its LP dual.

The chain is::

    min-cost flow --flow_to_circulation--> circulation
    circulation   --build_lp_dual-------> transshipment on faces
    optimal transshipment --recover_potentials--> face potentials
    face potentials --recover_circulation--> circulation --pullback_flow--> flow

A face potential ``pi`` induces the circulation
``f(e) = pi(right(e)) - pi(left(e))``; the cost of a unit of potential on
face ``h`` is ``c(h)``, the sum of ``c(e)`` over arcs with ``h`` on their
right minus the sum over arcs with ``h`` on their left.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .embedded import EmbeddedGraph, FaceStructure, build_embedding, trace_faces
from .errors import ForcedArcDeviation, NegativeResidualCycle, NotOuterplanar
from .network import INF, FlowNetwork, shortest_paths


@dataclass
class ForcedArc:
    arcs: list[int]        # one arc, or two when subdivided
    value: int


@dataclass
class Pullback:
    n: int                 # vertex count of the original instance
    m: int                 # arc count of the original instance
    forced: list[ForcedArc] = field(default_factory=list)


@dataclass
class CirculationInstance:
    network: FlowNetwork
    outer_dart: int        # a dart whose left face is the outer face
    pullback: Pullback


def _outer_dart(g: EmbeddedGraph, faces: FaceStructure, outer_dart):
    if outer_dart is None:
        for fid, walk in enumerate(faces.faces):
            if walk and len(faces.face_vertices(g, fid)) == g.n:
                return walk[0]
        raise NotOuterplanar("no face of the given embedding touches every vertex")
    if len(faces.face_vertices(g, faces.face_of[outer_dart])) != g.n:
        raise NotOuterplanar(f"the face left of dart {outer_dart} misses a vertex")
    return outer_dart


def flow_to_circulation(net: FlowNetwork, outer_dart: int | None = None) -> CirculationInstance:
    """Replace balances by forced arcs drawn inside the outer face.

    Walking the outer face from ``outer_dart``, the arc drawn beside the
    i-th boundary dart carries the prefix sum of the balances of the
    vertices met so far (first visits only); arcs that would be parallel to
    an existing arc are subdivided.
    """
    g = net.embedding
    faces = trace_faces(g)
    outer_dart = _outer_dart(g, faces, outer_dart)
    pullback = Pullback(net.n, net.m)
    if net.is_circulation():
        return CirculationInstance(_copy(net), outer_dart, pullback)

    fid = faces.face_of[outer_dart]
    walk = faces.faces[fid]
    start = walk.index(outer_dart)
    walk = walk[start:] + walk[:start]

    tails, heads = list(net.tails), list(net.heads)
    lower, upper, cost = list(net.lower), list(net.upper), list(net.cost)
    n = net.n
    extra_rotation = []            # rotations of subdivision vertices
    before, after = {}, {}
    existing = set(zip(tails, heads))
    seen = [False] * n
    prefix = 0
    new_outer = outer_dart
    for i, d in enumerate(walk[:-1]):
        x, y = g.origin(d), g.target(d)
        if not seen[x]:
            seen[x] = True
            prefix += net.balance[x]
        if prefix == 0:
            continue
        t, h = (y, x) if prefix > 0 else (x, y)
        value = abs(prefix)
        a = len(tails)
        if (t, h) in existing:
            w = n
            n += 1
            a2 = a + 1
            tails += [t, w]
            heads += [w, h]
            lower += [value, value]
            upper += [value, value]
            cost += [0, 0]
            extra_rotation.append([2 * a + 1, 2 * a2])
            out_of = {t: 2 * a, h: 2 * a2 + 1}
            pullback.forced.append(ForcedArc([a, a2], value))
        else:
            tails.append(t)
            heads.append(h)
            lower.append(value)
            upper.append(value)
            cost.append(0)
            out_of = {t: 2 * a, h: 2 * a + 1}
            pullback.forced.append(ForcedArc([a], value))
        existing.add((t, h))
        before[d] = out_of[x]
        after[d ^ 1] = out_of[y]
        if i == 0:
            new_outer = out_of[x]

    rotation = []
    for rot in g.rotation:
        new_rot = []
        for d in rot:
            if d in before:
                new_rot.append(before[d])
            new_rot.append(d)
            if d in after:
                new_rot.append(after[d])
        rotation.append(new_rot)
    rotation += extra_rotation
    emb = build_embedding(n, list(zip(tails, heads)), rotation)
    circ = FlowNetwork(n, tails, heads, lower, upper, cost, [0] * n, emb)
    return CirculationInstance(circ, new_outer, pullback)


def _copy(net: FlowNetwork) -> FlowNetwork:
    return FlowNetwork(net.n, list(net.tails), list(net.heads), list(net.lower),
                       list(net.upper), list(net.cost), list(net.balance), net.embedding)


def face_costs(g: EmbeddedGraph, faces: FaceStructure, costs) -> list[int]:
    """Cost of circulating one unit around each face."""
    out = [0] * len(faces.faces)
    for a in range(g.m):
        out[faces.right_face(a)] += costs[a]
        out[faces.left_face(a)] -= costs[a]
    return out


@dataclass
class DualTransshipment:
    """Uncapacitated transshipment on the faces of a circulation instance.

    ``origin[i] = (primal_arc, forward)`` names the dart behind arc ``i``.
    """
    network: FlowNetwork
    origin: list[tuple[int, bool]]
    faces: FaceStructure
    apex: int | None = None


def build_lp_dual(circ) -> DualTransshipment:
    """Build the transshipment network whose optimum prices the circulation.

    Accepts a :class:`CirculationInstance` or an embedded circulation
    :class:`FlowNetwork`.  Every backward dart yields an arc from the right
    face to the left face with cost ``-lower``; every capacitated forward
    dart yields an arc from the left face to the right face with cost
    ``upper``, drawn beside it.  Face balances are the face costs.
    """
    if isinstance(circ, CirculationInstance):
        net, outer_dart = circ.network, circ.outer_dart
    else:
        net, outer_dart = circ, None
    g = net.embedding
    faces = trace_faces(g)
    tails, heads, costs, origin = [], [], [], []
    dart_slots = {}
    for a in range(net.m):
        left, right = faces.left_face(a), faces.right_face(a)
        back = len(tails)
        tails.append(right)
        heads.append(left)
        costs.append(-net.lower[a])
        origin.append((a, False))
        if net.upper[a] == INF:
            dart_slots[2 * a] = [2 * back + 1]
            dart_slots[2 * a + 1] = [2 * back]
        else:
            fwd = len(tails)
            tails.append(left)
            heads.append(right)
            costs.append(net.upper[a])
            origin.append((a, True))
            dart_slots[2 * a] = [2 * back + 1, 2 * fwd]
            dart_slots[2 * a + 1] = [2 * fwd + 1, 2 * back]
    rotation = []
    for walk in faces.faces:
        rot = []
        for d in reversed(walk):
            rot.extend(dart_slots[d])
        rotation.append(rot)
    h = len(faces.faces)
    emb = build_embedding(h, list(zip(tails, heads)), rotation)
    balance = face_costs(g, faces, net.cost)
    dual = FlowNetwork(h, tails, heads, [0] * len(tails), [INF] * len(tails), costs,
                       balance, emb)
    apex = faces.face_of[outer_dart] if outer_dart is not None else None
    return DualTransshipment(dual, origin, faces, apex)


def recover_potentials(dual: DualTransshipment, phi) -> list[int]:
    """Face potentials from an optimal transshipment ``phi``.

    Distances in the residual network of ``phi`` from a virtual source tied
    to every face, shifted so that face 0 has potential 0.
    """
    net = dual.network
    tails, heads, lengths = list(net.tails), list(net.heads), list(net.cost)
    for a in range(net.m):
        if phi[a] > 0:
            tails.append(net.heads[a])
            heads.append(net.tails[a])
            lengths.append(-net.cost[a])
    dist, _, cycle = shortest_paths(net.n, tails, heads, lengths)
    if cycle is not None:
        raise NegativeResidualCycle("transshipment flow is not optimal", cycle)
    base = dist[0]
    return [d - base for d in dist]


def potential_objective(dual: DualTransshipment, pi) -> int:
    return sum(c * p for c, p in zip(dual.network.balance, pi))


def recover_circulation(faces: FaceStructure, pi) -> list[int]:
    m = len(faces.face_of) // 2
    return [pi[faces.right_face(a)] - pi[faces.left_face(a)] for a in range(m)]


def pullback_flow(flow, pullback: Pullback) -> list[int]:
    for forced in pullback.forced:
        for a in forced.arcs:
            if flow[a] != forced.value:
                raise ForcedArcDeviation(
                    f"forced arc {a} carries {flow[a]} instead of {forced.value}")
    return list(flow[:pullback.m])
