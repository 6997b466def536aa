"""Embedded planar multigraphs given by rotation systems.

Arc ``a`` owns two darts: ``2*a`` leaves its tail and ``2*a + 1`` leaves its
head.  ``rotation[v]`` lists the darts leaving ``v`` in clockwise order.  The
face of a dart is the face on its left; walking a face takes a dart ``d`` to
the clockwise successor of ``d ^ 1`` around the head of ``d``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DisconnectedGraph,
    DuplicateDart,
    EmptyTree,
    EndpointOutOfRange,
    MissingDart,
    NotFatTree,
    NotOuterplanar,
    SelfLoopContraction,
)


def dart(arc: int, forward: bool = True) -> int:
    return 2 * arc if forward else 2 * arc + 1


def reverse(d: int) -> int:
    return d ^ 1


class EmbeddedGraph:
    """A directed multigraph together with a rotation system.

    Use :func:`build_embedding` to construct a validated instance.
    """

    def __init__(self, vertex_count: int, arcs, rotation):
        self.n = vertex_count
        self.tails = [t for t, _ in arcs]
        self.heads = [h for _, h in arcs]
        self.rotation = [list(r) for r in rotation]
        self._succ = None

    @property
    def m(self) -> int:
        return len(self.tails)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.tails, self.heads))

    def origin(self, d: int) -> int:
        return self.tails[d >> 1] if d & 1 == 0 else self.heads[d >> 1]

    def target(self, d: int) -> int:
        return self.heads[d >> 1] if d & 1 == 0 else self.tails[d >> 1]

    def successor(self, d: int) -> int:
        """Clockwise successor of ``d`` around its origin."""
        if self._succ is None:
            succ = [0] * (2 * self.m)
            for rot in self.rotation:
                k = len(rot)
                for i, x in enumerate(rot):
                    succ[x] = rot[(i + 1) % k]
            self._succ = succ
        return self._succ[d]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = [[] for _ in range(self.n)]
        for t, h in zip(self.tails, self.heads):
            adj[t].append(h)
            adj[h].append(t)
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def __repr__(self):
        return f"EmbeddedGraph(n={self.n}, m={self.m})"


def build_embedding(vertex_count: int, arc_list, rotation) -> EmbeddedGraph:
    """Validate arcs and rotation system and return an :class:`EmbeddedGraph`.

    Raises EndpointOutOfRange, DuplicateDart or MissingDart when the rotation
    does not list every dart exactly once at its origin.
    """
    arcs = [(int(t), int(h)) for t, h in arc_list]
    for a, (t, h) in enumerate(arcs):
        if not (0 <= t < vertex_count and 0 <= h < vertex_count):
            raise EndpointOutOfRange(f"arc {a} has endpoint outside 0..{vertex_count - 1}")
    if len(rotation) != vertex_count:
        raise MissingDart(f"rotation has {len(rotation)} entries for {vertex_count} vertices")
    g = EmbeddedGraph(vertex_count, arcs, rotation)
    seen = [False] * (2 * g.m)
    for v, rot in enumerate(g.rotation):
        for d in rot:
            if not 0 <= d < 2 * g.m:
                raise EndpointOutOfRange(f"dart {d} at vertex {v} does not exist")
            if seen[d]:
                raise DuplicateDart(f"dart {d} listed twice")
            if g.origin(d) != v:
                raise MissingDart(f"dart {d} listed at {v}, but it leaves {g.origin(d)}")
            seen[d] = True
    for d, ok in enumerate(seen):
        if not ok:
            raise MissingDart(f"dart {d} of arc {d >> 1} missing from rotation of {g.origin(d)}")
    return g


@dataclass
class FaceStructure:
    face_of: list[int]          # face to the left of each dart
    faces: list[list[int]]      # boundary darts of each face, in walking order

    def left_face(self, arc: int) -> int:
        return self.face_of[2 * arc]

    def right_face(self, arc: int) -> int:
        return self.face_of[2 * arc + 1]

    def __len__(self):
        return len(self.faces)

    def face_vertices(self, g: EmbeddedGraph, face: int) -> set[int]:
        return {g.origin(d) for d in self.faces[face]}


def trace_faces(g: EmbeddedGraph) -> FaceStructure:
    if not g.is_connected():
        raise DisconnectedGraph("face tracing needs a connected graph")
    if g.m == 0:
        return FaceStructure(face_of=[], faces=[[]])
    face_of = [-1] * (2 * g.m)
    faces = []
    for start in range(2 * g.m):
        if face_of[start] != -1:
            continue
        fid = len(faces)
        walk = []
        d = start
        while face_of[d] == -1:
            face_of[d] = fid
            walk.append(d)
            d = g.successor(d ^ 1)
        faces.append(walk)
    return FaceStructure(face_of=face_of, faces=faces)


@dataclass
class DualGraph:
    """Geometric dual; dual arc ``a`` crosses primal arc ``a``.

    Dual arc ``a`` runs from the left face of primal arc ``a`` to its right
    face, so dual dart ids coincide with primal dart ids.
    """
    graph: EmbeddedGraph
    faces: FaceStructure

    def primal_arc(self, dual_arc: int) -> int:
        return dual_arc


def geometric_dual(g: EmbeddedGraph, faces: FaceStructure | None = None) -> DualGraph:
    if faces is None:
        faces = trace_faces(g)
    arcs = [(faces.left_face(a), faces.right_face(a)) for a in range(g.m)]
    # face walks are counterclockwise around the face, rotations clockwise
    rotation = [list(reversed(walk)) for walk in faces.faces]
    return DualGraph(graph=EmbeddedGraph(len(faces.faces), arcs, rotation), faces=faces)


def check_outerplanar(g: EmbeddedGraph, faces: FaceStructure | None = None) -> int:
    """Return the lowest-id face incident to every vertex of this embedding."""
    if faces is None:
        faces = trace_faces(g)
    for fid in range(len(faces.faces)):
        if len(faces.face_vertices(g, fid)) == g.n or g.n <= 1:
            return fid
    raise NotOuterplanar("no face of the given embedding touches every vertex")


def biconnected_components(g: EmbeddedGraph) -> tuple[list[list[int]], list[int]]:
    """Blocks (as sorted arc-id lists) and sorted articulation points.

    Parallel arcs share a block; each self-loop is a block of its own.
    """
    adj = [[] for _ in range(g.n)]
    loops = []
    for a, (t, h) in enumerate(zip(g.tails, g.heads)):
        if t == h:
            loops.append(a)
            continue
        adj[t].append((a, h))
        adj[h].append((a, t))
    disc = [-1] * g.n
    low = [0] * g.n
    blocks = []
    articulation = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        arc_stack = []
        stack = [(root, -1, 0)]
        while stack:
            v, via, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, via, i + 1)
                a, w = adj[v][i]
                if a == via:
                    continue
                if disc[w] == -1:
                    arc_stack.append(a)
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, a, 0))
                elif disc[w] < disc[v]:
                    arc_stack.append(a)
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                if p != root:
                    articulation.add(p)
                block = []
                while True:
                    a = arc_stack.pop()
                    block.append(a)
                    if a == via:
                        break
                blocks.append(sorted(block))
        if root_children > 1:
            articulation.add(root)
    for a in loops:
        blocks.append([a])
    return blocks, sorted(articulation)


def tree_adjacency(vertex_count: int, arcs) -> list[list[int]]:
    """Undirected adjacency with parallel arcs merged (the fat-tree view)."""
    adj = [set() for _ in range(vertex_count)]
    for t, h in arcs:
        if t != h:
            adj[t].add(h)
            adj[h].add(t)
    return [sorted(s) for s in adj]


def center_vertex(vertex_count: int, arcs) -> int:
    """Centroid of a directed fat tree: removing it leaves parts of at most
    ``vertex_count // 2`` vertices.  Ties go to the lowest vertex id."""
    if vertex_count == 0:
        raise EmptyTree("fat tree has no vertices")
    adj = tree_adjacency(vertex_count, arcs)
    if sum(len(x) for x in adj) != 2 * (vertex_count - 1):
        raise NotFatTree("merged underlying graph is not a tree")
    order, parent = [0], [-1] * vertex_count
    seen = [False] * vertex_count
    seen[0] = True
    for v in order:
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
    if len(order) != vertex_count:
        raise NotFatTree("merged underlying graph is not connected")
    size = [1] * vertex_count
    heaviest = [0] * vertex_count
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            size[p] += size[v]
            heaviest[p] = max(heaviest[p], size[v])
    half = vertex_count // 2
    return min(v for v in range(vertex_count)
               if max(heaviest[v], vertex_count - size[v]) <= half)


def contract_arc(g: EmbeddedGraph, arc: int, keep: int | None = None) -> EmbeddedGraph:
    """Contract ``arc``, merging its other endpoint into ``keep`` (default: tail).

    The darts of the merged vertex are spliced, in their cyclic order, into
    the slot the contracted arc occupied around ``keep``.  The removed vertex
    and arc disappear; higher vertex and arc ids shift down by one.
    """
    t, h = g.tails[arc], g.heads[arc]
    if t == h:
        raise SelfLoopContraction(f"arc {arc} is a self-loop")
    if keep is None:
        keep = t
    if keep not in (t, h):
        raise ValueError(f"vertex {keep} is not an endpoint of arc {arc}")
    gone = h if keep == t else t
    d_keep = 2 * arc if keep == t else 2 * arc + 1
    d_gone = d_keep ^ 1

    rot_gone = g.rotation[gone]
    i = rot_gone.index(d_gone)
    spliced = rot_gone[i + 1:] + rot_gone[:i]
    rot_keep = g.rotation[keep]
    j = rot_keep.index(d_keep)
    merged = rot_keep[:j] + spliced + rot_keep[j + 1:]

    def vmap(v):
        v = keep if v == gone else v
        return v - 1 if v > gone else v

    def dmap(d):
        return d - 2 if (d >> 1) > arc else d

    arcs = [(vmap(a_t), vmap(a_h)) for b, (a_t, a_h) in enumerate(g.arcs) if b != arc]
    rotation = []
    for v in range(g.n):
        if v == gone:
            continue
        rot = merged if v == keep else g.rotation[v]
        rotation.append([dmap(d) for d in rot])
    return build_embedding(g.n - 1, arcs, rotation)
