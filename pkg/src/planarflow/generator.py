"""Random biconnected outerplanar instances.

Vertices ``0..n-1`` sit counterclockwise on a circle and are joined by the
directed cycle ``i -> i+1``; chords are a random subset of a random
triangulation, so they never cross.  The outer face lies to the right of
every cycle arc, hence :data:`OUTER_DART` (the head dart of arc 0) has it on
its left.
"""
from __future__ import annotations

import random

from .embedded import build_embedding
from .network import INF, FlowNetwork

OUTER_DART = 1
BALANCE_MODES = ("zero", "random", "feasible")


def _triangulation_chords(n, rng):
    chords = []
    stack = [(0, n - 1)]
    while stack:
        a, b = stack.pop()
        if b - a < 2:
            continue
        k = rng.randint(a + 1, b - 1)
        if k > a + 1:
            chords.append((a, k))
        if b > k + 1:
            chords.append((k, b))
        stack.append((a, k))
        stack.append((k, b))
    return chords


def outerplanar_arcs(n: int, chords: int | None, rng) -> list[tuple[int, int]]:
    """Cycle arcs first, then ``chords`` randomly oriented chords."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    pool = _triangulation_chords(n, rng)
    if chords is None:
        chords = rng.randint(0, len(pool))
    if not 0 <= chords <= n - 3:
        raise ValueError(f"chord count must lie in [0, {n - 3}]")
    picked = rng.sample(pool, chords)
    picked.sort()
    arcs = [(i, (i + 1) % n) for i in range(n)]
    for i, j in picked:
        arcs.append((i, j) if rng.random() < 0.5 else (j, i))
    return arcs


def convex_rotation(n: int, arcs) -> list[list[int]]:
    """Clockwise rotations for vertices placed counterclockwise on a circle."""
    around = [[] for _ in range(n)]
    for a, (t, h) in enumerate(arcs):
        around[t].append(((h - t) % n, 2 * a))
        around[h].append(((t - h) % n, 2 * a + 1))
    return [[d for _, d in sorted(ds, reverse=True)] for ds in around]


def random_outerplanar(
    n: int,
    chords: int | None = None,
    *,
    max_cost: int = 10,
    max_cap: int = 20,
    lower_bounds: bool = False,
    balance: str = "zero",
    inf_prob: float = 0.0,
    seed=None,
) -> FlowNetwork:
    """Embedded instance with the outer face left of :data:`OUTER_DART`."""
    if balance not in BALANCE_MODES:
        raise ValueError(f"balance mode must be one of {BALANCE_MODES}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    arcs = outerplanar_arcs(n, chords, rng)
    emb = build_embedding(n, arcs, convex_rotation(n, arcs))
    m = len(arcs)
    lower, upper, cost = [], [], []
    for _ in range(m):
        if inf_prob and rng.random() < inf_prob:
            up = INF
            lo = rng.randint(0, max_cap) if lower_bounds else 0
        else:
            up = rng.randint(0, max_cap)
            lo = rng.randint(0, up) if lower_bounds else 0
        lower.append(lo)
        upper.append(up)
        cost.append(rng.randint(-max_cost, max_cost))
    b = _balances(n, arcs, lower, upper, balance, max_cap, rng)
    return FlowNetwork(
        n=n,
        tails=[t for t, _ in arcs],
        heads=[h for _, h in arcs],
        lower=lower,
        upper=upper,
        cost=cost,
        balance=b,
        embedding=emb,
    )


def random_connected_outerplanar(
    n: int,
    *,
    density: float = 0.5,
    parallel: int = 0,
    loops: int = 0,
    max_cost: int = 10,
    max_cap: int = 20,
    lower_bounds: bool = False,
    balance: str = "zero",
    inf_prob: float = 0.0,
    seed=None,
) -> FlowNetwork:
    """Connected outerplanar instance that may have bridges, articulation
    points, parallel arcs and self-loops.  The outer face is not marked."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pool = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        pool += [(0, n - 1)] + _triangulation_chords(n, rng)
    chosen = [p for p in pool if rng.random() < density]
    root = list(range(n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for i, j in chosen:
        root[find(i)] = find(j)
    for i in range(n - 1):
        if find(i) != find(i + 1):
            root[find(i)] = find(i + 1)
            chosen.append((i, i + 1))
    pairs = list(chosen)
    for _ in range(parallel if pairs else 0):
        pairs.append(rng.choice(chosen))
    arcs = [(i, j) if rng.random() < 0.5 else (j, i) for i, j in pairs]
    loop_at = [rng.randrange(n) for _ in range(loops)]
    arcs += [(v, v) for v in loop_at]

    around = [[] for _ in range(n)]
    for a, (t, h) in enumerate(arcs):
        if t == h:
            continue
        lo = min(t, h)
        # parallel arcs nest: ascending ids at the lower endpoint only
        around[t].append(((h - t) % n, a if t == lo else -a, 2 * a))
        around[h].append(((t - h) % n, a if h == lo else -a, 2 * a + 1))
    rotation = [[d for *_, d in sorted(ds, reverse=True)] for ds in around]
    for a, (t, h) in enumerate(arcs):
        if t == h:
            k = rng.randint(0, len(rotation[t]))
            rotation[t][k:k] = [2 * a, 2 * a + 1]
    emb = build_embedding(n, arcs, rotation)

    lower, upper, cost = [], [], []
    for _ in arcs:
        if inf_prob and rng.random() < inf_prob:
            up = INF
            lo = rng.randint(0, max_cap) if lower_bounds else 0
        else:
            up = rng.randint(0, max_cap)
            lo = rng.randint(0, up) if lower_bounds else 0
        lower.append(lo)
        upper.append(up)
        cost.append(rng.randint(-max_cost, max_cost))
    b = _balances(n, arcs, lower, upper, balance, max_cap, rng)
    return FlowNetwork(n, [t for t, _ in arcs], [h for _, h in arcs],
                       lower, upper, cost, b, emb)


def _balances(n, arcs, lower, upper, mode, max_cap, rng):
    b = [0] * n
    if mode == "random" and n >= 2:
        for _ in range(rng.randint(1, max(1, n // 2))):
            s, t = rng.sample(range(n), 2)
            x = rng.randint(1, max(1, max_cap))
            b[s] += x
            b[t] -= x
    elif mode == "feasible":
        for a, (t, h) in enumerate(arcs):
            hi = lower[a] + max_cap if upper[a] == INF else upper[a]
            f = rng.randint(lower[a], hi)
            b[t] += f
            b[h] -= f
    return b
