"""Instance builders shared by the test modules."""
import random

from planarflow.embedded import build_embedding
from planarflow.generator import (
    OUTER_DART,
    convex_rotation,
    random_connected_outerplanar,
    random_outerplanar,
)
from planarflow.network import INF, FlowNetwork


def convex_network(n, arcs, data=None, balance=None):
    """Network on vertices placed counterclockwise on a circle.

    ``data[a] = (lower, upper, cost)``; defaults to ``(0, INF, 0)``.
    """
    emb = build_embedding(n, arcs, convex_rotation(n, arcs))
    data = data or [(0, INF, 0)] * len(arcs)
    return FlowNetwork.from_arcs(
        n, [(t, h, lo, up, c) for (t, h), (lo, up, c) in zip(arcs, data)], balance, emb)


def triangle(costs=(0, 0, 0), lower=(0, 0, 0), upper=(INF, INF, INF), balance=None):
    """Directed triangle 0 -> 1 -> 2 -> 0; the outer face is left of dart 1."""
    data = list(zip(lower, upper, costs))
    return convex_network(3, [(0, 1), (1, 2), (2, 0)], data, balance)


def biconnected_family(count, seed, n_range=(3, 40), **overrides):
    """Generated biconnected instances mixing every data regime."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        kw = dict(
            lower_bounds=rng.random() < 0.5,
            balance=rng.choice(["zero", "random", "feasible"]),
            inf_prob=rng.choice([0.0, 0.2, 0.5]),
        )
        kw.update(overrides)
        out.append(random_outerplanar(rng.randint(*n_range), None, seed=rng, **kw))
    return out


def general_family(count, seed, n_range=(1, 25), **overrides):
    """Connected outerplanar instances with bridges, parallels and loops."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        kw = dict(
            density=rng.random(),
            parallel=rng.randint(0, 3),
            loops=rng.randint(0, 2),
            lower_bounds=rng.random() < 0.5,
            balance=rng.choice(["zero", "random", "feasible"]),
            inf_prob=rng.choice([0.0, 0.2, 0.5]),
        )
        kw.update(overrides)
        out.append(random_connected_outerplanar(rng.randint(*n_range), seed=rng, **kw))
    return out




def random_fat_tree(rng, k, inf_prob=0.2, negative=True):
    """Apex plus a ``k``-vertex tree, every tree edge a bundle of 1-3 arcs."""
    from planarflow.fattree import FatTreeInstance

    n = k + 1
    apex = rng.randrange(n)
    others = [v for v in range(n) if v != apex]
    rng.shuffle(others)
    arcs = []

    def bundle(u, v):
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.5:
                u, v = v, u
            cap = INF if rng.random() < inf_prob else rng.randint(0, 20)
            arcs.append((u, v, 0, cap, rng.randint(-10 if negative else 0, 10)))

    for i in range(1, k):
        bundle(others[i], others[rng.randrange(i)])
    for v in others:
        if rng.random() < 0.6:
            bundle(v, apex)
    balance = [rng.randint(-5, 5) for _ in range(n)]
    balance[apex] -= sum(balance)
    return FatTreeInstance(FlowNetwork.from_arcs(n, arcs, balance), apex)


__all__ = ["OUTER_DART", "biconnected_family", "convex_network", "general_family",
           "random_fat_tree", "triangle"]
