"""Line-oriented instance files.

::

    c <comment>
    p flow <n> <m>
    n <vertex> <balance>
    a <arc> <tail> <head> <lower> <upper|inf> <cost>
    e <vertex> <signed-arc>...
    o <arc> <L|R>

Ids are 1-based.  In an ``e`` line, ``+k`` is the dart of arc ``k``
leaving its tail and ``-k`` the dart leaving its head; the darts are listed
clockwise.  ``o`` names the outer face by the side of an arc it lies on.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .embedded import build_embedding
from .errors import ParseError, PlanarFlowError
from .network import INF, FlowNetwork


@dataclass
class Instance:
    network: FlowNetwork
    outer_dart: int | None = None
    comments: list[str] = field(default_factory=list)


def _signed_to_dart(token: str, m: int, line: int) -> int:
    try:
        k = int(token)
    except ValueError:
        raise ParseError(f"bad arc reference {token!r}", line) from None
    if k == 0 or abs(k) > m:
        raise ParseError(f"arc reference {k} out of range", line)
    return 2 * (k - 1) if k > 0 else 2 * (-k - 1) + 1


def _dart_to_signed(d: int) -> str:
    k = (d >> 1) + 1
    return f"-{k}" if d & 1 else f"+{k}"


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None


def parse_instance(text: str) -> Instance:
    n = m = None
    balance = None
    arcs = None
    rotation = None
    outer = None
    comments = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        fields = raw.split()
        if not fields:
            continue
        kind = fields[0]
        if kind == "c":
            comments.append(raw[2:] if len(raw) > 1 else "")
            continue
        if n is None:
            if kind != "p":
                raise ParseError("the first non-comment line must be 'p flow <n> <m>'", lineno)
            if len(fields) != 4 or fields[1] != "flow":
                raise ParseError("expected 'p flow <n> <m>'", lineno)
            n, m = _int(fields[2], lineno, "n"), _int(fields[3], lineno, "m")
            if n < 0 or m < 0:
                raise ParseError("counts must be non-negative", lineno)
            balance = [0] * n
            arcs = [None] * m
            continue
        if kind == "p":
            raise ParseError("duplicate 'p' line", lineno)
        if kind == "n":
            if len(fields) != 3:
                raise ParseError("expected 'n <vertex> <balance>'", lineno)
            v = _int(fields[1], lineno, "vertex id")
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} out of range", lineno)
            balance[v - 1] = _int(fields[2], lineno, "balance")
        elif kind == "a":
            if len(fields) != 7:
                raise ParseError("expected 'a <id> <tail> <head> <lower> <upper|inf> <cost>'", lineno)
            k = _int(fields[1], lineno, "arc id")
            if not 1 <= k <= m:
                raise ParseError(f"arc {k} out of range", lineno)
            if arcs[k - 1] is not None:
                raise ParseError(f"arc {k} defined twice", lineno)
            t, h = _int(fields[2], lineno, "tail"), _int(fields[3], lineno, "head")
            if not (1 <= t <= n and 1 <= h <= n):
                raise ParseError(f"arc {k} endpoint out of range", lineno)
            lo = _int(fields[4], lineno, "lower bound")
            up = INF if fields[5] == "inf" else _int(fields[5], lineno, "upper bound")
            if not 0 <= lo <= up:
                raise ParseError(f"arc {k} violates 0 <= lower <= upper", lineno)
            arcs[k - 1] = (t - 1, h - 1, lo, up, _int(fields[6], lineno, "cost"))
        elif kind == "e":
            if len(fields) < 2:
                raise ParseError("expected 'e <vertex> <signed-arc>...'", lineno)
            v = _int(fields[1], lineno, "vertex id")
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} out of range", lineno)
            if rotation is None:
                rotation = [None] * n
            if rotation[v - 1] is not None:
                raise ParseError(f"rotation of vertex {v} given twice", lineno)
            rotation[v - 1] = [_signed_to_dart(tok, m, lineno) for tok in fields[2:]]
        elif kind == "o":
            if len(fields) != 3 or fields[2] not in ("L", "R"):
                raise ParseError("expected 'o <arc> <L|R>'", lineno)
            k = _int(fields[1], lineno, "arc id")
            if not 1 <= k <= m:
                raise ParseError(f"arc {k} out of range", lineno)
            outer = 2 * (k - 1) + (fields[2] == "R")
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p flow <n> <m>' line")
    missing = [k + 1 for k, a in enumerate(arcs) if a is None]
    if missing:
        raise ParseError(f"arc {missing[0]} is never defined")
    if sum(balance) != 0:
        raise ParseError("balances do not sum to zero")
    embedding = None
    if rotation is not None:
        rotation = [r if r is not None else [] for r in rotation]
        try:
            embedding = build_embedding(n, [(t, h) for t, h, *_ in arcs], rotation)
        except PlanarFlowError as exc:
            raise ParseError(f"invalid embedding: {exc}") from None
    net = FlowNetwork.from_arcs(n, arcs, balance, embedding)
    return Instance(net, outer, comments)


def read_instance(path) -> Instance:
    with open(path, encoding="ascii") as fh:
        return parse_instance(fh.read())


def serialize_instance(inst: Instance) -> str:
    """Canonical text: comments, header, non-zero balances, arcs, rotations
    of vertices with darts, then the outer face."""
    net = inst.network
    out = [f"c {c}" if c else "c" for c in inst.comments]
    out.append(f"p flow {net.n} {net.m}")
    out += [f"n {v + 1} {b}" for v, b in enumerate(net.balance) if b]
    for a in range(net.m):
        up = "inf" if net.upper[a] == INF else str(net.upper[a])
        out.append(f"a {a + 1} {net.tails[a] + 1} {net.heads[a] + 1} "
                   f"{net.lower[a]} {up} {net.cost[a]}")
    if net.embedding is not None:
        for v, rot in enumerate(net.embedding.rotation):
            if rot:
                out.append(f"e {v + 1} " + " ".join(_dart_to_signed(d) for d in rot))
    if inst.outer_dart is not None:
        out.append(f"o {(inst.outer_dart >> 1) + 1} {'R' if inst.outer_dart & 1 else 'L'}")
    return "\n".join(out) + "\n"


def format_solution(status: str, cost=None, flow=None) -> str:
    out = [f"t {status}"]
    if cost is not None:
        out.append(f"s {cost}")
    if flow is not None:
        out += [f"f {a + 1} {f}" for a, f in enumerate(flow)]
    return "\n".join(out) + "\n"
