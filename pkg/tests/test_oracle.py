import random

from helpers import general_family
from planarflow.network import INF, INFEASIBLE, OPTIMAL, UNBOUNDED, FlowNetwork, certify_optimal
from planarflow.oracle import solve_reference, solve_tiny_exhaustive


def single_arc(balance):
    return FlowNetwork.from_arcs(2, [(0, 1, 0, 5, 2)], balance)


def test_single_arc_optimal():
    out = solve_reference(single_arc((3, -3)))
    assert out.status == OPTIMAL and out.cost == 6 and out.flow == [3]


def test_single_arc_over_demand():
    assert solve_reference(single_arc((7, -7))).status == INFEASIBLE


def test_uncapacitated_negative_cycle_unbounded():
    net = FlowNetwork.from_arcs(2, [(0, 1, 0, INF, -1), (1, 0, 0, INF, 0)])
    assert solve_reference(net).status == UNBOUNDED


def test_capacitated_negative_cycle_optimal():
    net = FlowNetwork.from_arcs(2, [(0, 1, 0, 3, -1), (1, 0, 0, INF, 0)])
    out = solve_reference(net)
    assert out.status == OPTIMAL and out.cost == -3


def test_infeasible_beats_unbounded():
    net = FlowNetwork.from_arcs(
        3, [(0, 1, 0, INF, -1), (1, 0, 0, INF, 0), (1, 2, 0, 1, 0)], [0, 2, -2])
    assert solve_reference(net).status == INFEASIBLE
    assert solve_tiny_exhaustive(net).status == INFEASIBLE


def test_empty_network():
    for solve in (solve_reference, solve_tiny_exhaustive):
        out = solve(FlowNetwork.from_arcs(0, []))
        assert out.status == OPTIMAL and out.cost == 0


def test_forced_arc():
    net = FlowNetwork.from_arcs(2, [(0, 1, 2, 2, 5)], [2, -2])
    for solve in (solve_reference, solve_tiny_exhaustive):
        out = solve(net)
        assert out.status == OPTIMAL and out.flow == [2] and out.cost == 10


def tiny_corpus(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 4)
        m = rng.randint(0, 4)
        arcs = []
        for _ in range(m):
            lo = rng.randint(0, 1)
            up = INF if rng.random() < 0.3 else rng.randint(lo, 3)
            arcs.append((rng.randrange(n), rng.randrange(n), lo, up, rng.randint(-3, 3)))
        balance = [rng.randint(-3, 3) for _ in range(n - 1)]
        balance.append(-sum(balance))
        if abs(balance[-1]) > 3:
            continue
        out.append(FlowNetwork.from_arcs(n, arcs, balance))
    return out


def test_reference_agrees_with_exhaustive():
    statuses = set()
    for net in tiny_corpus(400, seed=1):
        ref, brute = solve_reference(net), solve_tiny_exhaustive(net)
        assert ref.status == brute.status
        statuses.add(ref.status)
        if ref.optimal:
            assert ref.cost == brute.cost
            assert certify_optimal(net, ref.flow)
    assert statuses == {OPTIMAL, INFEASIBLE, UNBOUNDED}


def test_reference_flows_certify_on_outerplanar_corpus():
    for net in general_family(100, seed=2):
        out = solve_reference(net)
        if out.optimal:
            assert certify_optimal(net, out.flow)
