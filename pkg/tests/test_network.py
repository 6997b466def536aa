import pytest

from helpers import biconnected_family, convex_network, general_family, triangle
from planarflow.errors import CapacityViolated, InvalidNetwork
from planarflow.network import (
    INF,
    FlowNetwork,
    build_darts,
    certify_optimal,
    check_feasible,
    excesses,
    find_negative_cycle,
    flow_cost,
    instance_stats,
    residual,
    shortest_paths,
)
from planarflow.oracle import solve_reference


def single_arc(c, lo, up, balance=(0, 0)):
    return FlowNetwork.from_arcs(2, [(0, 1, lo, up, c)], balance)


# -- construction --------------------------------------------------------------

def test_invalid_networks_rejected():
    with pytest.raises(InvalidNetwork):
        single_arc(0, 3, 2)
    with pytest.raises(InvalidNetwork):
        single_arc(0, 0, 1, (1, 0))
    with pytest.raises(InvalidNetwork):
        FlowNetwork.from_arcs(2, [(0, 2, 0, 1, 0)])


# -- build_darts ---------------------------------------------------------------

def test_darts_of_bounded_arc():
    darts = build_darts(single_arc(3, 1, 5))
    fwd, bwd = darts.forward[0], darts.backward[0]
    assert (fwd.cost, fwd.capacity) == (3, 5)
    assert (bwd.cost, bwd.capacity) == (-3, -1)
    assert (bwd.tail, bwd.head) == (1, 0)


def test_darts_of_uncapacitated_arc():
    darts = build_darts(single_arc(0, 0, INF))
    assert not darts.forward[0].capacitated
    assert darts.backward[0].capacitated
    assert (darts.backward[0].cost, darts.backward[0].capacity) == (0, 0)


def test_darts_of_forced_arc():
    darts = build_darts(single_arc(1, 4, 4))
    assert darts.forward[0].capacity == 4 and darts.backward[0].capacity == -4


def test_dart_costs_antisymmetric():
    for net in general_family(30, seed=1):
        darts = build_darts(net)
        assert all(f.cost == -b.cost for f, b in zip(darts.forward, darts.backward))


# -- instance_stats ------------------------------------------------------------

def test_stats_mixed():
    net = FlowNetwork.from_arcs(2, [(0, 1, 0, 5, -7), (1, 0, 1, INF, 2)], [3, -3])
    stats = instance_stats(net)
    assert (stats.C, stats.U) == (7, 5)


def test_stats_all_zero():
    stats = instance_stats(single_arc(0, 0, 0))
    assert (stats.C, stats.U) == (0, 0)


def test_stats_include_balances():
    assert instance_stats(single_arc(0, 0, 2, (10, -10))).U == 10


# -- check_feasible / flow_cost ------------------------------------------------

def test_zero_flow_feasible_on_circulation():
    assert check_feasible(triangle(), [0, 0, 0]).feasible


def test_over_capacity_reported():
    net = triangle(upper=(4, 4, 4))
    report = check_feasible(net, [5, 5, 5])
    assert [a for a, _, _ in report.capacity_violations] == [0, 1, 2]
    report = check_feasible(net, [4, 5, 4])
    assert report.capacity_violations == [(1, 5, 4)]


def test_single_arc_meets_demand():
    assert check_feasible(single_arc(0, 0, 5, (3, -3)), [3]).feasible
    report = check_feasible(single_arc(0, 0, 5, (3, -3)), [2])
    assert report.balance_violations == [(0, 1), (1, -1)]


def test_flow_cost_examples():
    assert flow_cost(triangle(costs=(1, 2, 3)), [0, 0, 0]) == 0
    assert flow_cost(single_arc(-4, 0, 5), [3]) == -12
    net = FlowNetwork.from_arcs(2, [(0, 1, 0, 9, 2), (1, 0, 0, 9, -1)])
    assert flow_cost(net, [5, 5]) == 5


# -- residual ------------------------------------------------------------------

def _arcs(res):
    return sorted(zip(res.tails, res.heads, res.capacity, res.cost))


def test_residual_at_zero():
    assert _arcs(residual(single_arc(2, 0, 5), [0])) == [(0, 1, 5, 2)]


def test_residual_at_capacity():
    assert _arcs(residual(single_arc(2, 0, 5), [5])) == [(1, 0, 5, -2)]


def test_residual_in_between():
    assert _arcs(residual(single_arc(2, 0, 5), [3])) == [(0, 1, 2, 2), (1, 0, 3, -2)]


def test_residual_respects_lower_bound():
    assert _arcs(residual(single_arc(2, 2, INF), [2])) == [(0, 1, INF, 2)]


def test_residual_rejects_violations():
    with pytest.raises(CapacityViolated):
        residual(single_arc(2, 0, 5), [6])


# -- shortest paths ------------------------------------------------------------

def test_shortest_paths_from_source():
    dist, _, cycle = shortest_paths(3, [0, 1, 0], [1, 2, 2], [4, -3, 2], source=0)
    assert dist == [0, 4, 1] and cycle is None


def test_negative_cycle_found():
    cycle = find_negative_cycle(3, [0, 1, 2], [1, 2, 0], [1, 1, -3])
    assert sorted(cycle) == [0, 1, 2]
    assert find_negative_cycle(3, [0, 1, 2], [1, 2, 0], [1, 1, -2]) is None


# -- certify_optimal -----------------------------------------------------------

def test_oracle_output_certifies():
    for net in general_family(150, seed=2):
        out = solve_reference(net)
        if out.optimal:
            assert certify_optimal(net, out.flow)


def test_negative_cycle_witness():
    net = triangle(costs=(1, 1, -5), upper=(3, 2, 4))
    cert = certify_optimal(net, [0, 0, 0])
    assert not cert
    assert sorted(cert.cycle) == [(0, True), (1, True), (2, True)]


def test_nonnegative_costs_zero_flow_optimal():
    assert certify_optimal(triangle(costs=(1, 0, 2), upper=(3, 3, 3)), [0, 0, 0])


def test_infeasible_flow_not_certified():
    assert not certify_optimal(single_arc(0, 0, 5, (3, -3)), [2])


def test_witness_push_lowers_cost():
    # a unit pushed along any reported residual cycle must be an improvement
    seen = 0
    for net in biconnected_family(150, seed=3, balance="zero"):
        flow = list(net.lower)
        cert = certify_optimal(net, flow)
        if cert.cycle is None:
            continue
        seen += 1
        pushed = list(flow)
        for a, fwd in cert.cycle:
            pushed[a] += 1 if fwd else -1
        assert excesses(net, pushed) == excesses(net, flow)
        assert not check_feasible(net, pushed).capacity_violations
        assert flow_cost(net, pushed) < flow_cost(net, flow)
    assert seen > 20


def test_convex_network_default_data():
    net = convex_network(3, [(0, 1), (1, 2), (2, 0)])
    assert net.upper == [INF] * 3 and net.cost == [0] * 3
