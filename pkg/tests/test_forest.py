import random

import pytest

from naive import replay_capacity, replay_cost
from planarflow.errors import CycleCreation, DetachedVertex, EmptyLeafSet, ForestError, MissingArc
from planarflow.forest import INF, CapacityForest, CostForest


def capacity_path(caps):
    """Vertex i hangs under i + 1; ``caps`` lists capacities root-ward from 0."""
    f = CapacityForest(len(caps) + 1)
    for i, c in enumerate(caps):
        f.link(i, i + 1, c)
    return f


# -- CapacityForest ------------------------------------------------------------

def test_cut_middle_of_path_splits():
    f = capacity_path([4, 4])
    f.cut(1)
    assert f.find_root(0) == 1 and f.find_root(2) == 2


def test_path_min_and_add():
    f = capacity_path([5, 2, 7])
    assert f.path_min(0) == (2, 1)
    f.path_add(0, -2)
    assert f.path_min(0) == (0, 1)
    assert [f.capacity(v) for v in range(3)] == [3, 0, 5]


def test_deepest_minimum_wins_ties():
    assert capacity_path([3, 1, 1, 4]).path_min(0) == (1, 1)


def test_replace_is_cut_then_link():
    f, g = capacity_path([5, 2, 7]), capacity_path([5, 2, 7])
    f.replace(1, 9)
    g.cut(1)
    g.link(1, 2, 9)
    assert f.path_min(0) == g.path_min(0) == (5, 0)


def test_capacity_errors():
    f = capacity_path([1, 1])
    with pytest.raises(CycleCreation):
        f.link(2, 0, 1)
    with pytest.raises(ForestError):
        f.link(0, 2, 1)
    with pytest.raises(MissingArc):
        f.cut(2)
    with pytest.raises(DetachedVertex):
        f.path_min(2)


def test_from_parents_and_values():
    f = CapacityForest.from_parents([1, 2, -1, 2], [5, 3, 0, 8])
    assert f.values() == [5, 3, INF, 8]
    f.path_add(0, -1)
    assert f.values() == [4, 2, INF, 8]
    assert f.path_min(3) == (8, 3)


def test_capacity_forest_matches_mirror():
    rng = random.Random(1)
    for n in (2, 5, 30, 300):
        assert replay_capacity(CapacityForest(n), n, 3000, rng) > 1000


# -- CostForest ----------------------------------------------------------------

def test_global_min_over_designated():
    f = CostForest.from_parents([-1, 0, 0, 0], [None, 4, 1, 9])
    assert f.global_min() == (2, 1)


def test_subtree_add_moves_minimum():
    f = CostForest.from_parents([-1, 0, 0, 0], [None, 4, 1, 9])
    f.subtree_add(2, 5)
    assert f.global_min() == (1, 4)
    assert f.cost(2) == 6


def test_subtree_add_at_root_shifts_all():
    f = CostForest.from_parents([-1, 0, 1, 1], [None, None, 3, 2])
    f.subtree_add(0, -10)
    assert f.global_min() == (3, -8)


def test_cut_and_link_move_subtree():
    f = CostForest.from_parents([-1, 0, 1, 0], [None, None, 2, 7])
    f.cut(1)
    f.link(1, 3)
    f.subtree_add(3, 1)
    assert f.cost(2) == 3 and f.cost(3) == 8
    assert f.in_subtree(2, 3) and not f.in_subtree(3, 1)


def test_cost_errors():
    f = CostForest.from_parents([-1, 0], None)
    with pytest.raises(EmptyLeafSet):
        f.global_min()
    f.cut(1)
    f.link(0, 1)
    with pytest.raises(CycleCreation):
        f.link(1, 0)
    with pytest.raises(MissingArc):
        CostForest(3).cut(1)
    with pytest.raises(CycleCreation):
        CostForest.from_parents([1, 0], None)


def test_cost_forest_matches_mirror():
    rng = random.Random(2)
    for n in (1, 4, 30, 300):
        assert replay_cost(CostForest(n), n, 3000, rng) > 1000
