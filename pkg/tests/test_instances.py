import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burning.exact import dominates, exact_burning_number, exact_domination_number
from burning.graph import BurningSchedule, bfs_distances, is_forest, validate_schedule
from burning.instances import (
    GENERATORS,
    build_gadget,
    complete,
    connected_graphs,
    cycle,
    extract_dominating_set,
    forward_schedule,
    generate,
    grid,
    path,
    random_forest,
    random_tree,
    spider,
    star,
)

from conftest import graphs


@pytest.mark.parametrize(
    "g, d, n_prime, m_prime",
    [(path(2), 1, 5, 4), (path(2), 2, 9, 8), (complete(3), 1, 9, 9), (path(1), 3, 4, 3)],
)
def test_gadget_counts(g, d, n_prime, m_prime):
    gp = build_gadget(g, d).gprime
    assert (gp.vertex_count, gp.edge_count) == (n_prime, m_prime)


@settings(max_examples=40)
@given(graphs(max_n=6), st.integers(1, 3))
def test_gadget_size_formula_and_distances(g, d):
    n, m = g.vertex_count, g.edge_count
    gad = build_gadget(g, d)
    gp = gad.gprime
    assert gp.vertex_count == 2 * n + m * (2 * d - 1) + n * (d - 1)
    assert gp.edge_count == 2 * d * m + d * n
    for v in range(n):
        dist = bfs_distances(gp, gad.original_vertex_map[v])
        assert dist[gad.copy_vertex_map[v]] == d
        assert len(gp.adjacency[gad.copy_vertex_map[v]]) == 1
        for u in g.adjacency[v]:
            assert dist[gad.original_vertex_map[u]] == 2 * d


def test_gadget_maps_json():
    gad = build_gadget(path(2), 2)
    maps = gad.maps_json()
    assert maps["original_vertex_map"] == {"0": 0, "1": 1}
    assert maps["copy_vertex_map"] == {"0": 2, "1": 3}
    assert maps["edge_path_map"] == {"0-1": [4, 5, 6]}
    with pytest.raises(ValueError):
        build_gadget(path(2), 0)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6), st.integers(1, 3))
def test_forward_schedule_burns_gadget(g, d):
    gad = build_gadget(g, d)
    dom = exact_domination_number(g).witness
    sched = forward_schedule(gad, dom)
    assert sched.horizon == len(dom) + 3 * d
    assert validate_schedule(gad.gprime, sched)[0]


def test_extraction_maps_owners():
    gad = build_gadget(path(3), 2)
    mid_edge = gad.edge_path_map[(0, 1)][1]
    copy_path = gad.copy_path_map[2][0]
    sched = BurningSchedule(((mid_edge, 2), (copy_path, 1), (gad.copy_vertex_map[1], 0)), 3)
    assert extract_dominating_set(gad, sched) == {0, 1, 2}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [1, 2])
def test_reverse_direction_on_small_graphs(n, d):
    for g in connected_graphs(n):
        gad = build_gadget(g, d)
        gamma = exact_domination_number(g).value
        res = exact_burning_number(gad.gprime, b_max=gamma + 3 * d)
        assert res.value <= gamma + 3 * d
        dom = extract_dominating_set(gad, res.witness)
        assert dominates(g, dom)
        if res.value < 5 * d:
            assert len(dom) <= 2 * res.value


def test_connected_graph_counts():
    assert [len(connected_graphs(n)) for n in range(1, 5)] == [1, 1, 2, 6]


def test_fixed_generators():
    assert generate("path", {"n": "9"}).ground_truth == 3
    assert generate("star", {"leaves": 5}).ground_truth == 2
    assert generate("star", {"leaves": 0}).ground_truth == 1
    assert star(4).edge_count == 4
    assert spider(3, 2).vertex_count == 7
    assert grid(2, 3).edge_count == 7
    assert cycle(5).edge_count == 5


def test_random_generators_are_forests_and_deterministic():
    g = random_tree(10, random.Random(1))
    assert g.vertex_count == 10 and g.edge_count == 9 and is_forest(g)
    f = random_forest(12, 3, random.Random(2))
    assert f.edge_count == 9 and is_forest(f)
    a = generate("gnp", {"n": 12, "p": 0.3}, seed=4)
    b = generate("gnp", {"n": 12, "p": 0.3}, seed=4)
    assert a == b and a.name == "gnp(n=12,p=0.3,seed=4)"


def test_generate_with_exact_budget():
    inst = generate("random_tree", {"n": 10}, seed=3, exact_budget=10.0)
    assert inst.ground_truth == exact_burning_number(inst.graph).value
    assert generate("random_tree", {"n": 10}, seed=3).ground_truth is None


@pytest.mark.parametrize(
    "kind, params",
    [("nope", {}), ("path", {}), ("path", {"n": 0}), ("gnp", {"n": 3, "p": 2}), ("random_forest", {"n": 2, "components": 3})],
)
def test_generate_rejects_bad_parameters(kind, params):
    with pytest.raises(ValueError):
        generate(kind, params)


def test_generator_table():
    assert set(GENERATORS) >= {"path", "star", "spider", "caterpillar", "random_tree", "grid", "gnp"}
