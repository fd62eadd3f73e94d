import math

import pytest
from hypothesis import assume, given, settings

from burning.exact import SearchExceeded, dominates, exact_burning_number, exact_domination_number
from burning.graph import Graph, disjoint_union, validate_schedule
from burning.instances import complete, cycle, path

from conftest import graphs, naive_burning_number, naive_domination_number


def test_path_nine():
    res = exact_burning_number(path(9))
    assert res.value == 3
    assert validate_schedule(path(9), res.witness)[0]
    assert res.witness.horizon == 3


def test_single_vertex():
    assert exact_burning_number(path(1)).value == 1


def test_two_disjoint_edges():
    # radii {0, 1} cannot reach both components' two vertices
    assert exact_burning_number(disjoint_union(path(2), path(2))).value == 3


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        exact_burning_number(Graph(0, ()))
    with pytest.raises(ValueError):
        exact_domination_number(Graph(0, ()))


def test_b_max_exceeded():
    with pytest.raises(SearchExceeded) as exc:
        exact_burning_number(path(10), b_max=3)
    assert exc.value.b_max == 3


@pytest.mark.parametrize("n", range(1, 18))
def test_paths_match_sqrt_formula(n):
    assert exact_burning_number(path(n)).value == math.isqrt(n - 1) + 1


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_matches_naive_center_enumeration(g):
    res = exact_burning_number(g)
    # keeps the (n + 1)^b enumeration small
    assume(res.value <= 5)
    assert naive_burning_number(g, b_limit=res.value) == res.value
    ok, _ = validate_schedule(g, res.witness)
    assert ok and res.witness.horizon == res.value


def test_domination_examples():
    assert exact_domination_number(complete(4)).value == 1
    assert exact_domination_number(path(4)).value == 2
    assert exact_domination_number(cycle(5)).value == 2


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_domination_matches_brute_force(g):
    res = exact_domination_number(g)
    assert res.value == naive_domination_number(g)
    assert len(res.witness) == res.value
    assert dominates(g, res.witness)
