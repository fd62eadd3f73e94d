import itertools
import random

import pytest
from hypothesis import strategies as st

from burning.graph import Graph, bfs_distances
from burning.instances import caterpillar, cycle, gnp, grid, path, random_forest, random_tree, spider, star

# acceptance lines collected by tests/test_acceptance.py and printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def naive_burning_number(g: Graph, b_limit: int = 6) -> int:
    """Try every tuple of centers (or 'unused') for radii 0..b-1, using plain set unions."""
    verts = range(g.vertex_count)
    dist = [bfs_distances(g, v) for v in verts]
    for b in range(1, b_limit + 1):
        for centers in itertools.product([None, *verts], repeat=b):
            covered = set()
            for radius, c in enumerate(centers):
                if c is not None:
                    covered.update(u for u in verts if 0 <= dist[c][u] <= radius)
            if len(covered) == g.vertex_count:
                return b
    raise AssertionError("b_limit too small")


def naive_domination_number(g: Graph) -> int:
    verts = range(g.vertex_count)
    for k in range(1, g.vertex_count + 1):
        for subset in itertools.combinations(verts, k):
            dom = set(subset)
            for v in subset:
                dom.update(g.adjacency[v])
            if len(dom) == g.vertex_count:
                return k
    raise AssertionError("unreachable")


def tree_from_parents(parents) -> Graph:
    """``parents[i]`` is the parent of vertex ``i + 1`` (must be <= i)."""
    n = len(parents) + 1
    return Graph.from_edges(n, [(p, i + 1) for i, p in enumerate(parents)])


@st.composite
def trees(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, i)) for i in range(n - 1)]
    return tree_from_parents(parents)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_edges(n, chosen)


def mixed_corpus(count: int, seed: int, max_n: int = 16):
    """Trees, forests, G(n,p), cycles, grids, caterpillars, spiders and stars with ``n <= max_n``."""
    out = []
    for i in range(count):
        rng = random.Random(seed * 7919 + i)
        kind = i % 8
        if kind == 0:
            g = random_tree(rng.randint(1, max_n), rng)
        elif kind == 1:
            n = rng.randint(2, max_n)
            g = random_forest(n, rng.randint(1, min(n, 4)), rng)
        elif kind in (2, 3):
            g = gnp(rng.randint(2, max_n), rng.choice([0.1, 0.2, 0.3, 0.5]), rng)
        elif kind == 4:
            g = cycle(rng.randint(3, max_n))
        elif kind == 5:
            r = rng.randint(1, 4)
            g = grid(r, rng.randint(1, max_n // r))
        elif kind == 6:
            g = caterpillar(rng.randint(1, 5), rng.randint(0, 2))
        else:
            g = spider(rng.randint(1, 4), rng.randint(1, 3)) if i % 16 == 7 else star(rng.randint(0, max_n - 1))
        out.append((f"mixed-{i:04d}", g))
    return out


@pytest.fixture
def p9():
    return path(9)
