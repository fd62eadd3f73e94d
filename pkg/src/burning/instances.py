"""Benchmark instance generators and the domination-to-burning gadget."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .graph import BurningSchedule, Graph, bfs_distances, disjoint_union


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    ground_truth: int | None = None


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    if leaves < 0:
        raise ValueError("leaves must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider(legs: int, length: int) -> Graph:
    """``legs`` paths of ``length`` edges glued at vertex 0."""
    if legs < 0 or length < 1:
        raise ValueError("spider needs legs >= 0 and length >= 1")
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def caterpillar(spine: int, legs: int) -> Graph:
    """A path of ``spine`` vertices, each carrying ``legs`` pendant leaves."""
    if spine < 1 or legs < 0:
        raise ValueError("caterpillar needs spine >= 1 and legs >= 0")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        for _ in range(legs):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Each vertex ``i >= 1`` attaches to a uniformly random earlier vertex."""
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    return Graph.from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_forest(n: int, components: int, rng: random.Random) -> Graph:
    if not 1 <= components <= n:
        raise ValueError("need 1 <= components <= n")
    cuts = sorted(rng.sample(range(1, n), components - 1))
    sizes = [b - a for a, b in zip([0, *cuts], [*cuts, n])]
    return disjoint_union(*(random_tree(s, rng) for s in sizes))


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    if n < 1 or not 0 <= p <= 1:
        raise ValueError("gnp needs n >= 1 and 0 <= p <= 1")
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


GENERATORS = {
    "path": ("n",),
    "star": ("leaves",),
    "spider": ("legs", "length"),
    "caterpillar": ("spine", "legs"),
    "random_tree": ("n",),
    "random_forest": ("n", "components"),
    "grid": ("rows", "cols"),
    "gnp": ("n", "p"),
}


def generate(kind: str, params: dict, seed: int = 0, exact_budget: float | None = None) -> Instance:
    """Build a named instance; ground truth comes from a closed form or, if budgeted, the exact oracle."""
    if kind not in GENERATORS:
        raise ValueError(f"unknown generator {kind!r}")
    missing = [k for k in GENERATORS[kind] if k not in params]
    if missing:
        raise ValueError(f"{kind} needs parameters {missing}")
    rng = random.Random(seed)
    truth = None
    if kind == "path":
        g = path(int(params["n"]))
        truth = math.isqrt(g.n - 1) + 1
    elif kind == "star":
        g = star(int(params["leaves"]))
        truth = 1 if g.n == 1 else 2
    elif kind == "spider":
        g = spider(int(params["legs"]), int(params["length"]))
    elif kind == "caterpillar":
        g = caterpillar(int(params["spine"]), int(params["legs"]))
    elif kind == "random_tree":
        g = random_tree(int(params["n"]), rng)
    elif kind == "random_forest":
        g = random_forest(int(params["n"]), int(params["components"]), rng)
    elif kind == "grid":
        g = grid(int(params["rows"]), int(params["cols"]))
    else:
        g = gnp(int(params["n"]), float(params["p"]), rng)
    if truth is None and exact_budget is not None:
        from .exact import SearchExceeded, exact_burning_number

        try:
            truth = exact_burning_number(g, time_budget=exact_budget).value
        except SearchExceeded:
            pass
    label = ",".join(f"{k}={params[k]}" for k in GENERATORS[kind])
    if kind in ("random_tree", "random_forest", "gnp"):
        label += f",seed={seed}"
    return Instance(f"{kind}({label})", g, truth)


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism (brute force; n <= 5)."""
    if n == 1:
        return [Graph.from_edges(1, [])]
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    out = []
    for k in range(n - 1, len(pairs) + 1):
        for edges in itertools.combinations(pairs, k):
            canon = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
            if canon in seen:
                continue
            seen.add(canon)
            g = Graph.from_edges(n, edges)
            if min(bfs_distances(g, 0)) >= 0:
                out.append(g)
    return out


@dataclass(frozen=True)
class GadgetResult:
    gprime: Graph
    d: int
    original_vertex_map: tuple[int, ...]
    copy_vertex_map: tuple[int, ...]
    edge_path_map: dict[tuple[int, int], tuple[int, ...]]
    # internal vertices of the v -- v' path, listed from v towards v'
    copy_path_map: tuple[tuple[int, ...], ...]

    def maps_json(self) -> dict:
        return {
            "d": self.d,
            "original_vertex_map": {str(v): w for v, w in enumerate(self.original_vertex_map)},
            "copy_vertex_map": {str(v): w for v, w in enumerate(self.copy_vertex_map)},
            "edge_path_map": {f"{u}-{v}": list(p) for (u, v), p in self.edge_path_map.items()},
        }


def build_gadget(g: Graph, d: int) -> GadgetResult:
    """Subdivide every edge into a path of length ``2d`` and hang a path of length ``d`` to a copy of each vertex.

    Numbering: originals ``0..n-1``, copies ``n..2n-1``, then edge-path
    internals in edge order, then the internals of the vertex-to-copy paths.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    n = g.vertex_count
    if n == 0:
        raise ValueError("empty graph")
    edges = []
    nxt = 2 * n
    edge_paths = {}
    for u, v in g.edges():
        internal = tuple(range(nxt, nxt + 2 * d - 1))
        nxt += 2 * d - 1
        chain = [u, *internal, v]
        edges.extend(zip(chain, chain[1:]))
        edge_paths[(u, v)] = internal
    copy_paths = []
    for v in range(n):
        internal = tuple(range(nxt, nxt + d - 1))
        nxt += d - 1
        chain = [v, *internal, n + v]
        edges.extend(zip(chain, chain[1:]))
        copy_paths.append(internal)
    gprime = Graph.from_edges(nxt, edges)
    return GadgetResult(gprime, d, tuple(range(n)), tuple(range(n, 2 * n)), edge_paths, tuple(copy_paths))


def forward_schedule(gadget: GadgetResult, dominating_set) -> BurningSchedule:
    """Light the dominating set first, then let the fire run for ``3d`` more steps.

    The k-th lit vertex (0-based) burns for ``|D| - 1 - k + 3d`` steps, so the
    schedule has horizon ``|D| + 3d``.
    """
    dom = sorted(dominating_set)
    k = len(dom)
    balls = [(gadget.original_vertex_map[v], k - 1 - i + 3 * gadget.d) for i, v in enumerate(dom)]
    return BurningSchedule(tuple(balls), k + 3 * gadget.d)


def extract_dominating_set(gadget: GadgetResult, schedule: BurningSchedule) -> set[int]:
    """Map each ball center of G' back to original vertices.

    Centers strictly inside a subdivided edge contribute both endpoints; centers on
    a vertex, its copy, or the path between them contribute that vertex.
    """
    owner: dict[int, tuple[int, ...]] = {}
    for v, w in enumerate(gadget.original_vertex_map):
        owner[w] = (v,)
    for v, w in enumerate(gadget.copy_vertex_map):
        owner[w] = (v,)
    for v, internal in enumerate(gadget.copy_path_map):
        for w in internal:
            owner[w] = (v,)
    for (u, v), internal in gadget.edge_path_map.items():
        for w in internal:
            owner[w] = (u, v)
    out: set[int] = set()
    for center, _ in schedule.balls:
        out.update(owner[center])
    return out
