"""Graph substrate: adjacency, hop distances, balls, schedules, rooted forests, parsing."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Raised for malformed graph text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidScheduleError(ValueError):
    pass


class NotAForestError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"duplicate edge at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.vertex_count:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.adjacency[w]:
                    raise ValueError(f"adjacency not symmetric for {v}-{w}")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with ``u < v``."""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise ValueError(f"invalid vertex id {v!r}")


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.vertex_count
    return Graph.from_edges(offset, edges)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``UNREACHABLE`` (-1)."""
    g.check_vertex(source)
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def multi_source_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    dist = [UNREACHABLE] * g.vertex_count
    queue = deque()
    for s in sources:
        if dist[s] == UNREACHABLE:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.vertex_count)]


def ball(g: Graph, center: int, radius: int) -> set[int]:
    """Vertices at hop distance at most ``radius`` from ``center``."""
    g.check_vertex(center)
    if radius < 0:
        raise ValueError("radius must be non-negative")
    seen = {center}
    frontier = [center]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return seen


@dataclass(frozen=True)
class BurningSchedule:
    """Balls ``(center, radius)`` with distinct radii below ``horizon``.

    A valid schedule on ``g`` certifies ``b(g) <= horizon``; radii slots may be
    left unused.
    """

    balls: tuple[tuple[int, int], ...]
    horizon: int

    def __post_init__(self):
        object.__setattr__(self, "balls", tuple((int(c), int(r)) for c, r in self.balls))
        if self.horizon < 1:
            raise InvalidScheduleError("horizon must be positive")
        radii = [r for _, r in self.balls]
        if len(set(radii)) != len(radii):
            raise InvalidScheduleError(f"duplicate radii in {sorted(radii)}")
        for r in radii:
            if not 0 <= r < self.horizon:
                raise InvalidScheduleError(f"radius {r} outside [0, {self.horizon})")

    def to_json(self) -> dict:
        return {"horizon": self.horizon, "balls": [list(b) for b in self.balls]}


def uncovered_vertices(g: Graph, schedule: BurningSchedule) -> list[int]:
    covered: set[int] = set()
    for center, radius in schedule.balls:
        covered |= ball(g, center, radius)
    return [v for v in range(g.vertex_count) if v not in covered]


def validate_schedule(g: Graph, schedule: BurningSchedule) -> tuple[bool, list[int]]:
    """Return ``(True, [])`` if the balls cover every vertex, else ``(False, uncovered)``."""
    for center, _ in schedule.balls:
        g.check_vertex(center)
    missing = uncovered_vertices(g, schedule)
    return not missing, missing


@dataclass(frozen=True)
class RootedForest:
    graph: Graph
    parent: tuple[int | None, ...]
    roots: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    order: tuple[int, ...] = field(repr=False)  # BFS order, roots first

    def postorder(self) -> list[int]:
        return list(reversed(self.order))

    def subtree(self, v: int) -> list[int]:
        out = [v]
        i = 0
        while i < len(out):
            out.extend(self.children[out[i]])
            i += 1
        return out


def root_forest(g: Graph) -> RootedForest:
    """Root each component at its minimum-index vertex."""
    n = g.vertex_count
    parent: list[int | None] = [None] * n
    depth = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    roots = []
    order = []
    for s in range(n):
        if depth[s] != -1:
            continue
        roots.append(s)
        depth[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adjacency[u]:
                if w == parent[u]:
                    continue
                if depth[w] != -1:
                    raise NotAForestError(f"cycle through edge {u}-{w}")
                parent[w] = u
                depth[w] = depth[u] + 1
                children[u].append(w)
                queue.append(w)
    return RootedForest(
        graph=g,
        parent=tuple(parent),
        roots=tuple(roots),
        children=tuple(tuple(c) for c in children),
        depth=tuple(depth),
        order=tuple(order),
    )


def is_forest(g: Graph) -> bool:
    try:
        root_forest(g)
    except NotAForestError:
        return False
    return True


def _ints(parts: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    """Parse ``edge-list`` (0-indexed ``u v`` lines) or ``dimacs`` (``p edge n m`` / ``e u v``)."""
    if fmt in ("edge-list", "el"):
        return _parse_edge_list(text)
    if fmt in ("dimacs", "dimacs-like"):
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def _add_edge(edges: set, u: int, v: int, lineno: int) -> None:
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u}", lineno)
    key = (min(u, v), max(u, v))
    if key in edges:
        raise GraphFormatError(f"duplicate edge {key}", lineno)
    edges.add(key)


def _parse_edge_list(text: str) -> Graph:
    edges: set[tuple[int, int]] = set()
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {line!r}", lineno)
        u, v = _ints(parts, lineno)
        if u < 0 or v < 0:
            raise GraphFormatError("vertex ids must be non-negative", lineno)
        _add_edge(edges, u, v, lineno)
        top = max(top, u, v)
    return Graph.from_edges(top + 1, sorted(edges))


def _parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("repeated header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"bad header {line!r}", lineno)
            n, declared_m = _ints(parts[2:], lineno)
            if n < 0 or declared_m < 0:
                raise GraphFormatError("negative counts in header", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before 'p edge' header", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"bad edge line {line!r}", lineno)
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
            _add_edge(edges, u - 1, v - 1, lineno)
        else:
            raise GraphFormatError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge <n> <m>' header")
    if len(edges) != declared_m:
        raise GraphFormatError(f"header declares {declared_m} edges, found {len(edges)}")
    return Graph.from_edges(n, sorted(edges))


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.vertex_count} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
