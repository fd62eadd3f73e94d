"""Exact burning number and domination number by exhaustive search over bitmasks."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import BurningSchedule, Graph, all_pairs_distances

# cap on remembered dead (radius, coverage) states
_MEMO_LIMIT = 2_000_000


class SearchExceeded(RuntimeError):
    """The search could not finish within its horizon cap or time budget."""

    def __init__(self, message: str, b_max: int | None = None, nodes_explored: int = 0):
        super().__init__(message)
        self.b_max = b_max
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: BurningSchedule | frozenset[int]
    nodes_explored: int


def ball_masks(dist: list[list[int]], max_radius: int) -> list[list[int]]:
    """``masks[v][r]`` is the bitmask of ``ball(v, r)`` for ``r <= max_radius``."""
    n = len(dist)
    masks = []
    for v in range(n):
        by_radius = [0] * (max_radius + 1)
        for u, d in enumerate(dist[v]):
            if 0 <= d <= max_radius:
                by_radius[d] |= 1 << u
        acc = 0
        for r in range(max_radius + 1):
            acc |= by_radius[r]
            by_radius[r] = acc
        masks.append(by_radius)
    return masks


class _Deadline:
    def __init__(self, budget: float | None):
        self.stop = None if budget is None else time.monotonic() + budget
        self.nodes = 0

    def tick(self, b_max=None):
        self.nodes += 1
        if self.stop is not None and self.nodes & 1023 == 0 and time.monotonic() > self.stop:
            raise SearchExceeded("time budget exhausted", b_max, self.nodes)


def exact_burning_number(g: Graph, b_max: int | None = None, time_budget: float | None = None) -> ExactResult:
    """Smallest ``b <= b_max`` such that balls of distinct radii below ``b`` cover ``g``.

    Iterative deepening on ``b``. At each level the search walks radii from
    ``b - 1`` down to 0 and places each at a center that covers something new.
    Raises :class:`SearchExceeded` when no cover exists within ``b_max`` or the
    time budget runs out.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("empty graph")
    if b_max is None:
        b_max = n
    dist = all_pairs_distances(g)
    masks = ball_masks(dist, 2 * b_max)
    full = (1 << n) - 1
    clock = _Deadline(time_budget)
    dead: set[tuple[int, int]] = set()

    def packing_bound(uncovered: int, radius: int) -> int:
        # uncovered vertices pairwise more than 2*radius apart need separate balls
        count = 0
        rest = uncovered
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest &= ~masks[v][2 * radius]
            count += 1
        return count

    def search(radius: int, covered: int, placed: list) -> bool:
        if covered == full:
            return True
        if radius < 0:
            return False
        key = (radius, covered)
        if key in dead:
            return False
        clock.tick(b_max)
        uncovered = full & ~covered
        if packing_bound(uncovered, radius) > radius + 1:
            if len(dead) < _MEMO_LIMIT:
                dead.add(key)
            return False
        # distinct new-coverage sets; drop any strictly contained in another
        options: dict[int, int] = {}
        for c in range(n):
            gain = masks[c][radius] & uncovered
            if gain and gain not in options:
                options[gain] = c
        gains = sorted(options, key=lambda m: -m.bit_count())
        kept: list[int] = []
        for gain in gains:
            if not any(gain & k == gain for k in kept):
                kept.append(gain)
        for gain in kept:
            placed.append((options[gain], radius))
            if search(radius - 1, covered | gain, placed):
                return True
            placed.pop()
        # skipping this radius is dominated by any placement, so only try it when none exists
        if not kept and search(radius - 1, covered, placed):
            return True
        if len(dead) < _MEMO_LIMIT:
            dead.add(key)
        return False

    for b in range(1, b_max + 1):
        # dead states stay dead across levels: they only depend on the radii left
        placed: list[tuple[int, int]] = []
        if search(b - 1, 0, placed):
            return ExactResult(b, BurningSchedule(tuple(placed), b), clock.nodes)
    raise SearchExceeded(f"burning number exceeds {b_max}", b_max, clock.nodes)


def exact_domination_number(g: Graph, time_budget: float | None = None) -> ExactResult:
    """Minimum dominating set by branching on the closed neighbourhood of the lowest undominated vertex."""
    n = g.vertex_count
    if n == 0:
        raise ValueError("empty graph")
    closed = [(1 << v) | sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    max_cover = max(c.bit_count() for c in closed)
    clock = _Deadline(time_budget)

    # greedy incumbent
    best: list[int] = []
    dom = 0
    while dom != full:
        v = max(range(n), key=lambda u: ((closed[u] & ~dom).bit_count(), -u))
        best.append(v)
        dom |= closed[v]

    chosen: list[int] = []

    def search(dom: int) -> None:
        nonlocal best
        clock.tick()
        if dom == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        remaining = (full & ~dom).bit_count()
        if len(chosen) + -(-remaining // max_cover) >= len(best):
            return
        low = (full & ~dom) & -(full & ~dom)
        u = low.bit_length() - 1
        branch = [u, *g.adjacency[u]]
        branch.sort(key=lambda w: -(closed[w] & ~dom).bit_count())
        for w in branch:
            chosen.append(w)
            search(dom | closed[w])
            chosen.pop()

    search(0)
    return ExactResult(len(best), frozenset(best), clock.nodes)


def dominates(g: Graph, vertices) -> bool:
    dom = set(vertices)
    for v in list(dom):
        dom.update(g.adjacency[v])
    return len(dom) == g.vertex_count
