"""Greedy burning: put a ball of radius 0, 1, 2, ... on some uncovered vertex until none is left."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import UNREACHABLE, BurningSchedule, Graph, ball, multi_source_distances

TIE_BREAKS = ("farthest", "min-index")


@dataclass(frozen=True)
class GreedyResult:
    r: int
    schedule: BurningSchedule
    centers_in_order: tuple[int, ...]

    @property
    def lower_bound(self) -> int:
        """``ceil(r / 3)``: the greedy value is at most three times the optimum."""
        return -(-self.r // 3)


def _pick_farthest(g: Graph, covered: list[bool]) -> int:
    dist = multi_source_distances(g, (v for v in range(g.vertex_count) if covered[v]))
    best, best_key = -1, None
    for v in range(g.vertex_count):
        if covered[v]:
            continue
        # unreachable from the covered set counts as infinitely far
        key = float("inf") if dist[v] == UNREACHABLE else dist[v]
        if best_key is None or key > best_key:
            best, best_key = v, key
    return best


def greedy_burning(g: Graph, tie_break: str = "farthest") -> GreedyResult:
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"unknown tie-break {tie_break!r}")
    covered = [False] * g.vertex_count
    remaining = g.vertex_count
    centers: list[int] = []
    r = 0
    while remaining:
        if tie_break == "min-index":
            v = covered.index(False)
        else:
            v = _pick_farthest(g, covered)
        for u in ball(g, v, r):
            if not covered[u]:
                covered[u] = True
                remaining -= 1
        centers.append(v)
        r += 1
    schedule = BurningSchedule(tuple((c, i) for i, c in enumerate(centers)), r)
    return GreedyResult(r, schedule, tuple(centers))
