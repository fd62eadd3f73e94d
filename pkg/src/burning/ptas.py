"""Approximation scheme for burning forests via dynamic programming over cover vectors.

A *cover* of a graph is a multiset of radii such that the vertices split into
connected parts, the i-th of radius at most the i-th radius. With every radius
rounded up to a multiple of ``a`` a cover becomes a short vector of counts per
radius class, and the covers of each rooted subtree can be tabulated bottom-up:

* ``C_0(v)``: covers of the subtree ``D(v)``;
* ``C_k(v)``, ``k >= 1``: covers of ``D(v)`` minus a connected set around ``v``
  (possibly empty) whose vertices lie at distance ``< k`` from ``v``.

The part containing ``v`` in a cover of ``D(v)`` is centered at some
``v0 in D(v)`` with some class radius ``r``. Every subtree hanging off the
``v0 .. v`` path may lose a region within ``r - d(v0, w)`` of its root ``w``,
which is the ``C_k(w)`` with ``k = r - d(v0, w) + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph import BurningSchedule, Graph, RootedForest, root_forest, validate_schedule
from .greedy import greedy_burning

# C_k subscript is r - d(v0, w) + offset. +1 makes the removed region exactly
# ball(w, r - d(v0, w)); -1 is the shallower alternative kept for comparison.
SUBSCRIPT_OFFSET = 1
LITERAL_SUBSCRIPT_OFFSET = -1


class CoverSetTooLarge(RuntimeError):
    pass


class NoCoverFound(RuntimeError):
    """No tabulated cover fits the greedy bound; only possible with a non-default subscript offset."""


@dataclass(frozen=True)
class RadiusClasses:
    """Class ``j`` stands for radius ``j * a``, ``j = 0 .. class_count - 1``."""

    a: int
    class_count: int

    def __post_init__(self):
        if self.a < 1 or self.class_count < 1:
            raise ValueError("a and class_count must be positive")

    def radius(self, j: int) -> int:
        return j * self.a

    @property
    def max_radius(self) -> int:
        return (self.class_count - 1) * self.a

    @classmethod
    def for_upper_bound(cls, a: int, upper: int) -> RadiusClasses:
        """Enough classes to round every radius below ``upper`` up to a multiple of ``a``."""
        return cls(a, -(-(max(upper, 1) - 1) // a) + 1)


def rounded_multiset(classes: RadiusClasses, b: int) -> tuple[int, ...]:
    """Counts per class of the multiset ``{a * ceil(i / a) : 0 <= i < b}``."""
    if b < 0:
        raise ValueError("b must be non-negative")
    a = classes.a
    counts = [0] * classes.class_count
    for i in range(b):
        j = -(-i // a)
        if j >= classes.class_count:
            raise ValueError(f"b={b} needs radius {j * a} beyond the largest class {classes.max_radius}")
        counts[j] += 1
    return tuple(counts)


def _suffix(vec: Iterable[int]) -> tuple[int, ...]:
    out = []
    acc = 0
    for c in reversed(tuple(vec)):
        acc += c
        out.append(acc)
    return tuple(reversed(out))


def fits(cover: tuple[int, ...], budget: tuple[int, ...]) -> bool:
    """Whether every ball of ``cover`` can be matched to a distinct ball of ``budget`` at least as large.

    Greedy matching from the largest class down succeeds iff, for every
    threshold, the budget has at least as many balls at or above it.
    """
    if len(cover) != len(budget):
        raise ValueError("cover vectors use different radius classes")
    need = have = 0
    for c, b in zip(reversed(cover), reversed(budget)):
        need += c
        have += b
        if need > have:
            return False
    return True


def dominated_by(small: tuple[int, ...], large: tuple[int, ...]) -> bool:
    """Multiset domination: ``small`` maps injectively into ``large`` without shrinking radii."""
    return fits(small, large)


# Witnesses are cons-style trees: None (no balls), ("b", center, class), ("+", left, right).
def flatten_witness(w) -> list[tuple[int, int]]:
    out = []
    stack = [w]
    while stack:
        node = stack.pop()
        if node is None:
            continue
        if node[0] == "b":
            out.append((node[1], node[2]))
        else:
            stack.append(node[2])
            stack.append(node[1])
    return out


class CoverSet:
    """A set of cover vectors over shared radius classes, each with one generating witness."""

    def __init__(self, classes: RadiusClasses, items: dict | Iterable = ()):
        self.classes = classes
        if isinstance(items, dict):
            self._items = dict(items)
        else:
            self._items = {}
            for vec in items:
                vec = tuple(vec)
                if len(vec) != classes.class_count:
                    raise ValueError("vector length does not match the radius classes")
                self._items.setdefault(vec, None)

    @classmethod
    def zero(cls, classes: RadiusClasses) -> CoverSet:
        return cls(classes, {(0,) * classes.class_count: None})

    @classmethod
    def unit(cls, classes: RadiusClasses, j: int, center: int | None = None) -> CoverSet:
        vec = [0] * classes.class_count
        vec[j] = 1
        return cls(classes, {tuple(vec): ("b", center, j)})

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __contains__(self, vec) -> bool:
        return tuple(vec) in self._items

    def __eq__(self, other) -> bool:
        if isinstance(other, CoverSet):
            return self.classes == other.classes and set(self._items) == set(other._items)
        return NotImplemented

    def __repr__(self):
        return f"CoverSet({sorted(self._items)})"

    @property
    def vectors(self) -> set[tuple[int, ...]]:
        return set(self._items)

    def witness(self, vec) -> list[tuple[int, int]]:
        """The ``(center, class)`` balls that generated ``vec``."""
        return flatten_witness(self._items[tuple(vec)])

    def items(self):
        return self._items.items()


@dataclass
class _Limits:
    """Filters applied to every produced set: size cap, budget and optional Pareto pruning."""

    max_total: int | None = None
    budget_suffix: tuple[int, ...] | None = None
    prune: bool = True
    size_cap: int | None = None
    largest_set: int = 0

    def admit(self, vec: tuple[int, ...]) -> bool:
        if self.max_total is not None and sum(vec) > self.max_total:
            return False
        if self.budget_suffix is not None:
            acc = 0
            for c, cap in zip(reversed(vec), reversed(self.budget_suffix)):
                acc += c
                if acc > cap:
                    return False
        return True

    def finish(self, classes: RadiusClasses, items: dict) -> CoverSet:
        if self.prune and len(items) > 1:
            items = pareto_minimal(items)
        if self.size_cap is not None and len(items) > self.size_cap:
            raise CoverSetTooLarge(f"cover set of size {len(items)} exceeds cap {self.size_cap}")
        self.largest_set = max(self.largest_set, len(items))
        return CoverSet(classes, items)


def pareto_minimal(items: dict) -> dict:
    """Keep only vectors that do not dominate another member (insertion order preserved)."""
    vecs = list(items)
    if len(vecs) < 2:
        return items
    suffix = np.cumsum(np.array(vecs, dtype=np.int32)[:, ::-1], axis=1)[:, ::-1]
    n, k = suffix.shape
    dominated = np.zeros(n, dtype=bool)
    step = max(1, 4_000_000 // (n * k))
    for start in range(0, n, step):
        block = suffix[start : start + step]
        # below[i, j]: member j sits componentwise under candidate start + i
        below = (suffix[None, :, :] <= block[:, None, :]).all(axis=2)
        rows = np.arange(len(block))
        below[rows, rows + start] = False
        dominated[start : start + len(block)] = below.any(axis=1)
    return {v: items[v] for v, d in zip(vecs, dominated) if not d}


def _check_classes(a: CoverSet, b: CoverSet) -> None:
    if a.classes != b.classes:
        raise ValueError("cover sets use different radius classes")


def sumset(a: CoverSet, b: CoverSet, limits: _Limits | None = None) -> CoverSet:
    _check_classes(a, b)
    limits = limits or _Limits(prune=False)
    out: dict = {}
    for u, wu in a.items():
        for v, wv in b.items():
            s = tuple(x + y for x, y in zip(u, v))
            if s in out or not limits.admit(s):
                continue
            if wu is None:
                out[s] = wv
            elif wv is None:
                out[s] = wu
            else:
                out[s] = ("+", wu, wv)
    return limits.finish(a.classes, out)


def union(a: CoverSet, b: CoverSet, limits: _Limits | None = None) -> CoverSet:
    _check_classes(a, b)
    limits = limits or _Limits(prune=False)
    out = {v: w for v, w in a.items() if limits.admit(v)}
    for v, w in b.items():
        if v not in out and limits.admit(v):
            out[v] = w
    return limits.finish(a.classes, out)


@dataclass
class CoverTables:
    """``tables[v][k]`` is ``C_k(v)`` for ``k = 0 .. kmax``; larger ``k`` reuse ``kmax``."""

    forest: RootedForest
    classes: RadiusClasses
    tables: list[list[CoverSet]]
    largest_set: int

    def get(self, v: int, k: int) -> CoverSet:
        row = self.tables[v]
        return row[min(max(k, 0), len(row) - 1)]

    def root_sets(self) -> dict[int, CoverSet]:
        return {r: self.tables[r][0] for r in self.forest.roots}


def cover_sets(
    forest: RootedForest,
    classes: RadiusClasses,
    prune: bool = True,
    offset: int = SUBSCRIPT_OFFSET,
    budget: tuple[int, ...] | None = None,
    size_cap: int | None = None,
) -> CoverTables:
    """Tabulate ``C_k(v)`` bottom-up for every vertex.

    ``budget`` (a class-count vector) discards covers that cannot fit it, which
    is safe because every table entry only ever grows by sums.
    """
    n = forest.graph.vertex_count
    limits = _Limits(
        max_total=n,
        budget_suffix=None if budget is None else _suffix(budget),
        prune=prune,
        size_cap=size_cap,
    )
    radii = [classes.radius(j) for j in range(classes.class_count)]
    kmax = classes.max_radius + 1
    depth = forest.depth
    tables: list[list[CoverSet] | None] = [None] * n
    # partial[p][v0][j]: sum over subtrees hanging off the v0..p path, for a part centered at v0 with class j
    partial: dict[int, dict[int, dict[int, CoverSet]]] = {}
    zero = CoverSet.zero(classes)

    def cget(w: int, k: int) -> CoverSet:
        row = tables[w]
        return row[min(max(k, 0), kmax)]

    for p in forest.postorder():
        kids = forest.children[p]
        here: dict[int, dict[int, CoverSet]] = {}

        own = {}
        for j, r in enumerate(radii):
            acc = zero
            for w in kids:
                acc = sumset(acc, cget(w, r - 1 + offset), limits)
            own[j] = acc
        here[p] = own

        for c in kids:
            for v0, by_class in partial.pop(c).items():
                dp = depth[v0] - depth[p]
                grown = {}
                for j, acc in by_class.items():
                    r = radii[j]
                    if r < dp:
                        continue
                    for w in kids:
                        if w != c:
                            acc = sumset(acc, cget(w, r - (dp + 1) + offset), limits)
                    grown[j] = acc
                if grown:
                    here[v0] = grown

        c0: dict = {}
        for v0, by_class in here.items():
            for j, acc in by_class.items():
                if radii[j] < depth[v0] - depth[p]:
                    continue
                for vec, wit in acc.items():
                    bumped = list(vec)
                    bumped[j] += 1
                    bumped = tuple(bumped)
                    if bumped in c0 or not limits.admit(bumped):
                        continue
                    ball = ("b", v0, j)
                    c0[bumped] = ball if wit is None else ("+", ball, wit)
        row = [limits.finish(classes, c0)]
        for k in range(1, kmax + 1):
            acc = zero
            for w in kids:
                acc = sumset(acc, cget(w, k - 1), limits)
            row.append(union(row[0], acc, limits))
        tables[p] = row
        partial[p] = here

    return CoverTables(forest, classes, tables, limits.largest_set)


@dataclass
class PTASResult:
    b_star: int
    a: int
    lower: int
    upper: int
    schedule: BurningSchedule
    r_greedy: int
    classes: RadiusClasses
    cover: tuple[int, ...]
    largest_set: int = 0
    combined_size: int = 0
    notes: dict = field(default_factory=dict)

    @property
    def interval(self) -> tuple[int, int]:
        return (self.lower, self.upper)


def granularity_from_epsilon(epsilon: float, r_greedy: int) -> int:
    """``a = max(1, floor(eps * r / 3))``: the additive slack ``a - 1`` stays below ``eps * b(G)``."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    return max(1, math.floor(epsilon * r_greedy / 3))


def schedule_from_cover(balls: list[tuple[int, int]], classes: RadiusClasses, b: int) -> BurningSchedule:
    """Give each ``(center, class)`` ball a distinct radius ``i + a - 1`` for a slot ``i < b`` of class at least its own."""
    a = classes.a
    slots = sorted(range(b), key=lambda i: -i)
    parts = sorted(balls, key=lambda cj: -cj[1])
    if len(parts) > len(slots):
        raise ValueError("cover has more balls than the budget")
    out = []
    for (center, j), i in zip(parts, slots):
        if -(-i // a) < j:
            raise ValueError("cover does not fit the rounded budget")
        out.append((center, i + a - 1))
    return BurningSchedule(tuple(out), b + a - 1)


def ptas_burning(
    g: Graph,
    epsilon: float | None = None,
    a: int | None = None,
    prune: bool = True,
    offset: int = SUBSCRIPT_OFFSET,
    size_cap: int | None = None,
) -> PTASResult:
    """Approximate ``b(g)`` on a forest: ``b_star <= b(g) <= b_star + a - 1``.

    Give either ``epsilon`` or the rounding granularity ``a`` directly.
    """
    if (epsilon is None) == (a is None):
        raise ValueError("give exactly one of epsilon and a")
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    forest = root_forest(g)
    r_greedy = greedy_burning(g).r
    if a is None:
        a = granularity_from_epsilon(epsilon, r_greedy)
    if a < 1:
        raise ValueError("a must be positive")
    classes = RadiusClasses.for_upper_bound(a, r_greedy)
    top_budget = rounded_multiset(classes, r_greedy)
    tables = cover_sets(forest, classes, prune=prune, offset=offset, budget=top_budget, size_cap=size_cap)

    limits = _Limits(max_total=g.vertex_count, budget_suffix=_suffix(top_budget), prune=prune)
    combined = CoverSet.zero(classes)
    for root_set in tables.root_sets().values():
        combined = sumset(combined, root_set, limits)

    for b in range(1, r_greedy + 1):
        budget = rounded_multiset(classes, b)
        hits = [vec for vec in combined if fits(vec, budget)]
        if hits:
            vec = min(hits)
            schedule = schedule_from_cover(combined.witness(vec), classes, b)
            ok, missing = validate_schedule(g, schedule)
            if not ok:
                raise AssertionError(f"reconstructed schedule misses {missing}")
            return PTASResult(
                b_star=b,
                a=a,
                lower=b,
                upper=b + a - 1,
                schedule=schedule,
                r_greedy=r_greedy,
                classes=classes,
                cover=vec,
                largest_set=max(tables.largest_set, limits.largest_set),
                combined_size=len(combined),
            )
    raise NoCoverFound(f"no rounded cover fits within the greedy bound {r_greedy}")
