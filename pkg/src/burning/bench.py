"""Run reports and the benchmark suites behind the cross-validation tables."""

from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import dataclass, field

import numpy as np

from .exact import SearchExceeded, dominates, exact_burning_number, exact_domination_number
from .graph import BurningSchedule, Graph, validate_schedule
from .greedy import greedy_burning
from .instances import (
    build_gadget,
    connected_graphs,
    extract_dominating_set,
    forward_schedule,
    path,
    random_forest,
    random_tree,
)
from .ptas import LITERAL_SUBSCRIPT_OFFSET, NoCoverFound, ptas_burning
from .randomized import distance_matrix, min_domination_bound, random_trial, randomized_approx

SUITES = ("small-trees", "paths", "gadgets", "random-stats")

CSV_COLUMNS = [
    "instance",
    "n",
    "m",
    "b_exact",
    "r_greedy",
    "r_random",
    "b_star",
    "greedy_ratio",
    "random_ratio",
    "time_ms",
    "extra",
]


def checked(g: Graph, schedule: BurningSchedule) -> BurningSchedule:
    ok, missing = validate_schedule(g, schedule)
    if not ok:
        raise AssertionError(f"schedule leaves vertices {missing} uncovered")
    return schedule


@dataclass
class RunReport:
    algorithm: str
    input: dict
    result: dict
    seed: int | None = None
    wall_time_ms: float | None = None
    counters: dict = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = self.result.get("lower"), self.result.get("upper")
        if lo is not None and hi is not None and lo > hi:
            raise ValueError(f"lower bound {lo} exceeds upper bound {hi}")

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "algorithm": self.algorithm,
            "input": self.input,
            "result": self.result,
            "seed": self.seed,
            "counters": self.counters,
        }
        if timing and self.wall_time_ms is not None:
            out["wall_time_ms"] = round(self.wall_time_ms, 3)
        return out


def describe(g: Graph, **extra) -> dict:
    return {"n": g.vertex_count, "m": g.edge_count, **extra}


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.start) * 1000


def _ratio(x, y):
    if x is None or y in (None, 0):
        return None
    return round(x / y, 6)


@dataclass
class BenchRow:
    instance: str
    n: int
    m: int
    b_exact: int | None = None
    r_greedy: int | None = None
    r_random: int | None = None
    b_star: int | None = None
    time_ms: float | None = None
    extra: dict = field(default_factory=dict)
    complete: bool = True

    def csv_row(self, timing: bool) -> list:
        extra = ";".join(f"{k}={v}" for k, v in sorted(self.extra.items()))
        return [
            self.instance,
            self.n,
            self.m,
            self.b_exact,
            self.r_greedy,
            self.r_random,
            self.b_star,
            _ratio(self.r_greedy, self.b_exact),
            _ratio(self.r_random, self.b_exact),
            round(self.time_ms, 1) if timing and self.time_ms is not None else None,
            extra,
        ]

    def report(self, suite: str, seed: int, timing: bool) -> RunReport:
        result = {
            "b_exact": self.b_exact,
            "r_greedy": self.r_greedy,
            "r_random": self.r_random,
            "b_star": self.b_star,
            "complete": self.complete,
            **self.extra,
        }
        if self.b_exact is not None:
            result["lower"] = result["upper"] = self.b_exact
        return RunReport(f"bench:{suite}", {"name": self.instance, "n": self.n, "m": self.m}, result, seed,
                         self.time_ms if timing else None)


@dataclass
class BenchResult:
    suite: str
    seed: int
    rows: list[BenchRow]
    samples: dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return all(r.complete for r in self.rows)

    def csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(["" if x is None else x for x in row.csv_row(timing)])
        return buf.getvalue()

    def reports(self, timing: bool = True) -> list[RunReport]:
        return [row.report(self.suite, self.seed, timing) for row in self.rows]


def _exact_or_none(g: Graph, budget: float | None, b_max: int | None = None):
    try:
        return exact_burning_number(g, b_max=b_max, time_budget=budget)
    except SearchExceeded:
        return None


def _solve_row(name: str, g: Graph, seed: int, budget: float | None, trials_factor: float = 1.0) -> BenchRow:
    row = BenchRow(name, g.vertex_count, g.edge_count)
    with _Timer() as t:
        greedy = greedy_burning(g)
        checked(g, greedy.schedule)
        row.r_greedy = greedy.r
        exact = _exact_or_none(g, budget, greedy.r)
        if exact is None:
            row.complete = False
        else:
            row.b_exact = exact.value
            checked(g, exact.witness)
        rnd = randomized_approx(g, trials_factor=trials_factor, seed=seed)
        row.r_random = rnd.r_best
        checked(g, rnd.schedule)
    row.time_ms = t.ms
    return row


def forest_corpus(count: int, seed: int, max_n: int = 14) -> list[tuple[str, Graph]]:
    """Seeded random trees (two thirds) and forests (one third) with ``1 <= n <= max_n``."""
    out = []
    for i in range(count):
        rng = random.Random(seed * 1_000_003 + i)
        n = rng.randint(1, max_n)
        if i % 3 == 2 and n > 1:
            comps = rng.randint(2, min(n, 4))
            g = random_forest(n, comps, rng)
            kind = "forest"
        else:
            g = random_tree(n, rng)
            kind = "tree"
        out.append((f"{kind}-{seed:04d}-{i:04d}", g))
    return out


def bench_paths(seed: int, budget: float | None) -> BenchResult:
    rows = []
    for n in range(1, 18):
        g = path(n)
        row = _solve_row(f"path-n{n:03d}", g, seed, budget)
        with _Timer() as t:
            res = ptas_burning(g, a=1)
        row.b_star = res.b_star
        row.extra["sqrt_formula"] = math.isqrt(n - 1) + 1
        row.time_ms += t.ms
        rows.append(row)
    return BenchResult("paths", seed, rows)


def bench_small_trees(seed: int, budget: float | None, count: int = 200) -> BenchResult:
    rows = []
    for name, g in forest_corpus(count, seed):
        row = _solve_row(name, g, seed, budget)
        with _Timer() as t:
            row.b_star = ptas_burning(g, a=1).b_star
            for a in (2, 3):
                res = ptas_burning(g, a=a)
                row.extra[f"b_star_a{a}"] = res.b_star
            try:
                row.extra["b_star_literal"] = ptas_burning(g, a=1, offset=LITERAL_SUBSCRIPT_OFFSET).b_star
            except NoCoverFound:
                row.extra["b_star_literal"] = "none"
        row.time_ms += t.ms
        rows.append(row)
    return BenchResult("small-trees", seed, sorted(rows, key=lambda r: r.instance))


def _edge_label(g: Graph) -> str:
    return "-".join(f"{u}{v}" for u, v in g.edges()) or "K1"


def gadget_check(g: Graph, d: int, budget: float | None = None) -> dict:
    """Exact domination number of ``g`` and burning number of its gadget, with both inequality checks."""
    gadget = build_gadget(g, d)
    gp = gadget.gprime
    dom = exact_domination_number(g)
    fwd = checked(gp, forward_schedule(gadget, dom.witness))
    exact = exact_burning_number(gp, b_max=fwd.horizon, time_budget=budget)
    checked(gp, exact.witness)
    extracted = extract_dominating_set(gadget, exact.witness)
    return {
        "gamma": dom.value,
        "d": d,
        "b_gprime": exact.value,
        "forward_ok": exact.value <= dom.value + 3 * d,
        "extracted_size": len(extracted),
        "extracted_dominates": dominates(g, extracted),
        "reverse_applies": exact.value < 5 * d,
        "size_ok": len(extracted) <= 2 * exact.value,
        "nodes_explored": exact.nodes_explored,
        "n_gprime": gp.vertex_count,
    }


def bench_gadgets(seed: int, budget: float | None) -> BenchResult:
    rows = []
    for n in range(1, 5):
        for gi, g in enumerate(connected_graphs(n)):
            for d in (1, 2):
                name = f"gadget-n{n}-g{gi}-d{d}"
                with _Timer() as t:
                    try:
                        info = gadget_check(g, d, budget)
                    except SearchExceeded:
                        info = None
                gp = build_gadget(g, d).gprime
                row = BenchRow(name, gp.vertex_count, gp.edge_count, time_ms=t.ms)
                row.extra["edges"] = _edge_label(g)
                if info is None:
                    row.complete = False
                else:
                    row.b_exact = info["b_gprime"]
                    row.extra.update({k: v for k, v in info.items() if k not in ("b_gprime", "n_gprime")})
                rows.append(row)
    return BenchResult("gadgets", seed, sorted(rows, key=lambda r: r.instance))


def placement_sample(n: int, m: float, seeds: int, seed: int) -> np.ndarray:
    g = path(n)
    dist = distance_matrix(g)
    return np.array([len(random_trial(g, m, (seed, s), dist).placements) for s in range(seeds)])


def bound_sample(m: int, samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(np.random.SeedSequence([seed, m]))
    return np.array([min_domination_bound(rng.uniform(0.0, m, size=m)).r for _ in range(samples)])


def bench_random_stats(seed: int, budget: float | None, samples: int = 2000) -> BenchResult:
    rows = []
    samples_out = {}
    with _Timer() as t:
        counts = placement_sample(25, 12, samples, seed)
    mean = float(counts.mean())
    se = float(counts.std(ddof=1) / math.sqrt(len(counts)))
    row = BenchRow("placements-path025-m012", 25, 24, b_exact=5, time_ms=t.ms)
    row.extra.update({"m": 12, "samples": samples, "mean_placements": round(mean, 6), "std_error": round(se, 6),
                      "pass": mean <= 12 + 2 * se})
    rows.append(row)
    samples_out["placements"] = counts
    for m in (100, 400):
        with _Timer() as t:
            bounds = bound_sample(m, samples, seed)
        p99 = float(np.percentile(bounds, 99))
        limit = m + 4 * math.sqrt(m * math.log(m))
        row = BenchRow(f"bound-m{m:04d}", 0, 0, time_ms=t.ms)
        row.extra.update({"m": m, "samples": samples, "p99_bound": round(p99, 6), "limit": round(limit, 6),
                          "pass": p99 <= limit})
        rows.append(row)
        samples_out[f"bound_m{m}"] = bounds
    return BenchResult("random-stats", seed, rows, samples_out)


def run_bench(suite: str, seed: int = 0, budget: float | None = None, **kwargs) -> BenchResult:
    if suite == "paths":
        return bench_paths(seed, budget)
    if suite == "small-trees":
        return bench_small_trees(seed, budget, **kwargs)
    if suite == "gadgets":
        return bench_gadgets(seed, budget)
    if suite == "random-stats":
        return bench_random_stats(seed, budget, **kwargs)
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
