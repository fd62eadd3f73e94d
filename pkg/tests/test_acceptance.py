"""Acceptance criteria. Each test appends one PASS/FAIL line that is printed after the run."""

import hashlib
import json
import math
import time

import numpy as np
import pytest

import conftest
from burning.bench import bound_sample, forest_corpus, gadget_check, placement_sample
from burning.cli import main
from burning.exact import exact_burning_number
from burning.graph import format_edge_list, validate_schedule
from burning.greedy import greedy_burning
from burning.instances import connected_graphs, path
from burning.ptas import LITERAL_SUBSCRIPT_OFFSET, NoCoverFound, ptas_burning
from burning.randomized import randomized_approx

pytestmark = pytest.mark.acceptance

SEED = 20240601


def record(cid, ok, detail):
    conftest.ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {cid} {detail}")
    assert ok, f"{cid}: {detail}"


_exact_cache = {}


def exact_value(name, g):
    if name not in _exact_cache:
        _exact_cache[name] = exact_burning_number(g).value
    return _exact_cache[name]


CORPUS = forest_corpus(240, SEED)
MIXED = conftest.mixed_corpus(320, SEED)


def test_c1_path_formula():
    start = time.perf_counter()
    bad = [n for n in range(1, 18) if exact_burning_number(path(n)).value != math.ceil(math.sqrt(n))]
    elapsed = time.perf_counter() - start
    record("C1", not bad and elapsed < 60, f"path formula n=1..17: mismatches={bad} time={elapsed:.2f}s (<60s)")


def test_c2_ptas_matches_exact():
    start = time.perf_counter()
    bad = [name for name, g in CORPUS if ptas_burning(g, a=1).b_star != exact_value(name, g)]
    elapsed = time.perf_counter() - start
    literal_bad = 0
    for name, g in CORPUS:
        try:
            if ptas_burning(g, a=1, offset=LITERAL_SUBSCRIPT_OFFSET).b_star != exact_value(name, g):
                literal_bad += 1
        except NoCoverFound:
            literal_bad += 1
    record(
        "C2",
        not bad and elapsed < 300,
        f"ptas(a=1)=exact on {len(CORPUS)} forests: mismatches={len(bad)} time={elapsed:.1f}s (<300s); "
        f"literal subscript diagnostic mismatches={literal_bad}/{len(CORPUS)}",
    )


def test_c3_rounding_sandwich():
    violations = 0
    for name, g in CORPUS:
        b = exact_value(name, g)
        for a in (2, 3):
            res = ptas_burning(g, a=a)
            if not (res.b_star <= b <= res.b_star + a - 1) or not validate_schedule(g, res.schedule)[0]:
                violations += 1
    record("C3", violations == 0, f"b_star <= b <= b_star+a-1 for a in (2,3) on {len(CORPUS)} forests: violations={violations}")


def test_c4_greedy_bracket():
    violations = 0
    for name, g in MIXED:
        res = greedy_burning(g)
        b = exact_value(name, g)
        if not (b <= res.r <= 3 * b) or not validate_schedule(g, res.schedule)[0]:
            violations += 1
    record("C4", violations == 0, f"b <= r_greedy <= 3b with valid schedules on {len(MIXED)} graphs: violations={violations}")


RANDOM_SEEDS = (1, 2, 3, 4)


def randomized_soundness_run():
    """Returns (violations, pairs, digest of every serialized result)."""
    h = hashlib.sha256()
    violations = pairs = 0
    for name, g in MIXED[:260]:
        for s in RANDOM_SEEDS:
            res = randomized_approx(g, seed=s, validate_trials=True)
            pairs += 1
            ok = res.trials_validated == res.trials_run and validate_schedule(g, res.schedule)[0]
            if not ok or res.r_best < exact_value(name, g):
                violations += 1
            h.update(json.dumps([name, s, res.r_best, res.schedule.to_json(), [m.to_json() for m in res.per_m]],
                                sort_keys=True).encode())
    return violations, pairs, h.hexdigest()


def test_c5_randomized_soundness():
    violations, pairs, _ = randomized_soundness_run()
    record("C5", violations == 0 and pairs >= 1000, f"certificates validate and r_best >= b on {pairs} pairs: violations={violations}")


def placement_stats():
    counts = placement_sample(25, 12, 2000, SEED)
    return float(counts.mean()), float(counts.std(ddof=1) / math.sqrt(len(counts))), counts


def test_c6_mean_placements():
    start = time.perf_counter()
    mean, se, _ = placement_stats()
    elapsed = time.perf_counter() - start
    record("C6", mean <= 12 + 2 * se and elapsed < 30,
           f"P_25 m=12 mean placements={mean:.3f} se={se:.3f} limit={12 + 2 * se:.3f} time={elapsed:.2f}s (<30s)")


def bound_stats():
    out = {}
    for m in (100, 400):
        bounds = bound_sample(m, 2000, SEED)
        out[m] = (float(np.percentile(bounds, 99)), m + 4 * math.sqrt(m * math.log(m)), bounds)
    return out


def test_c7_domination_bound_percentile():
    start = time.perf_counter()
    stats = bound_stats()
    elapsed = time.perf_counter() - start
    ok = all(p99 <= limit for p99, limit, _ in stats.values()) and elapsed < 60
    detail = " ".join(f"m={m}: p99={p:.1f} limit={lim:.1f}" for m, (p, lim, _) in stats.items())
    record("C7", ok, f"{detail} time={elapsed:.2f}s (<60s)")


C8_SEEDS = (1, 2, 3)


def paths_driver_run():
    rows = []
    for n in (100, 225, 400):
        g = path(n)
        for s in C8_SEEDS:
            res = randomized_approx(g, seed=s)
            rows.append((n, s, res.r_best, res.r_greedy, res.schedule.to_json()))
    return rows


def test_c8_driver_never_worse_than_greedy():
    rows = paths_driver_run()
    worse = [(n, s) for n, s, best, greedy, _ in rows if best > greedy]
    ratio = sum(best / math.ceil(math.sqrt(n)) for n, _, best, _, _ in rows) / len(rows)
    record("C8", not worse,
           f"r_best <= r_greedy on paths 100/225/400 x {len(C8_SEEDS)} seeds: violations={len(worse)}; "
           f"mean r_best/ceil(sqrt n)={ratio:.3f} (target <= 2.5, report only)")


def test_c9_gadget_inequalities():
    start = time.perf_counter()
    violations = checked = 0
    for n in range(1, 5):
        for g in connected_graphs(n):
            for d in (1, 2):
                info = gadget_check(g, d)
                checked += 1
                if not (info["forward_ok"] and info["extracted_dominates"] and info["size_ok"]):
                    violations += 1
    elapsed = time.perf_counter() - start
    record("C9", violations == 0 and elapsed < 600,
           f"b(G') <= gamma+3d and extracted D dominates with |D| <= 2b(G') on {checked} gadgets: "
           f"violations={violations} time={elapsed:.2f}s (<600s)")


def _cli_bytes(argv, capsys):
    assert main(argv) == 0
    return capsys.readouterr().out.encode()


def test_c10_determinism(capsys, tmp_path):
    same = {}
    same["C5"] = randomized_soundness_run()[2] == randomized_soundness_run()[2]
    same["C6"] = np.array_equal(placement_stats()[2], placement_stats()[2])
    a, b = bound_stats(), bound_stats()
    same["C7"] = all(np.array_equal(a[m][2], b[m][2]) for m in a)
    same["C8"] = json.dumps(paths_driver_run()) == json.dumps(paths_driver_run())
    f = tmp_path / "p100.txt"
    f.write_text(format_edge_list(path(100)))
    random_cmd = ["random", "--input", str(f), "--seed", "7", "--no-timing"]
    bench_cmd = ["bench", "random-stats", "--seed", "7", "--count", "500", "--no-timing"]
    same["cli-random"] = _cli_bytes(random_cmd, capsys) == _cli_bytes(random_cmd, capsys)
    same["cli-bench"] = _cli_bytes(bench_cmd, capsys) == _cli_bytes(bench_cmd, capsys)
    differing = [k for k, v in same.items() if not v]
    record("C10", not differing, f"byte-identical reruns for {', '.join(same)}: differing={differing}")
