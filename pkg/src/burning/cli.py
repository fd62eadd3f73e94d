"""``burn``: command-line front end for the solvers, generators and benchmark suites."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from pathlib import Path

from .bench import SUITES, RunReport, checked, describe, run_bench
from .exact import SearchExceeded, exact_burning_number
from .graph import GraphFormatError, NotAForestError, format_dimacs, format_edge_list, parse_graph
from .greedy import TIE_BREAKS, greedy_burning
from .instances import GENERATORS, build_gadget, generate
from .ptas import ptas_burning
from .randomized import randomized_approx

EXIT_OK, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get("BURN_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"BURN_SEED must be an integer, got {raw!r}") from None


def read_graph(path: str, fmt: str | None):
    if fmt is None:
        fmt = "dimacs" if Path(path).suffix in (".col", ".dimacs", ".dim") else "edge-list"
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text, fmt)
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(payload, args) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    out = getattr(args, "report_out", None)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _finish(report: RunReport, args, start: float) -> int:
    report.wall_time_ms = (time.perf_counter() - start) * 1000
    _emit(report.to_json(timing=not args.no_timing), args)
    return EXIT_OK


def cmd_exact(args) -> int:
    start = time.perf_counter()
    g = read_graph(args.input, args.format)
    b_max = args.b_max if args.b_max is not None else greedy_burning(g).r
    res = exact_burning_number(g, b_max=b_max, time_budget=args.time_budget)
    sched = checked(g, res.witness)
    report = RunReport(
        "exact",
        describe(g, path=args.input),
        {"upper": res.value, "lower": res.value, "schedule": sched.to_json()},
        counters={"nodes_explored": res.nodes_explored, "b_max": b_max},
    )
    return _finish(report, args, start)


def cmd_greedy(args) -> int:
    start = time.perf_counter()
    g = read_graph(args.input, args.format)
    res = greedy_burning(g, tie_break=args.tie_break)
    sched = checked(g, res.schedule)
    report = RunReport(
        "greedy",
        describe(g, path=args.input),
        {
            "upper": res.r,
            "lower": res.lower_bound,
            "schedule": sched.to_json(),
            "centers_in_order": list(res.centers_in_order),
        },
        counters={"tie_break": args.tie_break},
    )
    return _finish(report, args, start)


def cmd_random(args) -> int:
    start = time.perf_counter()
    g = read_graph(args.input, args.format)
    seed = args.seed if args.seed is not None else default_seed()
    try:
        res = randomized_approx(g, trials_factor=args.trials_factor, seed=seed, m_min=args.m_min, m_max=args.m_max)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sched = checked(g, res.schedule)
    report = RunReport(
        "random",
        describe(g, path=args.input),
        {
            "upper": res.r_best,
            "lower": math.ceil(res.r_greedy / 3),
            "r_greedy": res.r_greedy,
            "from_greedy": res.from_greedy,
            "schedule": sched.to_json(),
            "per_m": [s.to_json() for s in res.per_m],
        },
        seed=seed,
        counters={"trials": res.trials_run, "trials_factor": args.trials_factor},
    )
    return _finish(report, args, start)


def cmd_ptas(args) -> int:
    start = time.perf_counter()
    g = read_graph(args.input, args.format)
    try:
        res = ptas_burning(g, epsilon=args.epsilon, a=args.a, prune=not args.no_prune)
    except NotAForestError as exc:
        raise InputError(f"input is not a forest: {exc}") from None
    result = {
        "b_star": res.b_star,
        "lower": res.lower,
        "upper": res.upper,
        "interval": list(res.interval),
        "a": res.a,
        "r_greedy": res.r_greedy,
    }
    if args.emit_witness:
        result["schedule"] = checked(g, res.schedule).to_json()
        result["cover"] = list(res.cover)
    report = RunReport(
        "ptas",
        describe(g, path=args.input),
        result,
        counters={"largest_cover_set": res.largest_set, "class_count": res.classes.class_count,
                  "pruning": not args.no_prune},
    )
    return _finish(report, args, start)


def _write_graph(g, out: str | None, fmt: str) -> None:
    text = format_dimacs(g) if fmt == "dimacs" else format_edge_list(g)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_gadget(args) -> int:
    start = time.perf_counter()
    g = read_graph(args.input, args.format)
    if args.d < 1:
        raise InputError("--d must be at least 1")
    gadget = build_gadget(g, args.d)
    # isolated originals need the header format to survive the round trip
    fmt = args.out_format or ("dimacs" if g.vertex_count and min(map(len, g.adjacency)) == 0 else "edge-list")
    _write_graph(gadget.gprime, args.out, fmt)
    if args.maps:
        Path(args.maps).write_text(json.dumps(gadget.maps_json(), sort_keys=True, indent=2) + "\n", encoding="utf-8")
    report = RunReport(
        "gadget",
        describe(g, path=args.input),
        {"d": args.d, "n_gprime": gadget.gprime.vertex_count, "m_gprime": gadget.gprime.edge_count,
         "out": args.out, "maps": args.maps, "format": fmt},
    )
    if args.out:
        return _finish(report, args, start)
    return EXIT_OK


def _parse_params(tokens: list[str]) -> dict:
    params = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise InputError(f"generator parameter {tok!r} is not key=value")
        params[key] = value
    return params


def cmd_gen(args) -> int:
    start = time.perf_counter()
    seed = args.seed if args.seed is not None else default_seed()
    try:
        inst = generate(args.kind, _parse_params(args.params), seed=seed, exact_budget=args.time_budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    g = inst.graph
    fmt = args.out_format or ("dimacs" if g.vertex_count and min(map(len, g.adjacency)) == 0 else "edge-list")
    _write_graph(g, args.out, fmt)
    report = RunReport(
        "gen",
        describe(g, generator=inst.name),
        {"ground_truth": inst.ground_truth, "out": args.out, "format": fmt,
         **({"lower": inst.ground_truth, "upper": inst.ground_truth} if inst.ground_truth else {})},
        seed=seed,
    )
    if args.out:
        return _finish(report, args, start)
    return EXIT_OK


def cmd_bench(args) -> int:
    from .plotting import plot_suite

    seed = args.seed if args.seed is not None else default_seed()
    kwargs = {}
    if args.count is not None:
        if args.suite == "small-trees":
            kwargs["count"] = args.count
        elif args.suite == "random-stats":
            kwargs["samples"] = args.count
    res = run_bench(args.suite, seed=seed, budget=args.time_budget, **kwargs)
    timing = not args.no_timing
    summary = {
        "suite": res.suite,
        "seed": seed,
        "complete": res.complete,
        "rows": len(res.rows),
        "reports": [r.to_json(timing) for r in res.reports(timing)],
    }
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{res.suite}.csv").write_text(res.csv(timing), encoding="utf-8")
        (out / f"{res.suite}.json").write_text(json.dumps(summary, sort_keys=True, indent=2) + "\n", encoding="utf-8")
        if not args.no_plots:
            summary["figures"] = [str(p) for p in plot_suite(res, out)]
        _emit({k: v for k, v in summary.items() if k != "reports"}, args)
    else:
        sys.stdout.write(res.csv(timing))
    return EXIT_OK if res.complete else EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--time-budget", type=float, default=None, help="seconds per instance for exact search")
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock fields (byte-stable reports)")
    common.add_argument("--report-out", default=None, help="write the JSON report here instead of stdout")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--input", required=True, help="graph file, or - for stdin")
    graph_in.add_argument("--format", choices=["edge-list", "dimacs"], default=None)

    parser = argparse.ArgumentParser(prog="burn", description="Graph burning number solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", parents=[common, graph_in], help="exact burning number (small graphs)")
    p.add_argument("--b-max", type=int, default=None, help="search cap (default: greedy bound)")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("greedy", parents=[common, graph_in], help="greedy 3-approximation")
    p.add_argument("--tie-break", choices=TIE_BREAKS, default="farthest")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("random", parents=[common, graph_in], help="randomized approximation with certificates")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials-factor", type=float, default=1.0)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=None)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("ptas", parents=[common, graph_in], help="forest approximation scheme")
    grain = p.add_mutually_exclusive_group(required=True)
    grain.add_argument("--epsilon", type=float)
    grain.add_argument("--a", type=int)
    p.add_argument("--no-prune", action="store_true", help="disable Pareto pruning (diagnostics)")
    p.add_argument("--emit-witness", action="store_true", help="include the burning schedule")
    p.set_defaults(func=cmd_ptas)

    p = sub.add_parser("gadget", parents=[common, graph_in], help="build the domination-to-burning gadget")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", default=None, help="where to write G'")
    p.add_argument("--out-format", choices=["edge-list", "dimacs"], default=None)
    p.add_argument("--maps", default=None, help="where to write the provenance maps (JSON)")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("gen", parents=[common], help="generate a benchmark instance")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--out-format", choices=["edge-list", "dimacs"], default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="run a benchmark suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out-dir", default=None, help="write CSV, JSON and figures here")
    p.add_argument("--count", type=int, default=None, help="instances (small-trees) or samples (random-stats)")
    p.add_argument("--no-plots", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"burn: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchExceeded as exc:
        print(f"burn: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
