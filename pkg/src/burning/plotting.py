"""Figures for the benchmark suites, written next to the CSV tables."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchResult  # noqa: E402

STYLE = {
    "figure.figsize": (6.4, 4.2),
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.frameon": False,
}


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    # no software/date metadata so identical data gives identical files
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_paths(res: BenchResult, out: Path) -> list[Path]:
    rows = sorted(res.rows, key=lambda r: r.n)
    ns = [r.n for r in rows]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ax.plot(ns, [math.isqrt(n - 1) + 1 for n in ns], "k-", lw=1, label=r"$\lceil\sqrt{n}\rceil$")
        ax.plot(ns, [r.b_exact for r in rows], "o", label="exact")
        ax.plot(ns, [r.b_star for r in rows], "x", label="forest DP (a=1)")
        ax.plot(ns, [r.r_greedy for r in rows], "s", mfc="none", label="greedy")
        ax.plot(ns, [r.r_random for r in rows], "^", mfc="none", label="randomized")
        ax.set_xlabel("path length n")
        ax.set_ylabel("burning number bound")
        ax.legend()
        return [_save(fig, out / "paths.png")]


def plot_small_trees(res: BenchResult, out: Path) -> list[Path]:
    rows = [r for r in res.rows if r.b_exact]
    with plt.rc_context(STYLE):
        fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.8))
        bins = [x / 6 for x in range(6, 19)]
        left.hist([r.r_greedy / r.b_exact for r in rows], bins=bins, alpha=0.6, label="greedy")
        left.hist([r.r_random / r.b_exact for r in rows], bins=bins, alpha=0.6, label="randomized")
        left.set_xlabel("upper bound / exact")
        left.set_ylabel("instances")
        left.legend()
        for a, marker in ((2, "o"), (3, "s")):
            right.scatter([r.b_exact for r in rows], [r.extra[f"b_star_a{a}"] for r in rows],
                          marker=marker, alpha=0.4, label=f"a={a}")
        top = max((r.b_exact for r in rows), default=1) + 1
        right.plot([0, top], [0, top], "k-", lw=1)
        right.set_xlabel("exact burning number")
        right.set_ylabel("DP lower end b*")
        right.legend()
        return [_save(fig, out / "small-trees.png")]


def plot_gadgets(res: BenchResult, out: Path) -> list[Path]:
    rows = [r for r in res.rows if r.b_exact is not None]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(8, 3.8))
        xs = range(len(rows))
        ax.bar([x - 0.2 for x in xs], [r.b_exact for r in rows], width=0.4, label="b(G')")
        ax.bar([x + 0.2 for x in xs], [r.extra["gamma"] + 3 * r.extra["d"] for r in rows], width=0.4,
               label=r"$\gamma(G) + 3d$")
        ax.set_xticks(list(xs))
        ax.set_xticklabels([r.instance.removeprefix("gadget-") for r in rows], rotation=70, fontsize=7)
        ax.legend()
        return [_save(fig, out / "gadgets.png")]


def plot_random_stats(res: BenchResult, out: Path) -> list[Path]:
    paths = []
    with plt.rc_context(STYLE):
        counts = res.samples.get("placements")
        if counts is not None:
            fig, ax = plt.subplots()
            ax.hist(counts, bins=range(int(counts.min()), int(counts.max()) + 2), align="left")
            ax.axvline(12, color="k", lw=1, label="m = 12")
            ax.axvline(counts.mean(), color="C3", ls="--", label=f"mean {counts.mean():.2f}")
            ax.set_xlabel("balls placed (path of 25, m = 12)")
            ax.set_ylabel("trials")
            ax.legend()
            paths.append(_save(fig, out / "random-stats-placements.png"))
        fact = {k: v for k, v in res.samples.items() if k.startswith("bound_m")}
        if fact:
            fig, axes = plt.subplots(1, len(fact), figsize=(4.5 * len(fact), 3.6), squeeze=False)
            for ax, (key, bounds) in zip(axes[0], sorted(fact.items())):
                m = int(key.removeprefix("bound_m"))
                ax.hist(bounds, bins=40)
                ax.axvline(m + 4 * math.sqrt(m * math.log(m)), color="k", lw=1, label="limit")
                ax.set_xlabel(f"dominating length, m = {m}")
                ax.legend()
            paths.append(_save(fig, out / "random-stats-domination.png"))
    return paths


PLOTTERS = {
    "paths": plot_paths,
    "small-trees": plot_small_trees,
    "gadgets": plot_gadgets,
    "random-stats": plot_random_stats,
}


def plot_suite(res: BenchResult, out_dir) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return PLOTTERS[res.suite](res, out)
