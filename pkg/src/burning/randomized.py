"""Greedy random burning with certified upper bounds.

Each trial places balls with radii drawn uniformly from ``[0, m]`` on uncovered
vertices. The floored radii are then packed into distinct integer slots, which
turns the trial into a burning schedule and hence an upper bound on ``b(G)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import BurningSchedule, Graph, all_pairs_distances, validate_schedule
from .greedy import greedy_burning


@dataclass(frozen=True)
class TrialOutcome:
    m: float
    placements: tuple[tuple[int, float], ...]
    seed: tuple[int, ...]

    @property
    def floored_radii(self) -> list[int]:
        return [math.floor(r) for _, r in self.placements]


@dataclass(frozen=True)
class DominationCertificate:
    """``assignment[i]`` is the slot in ``0..r-1`` given to the i-th radius."""

    r: int
    assignment: tuple[int, ...]


def distance_matrix(g: Graph) -> np.ndarray:
    dist = np.array(all_pairs_distances(g), dtype=np.int64).reshape(g.vertex_count, g.vertex_count)
    dist[dist < 0] = np.iinfo(np.int64).max
    return dist


def trial_seed(master: int, m: int | float, index: int) -> tuple[int, ...]:
    # m is swept over integers; the scaled value keeps fractional m distinct too
    return (int(master), int(round(float(m) * 1000)), int(index))


def random_trial(g: Graph, m: float, seed, dist: np.ndarray | None = None) -> TrialOutcome:
    """One run of greedy random burning, always centering at the lowest-index uncovered vertex."""
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    if not m > 0:
        raise ValueError("m must be positive")
    if dist is None:
        dist = distance_matrix(g)
    seed = tuple(seed) if isinstance(seed, (tuple, list)) else (int(seed),)
    rng = np.random.default_rng(np.random.SeedSequence(list(seed)))
    covered = np.zeros(g.vertex_count, dtype=bool)
    placements = []
    while not covered.all():
        v = int(np.argmin(covered))
        radius = float(rng.uniform(0.0, m))
        covered |= dist[v] <= math.floor(radius)
        placements.append((v, radius))
    return TrialOutcome(float(m), tuple(placements), seed)


def min_domination_bound(radii) -> DominationCertificate:
    """Smallest ``r`` such that ``radii`` is dominated by ``(0, 1, ..., r-1)``.

    Sorting the floors in decreasing order, the i-th largest (1-based) needs a
    slot at least its value among ``r - i + 1`` remaining ones, so
    ``r = max_i(floor(a_i) + i)``; the i-th largest gets slot ``r - i``.
    """
    floors = []
    for a in radii:
        if a < 0:
            raise ValueError(f"negative radius {a}")
        floors.append(math.floor(a))
    if not floors:
        return DominationCertificate(0, ())
    order = sorted(range(len(floors)), key=lambda i: (-floors[i], i))
    r = max(floors[idx] + rank for rank, idx in enumerate(order, 1))
    slots = [0] * len(floors)
    for rank, idx in enumerate(order, 1):
        slots[idx] = r - rank
    return DominationCertificate(r, tuple(slots))


def outcome_to_schedule(trial: TrialOutcome, cert: DominationCertificate) -> BurningSchedule:
    floors = trial.floored_radii
    if len(cert.assignment) != len(floors):
        raise ValueError("certificate does not match the trial's placements")
    if len(set(cert.assignment)) != len(floors):
        raise ValueError("certificate assignment is not injective")
    for f, slot in zip(floors, cert.assignment):
        if not f <= slot < cert.r:
            raise ValueError(f"slot {slot} cannot host floored radius {f}")
    return BurningSchedule(tuple((c, s) for (c, _), s in zip(trial.placements, cert.assignment)), cert.r)


@dataclass
class MStats:
    m: int
    trials: int
    best_bound: int
    mean_placements: float

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "trials": self.trials,
            "best_bound": self.best_bound,
            "mean_placements": round(self.mean_placements, 6),
        }


@dataclass
class RandomizedResult:
    r_best: int
    schedule: BurningSchedule
    r_greedy: int
    from_greedy: bool
    per_m: list[MStats] = field(default_factory=list)
    trials_run: int = 0
    trials_validated: int = 0


def trial_count(m: int, n: int, trials_factor: float) -> int:
    return max(1, math.ceil(trials_factor * m * math.log(n + 1)))


def randomized_approx(
    g: Graph,
    trials_factor: float = 1.0,
    seed: int = 0,
    m_min: int = 1,
    m_max: int | None = None,
    validate_trials: bool = False,
) -> RandomizedResult:
    """Sweep integer ``m`` over ``[m_min, m_max]`` and keep the best certified bound.

    For each ``m`` the driver runs ``ceil(trials_factor * m * ln(n + 1))``
    independent trials. The greedy schedule is the fallback, so the answer is
    never worse than greedy. ``validate_trials`` re-checks every trial's
    schedule against the graph (raises ``AssertionError`` on a bad one).
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("empty graph")
    greedy = greedy_burning(g)
    if m_max is None:
        m_max = greedy.r
    if m_min > m_max:
        raise ValueError(f"m_min={m_min} exceeds m_max={m_max}")
    if m_min < 1:
        raise ValueError("m_min must be at least 1")
    dist = distance_matrix(g)
    best_r, best_schedule, from_greedy = greedy.r, greedy.schedule, True
    stats = []
    total = validated = 0
    for m in range(m_min, m_max + 1):
        k = trial_count(m, n, trials_factor)
        m_best = None
        placements = 0
        for idx in range(k):
            trial = random_trial(g, m, trial_seed(seed, m, idx), dist)
            cert = min_domination_bound(r for _, r in trial.placements)
            placements += len(trial.placements)
            if validate_trials:
                ok, missing = validate_schedule(g, outcome_to_schedule(trial, cert))
                if not ok:
                    raise AssertionError(f"trial m={m} idx={idx} leaves {missing} uncovered")
                validated += 1
            if m_best is None or cert.r < m_best:
                m_best = cert.r
            if cert.r < best_r:
                best_r, best_schedule, from_greedy = cert.r, outcome_to_schedule(trial, cert), False
        total += k
        stats.append(MStats(m, k, m_best, placements / k))
    return RandomizedResult(best_r, best_schedule, greedy.r, from_greedy, stats, total, validated)
