"""Exact, greedy, randomized and forest-DP algorithms for the graph burning number."""

from .exact import ExactResult, SearchExceeded, exact_burning_number, exact_domination_number
from .graph import (
    BurningSchedule,
    Graph,
    RootedForest,
    ball,
    bfs_distances,
    parse_graph,
    root_forest,
    validate_schedule,
)
from .greedy import GreedyResult, greedy_burning
from .instances import build_gadget, generate
from .ptas import ptas_burning
from .randomized import min_domination_bound, random_trial, randomized_approx

__all__ = [
    "BurningSchedule",
    "ExactResult",
    "Graph",
    "GreedyResult",
    "RootedForest",
    "SearchExceeded",
    "ball",
    "bfs_distances",
    "build_gadget",
    "exact_burning_number",
    "exact_domination_number",
    "generate",
    "greedy_burning",
    "min_domination_bound",
    "parse_graph",
    "ptas_burning",
    "random_trial",
    "randomized_approx",
    "root_forest",
    "validate_schedule",
]
