"""Approximation pipeline for the k-edge-outconnected directed Steiner tree problem
on graphs whose terminals have out-degree zero."""

from .coregraph import CoreGraph, build_core_graph, build_E0, lift_cover, metric_completion, prune_to_core_graph
from .covering import (
    FractionalSolution,
    Violated,
    augmentation_lp_lower_bound,
    separation_oracle,
    solve_augmentation_lp,
    solve_strict_core_lp,
)
from .exact import enumerate_strict_cores, enumerate_tight_sets, exact_augmentation_optimum, exact_optimum
from .flow import max_flow_min_cut, min_cut_between_sets
from .generate import generate_instance
from .instance import (
    Edge,
    Instance,
    InstanceError,
    covering_edges,
    format_instance,
    is_feasible,
    parse_instance,
    terminal_connectivity,
)
from .pipeline import Solution, augment_connectivity, solve_kdst
from .rounding import RoundingConfig, default_rounds, round_cover
from .simplex import lp_subsolver
from .tight import AugState, minimal_cores, minimal_tight_set

__version__ = "0.1.0"
