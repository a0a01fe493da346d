"""Augmentation loop over minimal cores and the outer k-level loop."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

import numpy as np

from .coregraph import CoreGraph, build_core_graph, lift_cover
from .covering import solve_strict_core_lp
from .instance import Instance, connectivity_certificate
from .rounding import RoundingConfig, default_rounds, round_cover
from .tight import AugState, minimal_cores


class InfeasibleInstanceError(ValueError):
    pass


class AugmentationError(AssertionError):
    """An invariant guaranteed by the analysis failed; signals a bug."""

    def __init__(self, message: str, trace: list):
        super().__init__(message)
        self.trace = trace


@dataclass
class IterationRecord:
    level: int
    iteration: int
    cores_before: int
    cores_after: int
    lp_value: Fraction
    cover_weight: Fraction
    lifted_weight: Fraction
    lifted_edges: list[int]
    attempts: int

    def to_json(self) -> dict:
        d = asdict(self)
        for key in ("lp_value", "cover_weight", "lifted_weight"):
            d[key] = str(d[key])
        return d


@dataclass
class Solution:
    edges: frozenset[int]
    weight: Fraction
    certificate: dict[int, int]
    trace: list[IterationRecord] = field(default_factory=list)
    rounds: int = 1

    @property
    def feasible_for(self) -> int:
        return min(self.certificate.values()) if self.certificate else 0


def iteration_cap(n_terminals: int) -> int:
    return math.ceil(math.log2(n_terminals)) + 1 if n_terminals > 1 else 1


def child_seed(seed: int, level: int, iteration: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(entropy=seed, spawn_key=(level, iteration))


def augment_connectivity(
    inst: Instance,
    base: Iterable[int],
    level: int,
    *,
    seed: int = 0,
    rounds: int | None = None,
    max_attempts: int = 64,
    trace: Optional[list[IterationRecord]] = None,
    on_core_graph: Callable[[CoreGraph], None] | None = None,
) -> frozenset[int]:
    """Edges outside ``base`` raising every terminal from ``level`` to ``level + 1``."""
    base = frozenset(base)
    if rounds is None:
        rounds = default_rounds(inst.n, len(inst.steiner), len(inst.terminals))
    cap = iteration_cap(len(inst.terminals))
    records: list[IterationRecord] = [] if trace is None else trace
    F: frozenset[int] = frozenset()
    state = AugState(inst, level, base, F)
    cores = minimal_cores(state)
    j = 0
    while cores:
        j += 1
        if j > cap:
            raise AugmentationError(f"iteration cap {cap} exceeded at level {level}", records)
        cg = build_core_graph(state, cores)
        if on_core_graph is not None:
            on_core_graph(cg)
        x = solve_strict_core_lp(cg)
        cfg = RoundingConfig(seed=child_seed(seed, level, j), rounds=rounds, max_attempts=max_attempts)
        result = round_cover(x, cg, cfg)
        lifted = lift_cover(cg, result.pairs)
        lifted_weight = inst.weight(lifted)
        if lifted_weight > result.weight:
            raise AugmentationError("lifted cover heavier than its core-graph cover", records)
        F = F | lifted
        state = AugState(inst, level, base, F)
        next_cores = minimal_cores(state)
        records.append(
            IterationRecord(
                level=level,
                iteration=j,
                cores_before=len(cores),
                cores_after=len(next_cores),
                lp_value=x.objective,
                cover_weight=result.weight,
                lifted_weight=lifted_weight,
                lifted_edges=sorted(lifted),
                attempts=result.attempts,
            )
        )
        if len(next_cores) > len(cores) // 2:
            raise AugmentationError(
                f"minimal cores went from {len(cores)} to {len(next_cores)}", records
            )
        cores = next_cores
    return F


def solve_kdst(
    inst: Instance,
    *,
    seed: int = 0,
    rounds: int | None = None,
    max_attempts: int = 64,
    on_core_graph: Callable[[CoreGraph], None] | None = None,
) -> Solution:
    """Approximate k-DST by k successive connectivity augmentations."""
    full = connectivity_certificate(inst, inst.all_edges)
    short = {t: c for t, c in full.items() if c < inst.k}
    if short:
        raise InfeasibleInstanceError(
            f"terminals {sorted(short)} have fewer than k={inst.k} edge-disjoint paths"
        )
    if rounds is None:
        rounds = default_rounds(inst.n, len(inst.steiner), len(inst.terminals))
    trace: list[IterationRecord] = []
    E: frozenset[int] = frozenset()
    for level in range(inst.k):
        F = augment_connectivity(
            inst, E, level, seed=seed, rounds=rounds, max_attempts=max_attempts,
            trace=trace, on_core_graph=on_core_graph,
        )
        E = E | F
    certificate = connectivity_certificate(inst, E)
    if min(certificate.values()) < inst.k:
        raise AugmentationError("final edge set is infeasible", trace)
    return Solution(E, inst.weight(E), certificate, trace, rounds)


def approximation_factor(inst: Instance, rounds: int, per_level: bool = False) -> int:
    """Multiplier in w(ALG) <= factor * OPT implied by the per-iteration weight checks."""
    factor = 2 * rounds * iteration_cap(len(inst.terminals))
    return factor if per_level else factor * inst.k
