"""Randomized rounding of the strict-core LP into an integral cover."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coregraph import CoreGraph, Pair
from .covering import FEASIBLE, FractionalSolution, separation_oracle


class RoundingError(RuntimeError):
    pass


def strict_core_bound(n_vertices: int, n_steiner: int, n_terminals: int) -> int:
    """Upper bound on the number of strict cores: min(2^|S| |T|, 2^(|V|-1))."""
    return min((1 << n_steiner) * n_terminals, 1 << (n_vertices - 1))


def default_rounds(n_vertices: int, n_steiner: int, n_terminals: int) -> int:
    bound = strict_core_bound(n_vertices, n_steiner, n_terminals)
    return max(1, math.ceil(math.log(2 * bound)))


@dataclass(frozen=True)
class RoundingConfig:
    seed: int | np.random.SeedSequence = 0
    rounds: int = 1
    max_attempts: int = 64

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")

    @classmethod
    def for_instance(cls, cg: CoreGraph, seed=0, rounds: int | None = None, max_attempts: int = 64):
        inst = cg.state.instance
        if rounds is None:
            rounds = default_rounds(inst.n, len(inst.steiner), len(inst.terminals))
        return cls(seed=seed, rounds=rounds, max_attempts=max_attempts)


@dataclass
class RoundingResult:
    pairs: frozenset[Pair]
    weight: Fraction
    attempts: int


def round_cover(x: FractionalSolution, cg: CoreGraph, cfg: RoundingConfig) -> RoundingResult:
    """Sample a cover of all strict cores with weight at most 2R times the LP value.

    Each attempt unions ``cfg.rounds`` independent rounds, each keeping pair
    ``e`` with probability ``min(1, x_e)``. An attempt is accepted only after
    the separation oracle confirms coverage and the weight check passes.
    """
    rng = np.random.default_rng(cfg.seed)
    support = sorted(x.support)
    certain = [p for p in support if x.values[p] >= 1]
    uncertain = [p for p in support if x.values[p] < 1]
    limit = 2 * cfg.rounds * x.objective
    for attempt in range(1, cfg.max_attempts + 1):
        chosen = set(certain)
        for _ in range(cfg.rounds):
            draws = rng.random(len(uncertain))
            chosen.update(p for p, u in zip(uncertain, draws) if Fraction(u) < x.values[p])
        weight = cg.weight_of(chosen)
        if weight > limit:
            continue
        indicator = {p: Fraction(1) for p in chosen}
        if separation_oracle(cg, indicator) is FEASIBLE:
            return RoundingResult(frozenset(chosen), weight, attempt)
    raise RoundingError(
        f"no acceptable cover after {cfg.max_attempts} attempts "
        f"(rounds={cfg.rounds}, lp value={x.objective})"
    )
