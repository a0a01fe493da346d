"""Cutting-plane solution of the strict-core covering LP.

The LP has one covering constraint per strict core, i.e. per tight set whose
terminals are exactly those of one minimal core. Constraints are generated on
demand by a min-cut separation oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .coregraph import CoreGraph, Pair
from .flow import max_flow_min_cut
from .simplex import CoveringLP
from .tight import AugState, minimal_tight_set

log = logging.getLogger(__name__)


class CuttingPlaneError(RuntimeError):
    """The oracle repeated a constraint the LP already satisfies."""


@dataclass
class FractionalSolution:
    values: dict[Pair, Fraction]
    objective: Fraction
    constraints: list[frozenset[int]] = field(default_factory=list)

    @property
    def support(self) -> list[Pair]:
        return [p for p, v in self.values.items() if v > 0]


@dataclass(frozen=True)
class Violated:
    cut: frozenset[int]
    terminal: int
    capacity: Fraction


FEASIBLE = None
OracleVerdict = Optional[Violated]


def entering_pairs(cg: CoreGraph, X: frozenset[int]) -> list[Pair]:
    return [(u, v) for (u, v) in cg.weights if u not in X and v in X]


def oracle_network(cg: CoreGraph, t: int, x: Mapping[Pair, Fraction]):
    """Capacitated arcs of the auxiliary graph used to test terminal ``t``.

    Returns ``(arcs, added)`` where ``added`` lists the root pairs (r, s) that
    had to be introduced because the core graph lacks them.
    """
    state = cg.state
    inst = state.instance
    r = inst.root
    C = minimal_tight_set(state, t)
    outside = {s for s in inst.terminals if s not in C}
    arcs: list = []
    present = set()
    for (u, v) in cg.weights:
        if u == r and v in outside:
            present.add(v)
            continue
        cap = x.get((u, v), 0)
        if cap:
            arcs.append((u, v, cap))
    arcs += state.unit_arcs
    arcs += [(r, s, 1) for s in sorted(outside)]
    added = sorted(outside - present)
    return arcs, added


def separation_oracle(cg: CoreGraph, x: Mapping[Pair, Fraction]) -> OracleVerdict:
    """Return None if ``x`` satisfies every strict-core constraint, else a violated core."""
    state = cg.state
    inst = state.instance
    core_of = {t: C for _, C in cg.cores for t in C & inst.terminals}
    for t in inst.sorted_terminals():
        if t not in core_of:
            continue
        arcs, added = oracle_network(cg, t, x)
        if added:
            log.debug("root pairs %s absent from core graph; added with capacity 1", added)
        value, side = max_flow_min_cut(inst.n, arcs, inst.root, t)
        if value < state.level + 1:
            return Violated(side, t, Fraction(value))
    return FEASIBLE


def solve_strict_core_lp(cg: CoreGraph, max_rounds: int | None = None) -> FractionalSolution:
    """Optimal solution of the strict-core covering LP over core-graph pairs."""
    if not cg.cores:
        raise ValueError("no cores to cover")
    pairs = cg.pairs
    lp = CoveringLP(pairs, cg.weights)
    seen: set[frozenset[int]] = set()
    for _, C in cg.cores:
        lp.add_constraint(entering_pairs(cg, C))
        seen.add(C)
    rounds = 0
    while True:
        x, value = lp.solve()
        verdict = separation_oracle(cg, x)
        if verdict is FEASIBLE:
            break
        if verdict.cut in seen:
            raise CuttingPlaneError(f"constraint for {sorted(verdict.cut)} repeated")
        seen.add(verdict.cut)
        lp.add_constraint(entering_pairs(cg, verdict.cut))
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            raise CuttingPlaneError("cutting-plane round limit exceeded")
    support = {p: v for p, v in x.items() if v}
    return FractionalSolution(support, value, [c for c in _ordered(seen)])


def _ordered(sets):
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def solve_augmentation_lp(state: AugState) -> tuple[dict[int, Fraction], Fraction]:
    """Fractional augmentation LP over edges outside base + partial.

    Base and partial edges act as capacity-1 arcs; a terminal whose min cut
    falls below ``level + 1`` yields the violated cut constraint.
    """
    inst = state.instance
    variables = [e.id for e in inst.edges if e.id not in state.base and e.id not in state.partial]
    lp = CoveringLP(variables, {i: inst.edges[i].weight for i in variables})
    seen: set[frozenset[int]] = set()
    while True:
        x, value = lp.solve()
        arcs = list(state.unit_arcs)
        arcs += [(inst.edges[i].tail, inst.edges[i].head, v) for i, v in x.items() if v]
        violated = None
        for t in inst.sorted_terminals():
            cap, side = max_flow_min_cut(inst.n, arcs, inst.root, t)
            if cap < state.level + 1:
                violated = side
                break
        if violated is None:
            return {i: v for i, v in x.items() if v}, value
        if violated in seen:
            raise CuttingPlaneError(f"constraint for {sorted(violated)} repeated")
        seen.add(violated)
        entering = [i for i in variables if inst.edges[i].tail not in violated and inst.edges[i].head in violated]
        lp.add_constraint(entering)


def augmentation_lp_lower_bound(state: AugState) -> Fraction:
    """Optimal value of the fractional augmentation LP (a lower bound on the integral optimum)."""
    return solve_augmentation_lp(state)[1]
