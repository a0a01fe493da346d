"""Tight-set queries for one augmentation state.

A cut set U is tight when exactly ``level`` base edges and no partial-cover
edges enter it. The family is never materialized; every query is a min-cut
computation over the unit-capacity graph (V, base + partial).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .flow import max_flow_min_cut, min_cut_between_sets
from .instance import Instance, canonical


class CorruptStateError(RuntimeError):
    """The base edge set does not give every terminal the declared connectivity."""


@dataclass(frozen=True, eq=False)
class AugState:
    instance: Instance
    level: int
    base: frozenset[int]
    partial: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        object.__setattr__(self, "partial", frozenset(self.partial))
        if self.level < 0:
            raise ValueError("level must be nonnegative")
        if self.base & self.partial:
            raise ValueError("partial cover overlaps the base edge set")
        bad = (self.base | self.partial) - self.instance.all_edges
        if bad:
            raise ValueError(f"unknown edge ids {sorted(bad)}")

    def with_partial(self, partial: Iterable[int]) -> "AugState":
        return AugState(self.instance, self.level, self.base, frozenset(partial))

    @cached_property
    def unit_arcs(self) -> list[tuple[int, int, int]]:
        """Unit-capacity arcs of base + partial, in edge-id order."""
        edges = self.instance.edges
        return [(edges[i].tail, edges[i].head, 1) for i in sorted(self.base | self.partial)]

    @cached_property
    def _tight_cache(self) -> dict[int, Optional[frozenset[int]]]:
        return {}

    def separating_cut(self, sources: Iterable[int], sinks: Iterable[int], maximal: bool = False):
        return min_cut_between_sets(self.instance.n, self.unit_arcs, sources, sinks, maximal=maximal)


def minimal_tight_set(state: AugState, t: int) -> Optional[frozenset[int]]:
    """The unique inclusion-minimal tight set containing terminal ``t``, or None."""
    inst = state.instance
    if t not in inst.terminals:
        raise KeyError(f"unknown terminal {t}")
    cache = state._tight_cache
    if t not in cache:
        value, side = max_flow_min_cut(inst.n, state.unit_arcs, inst.root, t)
        if value < state.level:
            raise CorruptStateError(
                f"terminal {t} has connectivity {value} < level {state.level}"
            )
        cache[t] = side if value == state.level else None
    return cache[t]


def minimal_cores(state: AugState) -> list[tuple[int, frozenset[int]]]:
    """Inclusion-minimal tight sets as ``(lowest terminal, set)`` pairs.

    ``C_t`` is minimal iff every terminal ``s`` inside it has ``C_s == C_t``.
    An empty list means no tight set is left, i.e. every terminal already has
    connectivity ``level + 1``.
    """
    inst = state.instance
    found: dict[frozenset[int], int] = {}
    for t in inst.sorted_terminals():
        C = minimal_tight_set(state, t)
        if C is None or C in found:
            continue
        if all(minimal_tight_set(state, s) == C for s in C & inst.terminals):
            found[C] = t
    return sorted(((t, C) for C, t in found.items()), key=lambda p: canonical(p[1]))


def core_terminals(cores: Iterable[tuple[int, frozenset[int]]], inst: Instance) -> frozenset[int]:
    out: set[int] = set()
    for _, C in cores:
        out |= C & inst.terminals
    return frozenset(out)
