"""Brute-force ground truth for small instances.

Everything here works by enumeration, independently of the tight-set and
core-graph machinery it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .instance import Instance, covering_edges, iter_cut_sets, terminal_connectivity
from .tight import AugState

DEFAULT_MAX_EDGES = 24
DEFAULT_MAX_VERTICES = 16


class EnumerationLimitError(ValueError):
    pass


class InfeasibleError(ValueError):
    pass


def _reaches(inst: Instance, edges: Iterable[int], k: int, terminals: Sequence[int]) -> bool:
    E = frozenset(edges)
    return all(terminal_connectivity(inst, E, t) >= k for t in terminals)


def _branch_and_bound(
    inst: Instance,
    fixed: frozenset[int],
    candidates: Sequence[int],
    k: int,
    incumbent: Optional[Iterable[int]] = None,
) -> tuple[Fraction, frozenset[int]]:
    """Cheapest subset of ``candidates`` that, with ``fixed``, reaches connectivity k.

    Ties are broken towards the lexicographically smallest sorted id tuple.
    """
    terminals = inst.sorted_terminals()
    if not _reaches(inst, fixed | frozenset(candidates), k, terminals):
        raise InfeasibleError("no feasible edge subset exists")
    weights = [inst.edges[i].weight for i in candidates]
    if incumbent is not None:
        inc = frozenset(incumbent) - fixed
        if not _reaches(inst, fixed | inc, k, terminals):
            raise ValueError("incumbent is infeasible")
        best = [inst.weight(inc), tuple(sorted(inc))]
    else:
        best = [sum(weights, Fraction(0)), tuple(sorted(candidates))]

    def consider(chosen: list[int], w: Fraction):
        key = (w, tuple(sorted(chosen)))
        if key < (best[0], best[1]):
            best[0], best[1] = key

    def dfs(pos: int, chosen: list[int], w: Fraction, excluded: frozenset[int]):
        if w > best[0]:
            return
        current = fixed | frozenset(chosen)
        if _reaches(inst, current, k, terminals):
            consider(chosen, w)
            if all(weights[j] > 0 for j in range(pos, len(candidates))):
                return
        if pos == len(candidates):
            return
        e = candidates[pos]
        chosen.append(e)
        dfs(pos + 1, chosen, w + weights[pos], excluded)
        chosen.pop()
        rest = fixed | frozenset(chosen) | frozenset(candidates[pos + 1:])
        if _reaches(inst, rest, k, terminals):
            dfs(pos + 1, chosen, w, excluded | {e})

    dfs(0, [], Fraction(0), frozenset())
    return best[0], frozenset(best[1])


def exact_optimum(
    inst: Instance, max_edges: int = DEFAULT_MAX_EDGES, incumbent: Optional[Iterable[int]] = None
) -> tuple[Fraction, frozenset[int]]:
    """Minimum-weight edge set with k edge-disjoint root paths to every terminal."""
    if inst.m > max_edges:
        raise EnumerationLimitError(f"{inst.m} edges exceeds the limit of {max_edges}")
    return _branch_and_bound(inst, frozenset(), list(range(inst.m)), inst.k, incumbent)


def exact_augmentation_optimum(
    state: AugState, max_edges: int = DEFAULT_MAX_EDGES, incumbent: Optional[Iterable[int]] = None
) -> Fraction:
    """Minimum weight of edges outside base + partial raising connectivity to level + 1."""
    return exact_augmentation_solution(state, max_edges, incumbent)[0]


def exact_augmentation_solution(
    state: AugState, max_edges: int = DEFAULT_MAX_EDGES, incumbent: Optional[Iterable[int]] = None
) -> tuple[Fraction, frozenset[int]]:
    inst = state.instance
    fixed = state.base | state.partial
    candidates = [i for i in range(inst.m) if i not in fixed]
    if len(candidates) > max_edges:
        raise EnumerationLimitError(f"{len(candidates)} candidate edges exceeds the limit of {max_edges}")
    return _branch_and_bound(inst, fixed, candidates, state.level + 1, incumbent)


@dataclass(frozen=True)
class TightSet:
    vertices: frozenset[int]
    minimal: bool
    core: bool
    strict: bool


@dataclass
class EnumeratedFamily:
    sets: list[TightSet]
    state: AugState

    @property
    def tight(self) -> list[frozenset[int]]:
        return [s.vertices for s in self.sets]

    @property
    def minimal(self) -> list[frozenset[int]]:
        return [s.vertices for s in self.sets if s.minimal]

    @property
    def cores(self) -> list[frozenset[int]]:
        return [s.vertices for s in self.sets if s.core]

    @property
    def strict_cores(self) -> list[frozenset[int]]:
        return [s.vertices for s in self.sets if s.strict]


def _sort_key(U: frozenset[int]):
    return (len(U), sorted(U))


def enumerate_tight_sets(state: AugState, max_vertices: int = DEFAULT_MAX_VERTICES) -> EnumeratedFamily:
    """Every tight set of the state, with minimal / core / strict-core flags."""
    inst = state.instance
    if inst.n > max_vertices:
        raise EnumerationLimitError(f"{inst.n} vertices exceeds the limit of {max_vertices}")
    tight = [
        U
        for U in iter_cut_sets(inst)
        if len(covering_edges(inst, state.base, U)) == state.level
        and not covering_edges(inst, state.partial, U)
    ]
    tight.sort(key=_sort_key)
    minimal = [U for U in tight if not any(V < U for V in tight)]
    sets = []
    for U in tight:
        inside = [C for C in minimal if C <= U]
        core = len(inside) == 1
        strict = any(U & inst.terminals == C & inst.terminals for C in minimal)
        sets.append(TightSet(U, U in minimal, core, strict))
    return EnumeratedFamily(sets, state)


def enumerate_strict_cores(state: AugState, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[frozenset[int]]:
    family = enumerate_tight_sets(state, max_vertices)
    strict = family.strict_cores
    inst = state.instance
    bound = (1 << len(inst.steiner)) * len(inst.terminals)
    assert len(strict) <= bound, f"{len(strict)} strict cores exceed the bound {bound}"
    return strict


def min_weight_hitting_set(
    sets: Sequence[Iterable[Hashable]], weights: Mapping[Hashable, Fraction]
) -> Optional[tuple[Fraction, frozenset]]:
    """Exact minimum-weight hitting set by branching on an unhit set.

    Returns None when some set is empty (no hitting set exists).
    """
    family = [frozenset(s) for s in sets]
    if any(not s for s in family):
        return None
    best: list = [sum((weights[e] for s in family for e in s), Fraction(0)) + 1, None]

    def dfs(chosen: frozenset, forbidden: frozenset, w: Fraction):
        if w >= best[0]:
            return
        unhit = [s for s in family if not s & chosen]
        if not unhit:
            best[0], best[1] = w, chosen
            return
        options = min((sorted(s - forbidden) for s in unhit), key=len)
        banned = set(forbidden)
        for e in options:
            dfs(chosen | {e}, frozenset(banned), w + weights[e])
            banned.add(e)

    dfs(frozenset(), frozenset(), Fraction(0))
    if best[1] is None:
        return None
    return best[0], best[1]
