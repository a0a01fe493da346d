"""Auxiliary core graph: zero-weight shortcuts, metric completion, pruning.

Shortcut pair (u, v) means every tight set containing v also contains u, so
the pair can be used for free. The completed graph's pair weights are
shortest-path lengths over (non-base edges + shortcuts), with partial-cover
edges also free. Out-pairs of terminals that belong to no minimal core are
then dropped.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .tight import AugState, core_terminals

Pair = tuple[int, int]
# a G0 edge is either an original edge id or a shortcut pair
G0Edge = Union[int, Pair]
Cores = Sequence[tuple[int, frozenset[int]]]


def _edge_key(e: G0Edge) -> tuple[int, int, int]:
    if isinstance(e, int):
        return (0, e, 0)
    return (1, e[0], e[1])


def _blocked_heads(state: AugState, cores: Cores) -> tuple[dict[int, set[int]], set[int]]:
    """For each u: vertices v lying in some tight set that excludes u.

    Also returns the vertices u for which some core admits no tight superset
    avoiding u. Tight sets containing a core C and avoiding u are closed under
    union, so one maximal min cut per (u, C) answers every v at once.
    """
    inst = state.instance
    memo_key = tuple(sorted(tuple(sorted(C)) for _, C in cores))
    memo = state.__dict__.setdefault("_blocked_memo", {})
    if memo_key in memo:
        return memo[memo_key]
    blocked: dict[int, set[int]] = {u: set() for u in range(inst.n)}
    pinned: set[int] = set()
    for u in range(inst.n):
        sources = {inst.root, u}
        for _, C in cores:
            if u in C:
                pinned.add(u)
                continue
            value, side = state.separating_cut(sources, C, maximal=True)
            if value == state.level:
                blocked[u] |= side
            else:
                pinned.add(u)
    memo[memo_key] = (blocked, pinned)
    return blocked, pinned


def build_E0(state: AugState, cores: Cores) -> frozenset[Pair]:
    """Pairs (u, v), u != v, such that every tight set containing v contains u."""
    if not cores:
        raise ValueError("cores must be nonempty")
    n = state.instance.n
    blocked, _ = _blocked_heads(state, cores)
    return frozenset(
        (u, v) for u in range(n) for v in range(n) if u != v and v not in blocked[u]
    )


def build_E0_pairwise(state: AugState, cores: Cores) -> frozenset[Pair]:
    """Reference construction: one separating min cut per (u, v, core)."""
    inst = state.instance
    out = set()
    for u in range(inst.n):
        for v in range(inst.n):
            if u == v:
                continue
            ok = True
            for _, C in cores:
                sources, sinks = {inst.root, u}, set(C) | {v}
                if sources & sinks:
                    continue
                value, _ = state.separating_cut(sources, sinks)
                if value < state.level + 1:
                    ok = False
                    break
            if ok:
                out.add((u, v))
    return frozenset(out)


def g0_edges(state: AugState, E0: Iterable[Pair]) -> list[tuple[G0Edge, int, int, Fraction]]:
    """Edges of G0 as ``(key, tail, head, weight)``; base edges are absent."""
    inst = state.instance
    out: list[tuple[G0Edge, int, int, Fraction]] = []
    for e in inst.edges:
        if e.id in state.base:
            continue
        w = Fraction(0) if e.id in state.partial else e.weight
        out.append((e.id, e.tail, e.head, w))
    out += [((u, v), u, v, Fraction(0)) for u, v in sorted(E0)]
    return out


@dataclass
class MetricClosure:
    """Shortest-path weights and witness paths for every reachable ordered pair."""

    n: int
    weights: dict[Pair, Fraction]
    paths: dict[Pair, tuple[G0Edge, ...]]

    def weight(self, u: int, v: int) -> Fraction | None:
        if u == v:
            return Fraction(0)
        return self.weights.get((u, v))


def metric_completion(n: int, edges: Sequence[tuple[G0Edge, int, int, Fraction]]) -> MetricClosure:
    """All-pairs shortest paths with deterministic witnesses.

    Ties are broken by fewest edges, then by the lexicographically smallest
    edge-key sequence (original ids before shortcuts).
    """
    out_adj: list[list[tuple[G0Edge, int, Fraction]]] = [[] for _ in range(n)]
    for key, u, v, w in edges:
        if w < 0:
            raise ValueError("negative G0 weight")
        out_adj[u].append((key, v, w))
    weights: dict[Pair, Fraction] = {}
    paths: dict[Pair, tuple[G0Edge, ...]] = {}
    for src in range(n):
        done = [False] * n
        heap: list = [(Fraction(0), 0, (), src, ())]
        while heap:
            w, hops, keys, v, path = heapq.heappop(heap)
            if done[v]:
                continue
            done[v] = True
            if v != src:
                weights[(src, v)] = w
                paths[(src, v)] = path
            for key, x, ew in out_adj[v]:
                if not done[x]:
                    heapq.heappush(
                        heap, (w + ew, hops + 1, keys + (_edge_key(key),), x, path + (key,))
                    )
    return MetricClosure(n, weights, paths)


@dataclass
class CoreGraph:
    state: AugState
    cores: list[tuple[int, frozenset[int]]]
    E0: frozenset[Pair]
    closure: MetricClosure
    pruned: frozenset[int]
    weights: dict[Pair, Fraction] = field(init=False)

    def __post_init__(self):
        self.weights = {
            p: w for p, w in sorted(self.closure.weights.items()) if p[0] not in self.pruned
        }

    @property
    def pairs(self) -> list[Pair]:
        return list(self.weights)

    def path(self, pair: Pair) -> tuple[G0Edge, ...]:
        return self.closure.paths[pair]

    def weight_of(self, pairs: Iterable[Pair]) -> Fraction:
        return sum((self.weights[p] for p in pairs), Fraction(0))

    def to_json(self) -> dict:
        def enc(e: G0Edge):
            return {"edge": e} if isinstance(e, int) else {"shortcut": list(e)}

        return {
            "level": self.state.level,
            "base": sorted(self.state.base),
            "partial": sorted(self.state.partial),
            "cores": [{"terminal": t, "set": sorted(C)} for t, C in self.cores],
            "shortcuts": [list(p) for p in sorted(self.E0)],
            "pruned": sorted(self.pruned),
            "pairs": [
                {
                    "tail": u,
                    "head": v,
                    "weight": [w.numerator, w.denominator],
                    "path": [enc(e) for e in self.closure.paths[(u, v)]],
                }
                for (u, v), w in self.weights.items()
            ],
        }


def pruned_vertices(state: AugState, cores: Cores) -> frozenset[int]:
    """Vertices whose out-pairs are dropped: terminals outside every minimal core.

    Such a terminal u lies in no strict core, and every tight set containing
    it contains some core terminal. Dropping its out-pairs is what makes a
    cover of the strict cores a cover of all cores; no original edge leaves a
    terminal, so no optimal cover loses an edge.
    """
    inst = state.instance
    Q = core_terminals(cores, inst)
    return frozenset(t for t in inst.terminals if t not in Q)


def pruned_vertices_as_stated(state: AugState, cores: Cores) -> frozenset[int]:
    """Alternative rule: u outside Q is dropped when every tight set through some
    core terminal s also contains u.

    Kept for comparison only. It can drop the sole pair covering a core (a
    Steiner vertex inside a minimal core is always dropped), leaving the
    strict-core LP infeasible.
    """
    Q = core_terminals(cores, state.instance)
    _, pinned = _blocked_heads(state, cores)
    return frozenset(u for u in pinned if u not in Q)


def pruned_vertices_as_stated_pairwise(state: AugState, cores: Cores) -> frozenset[int]:
    """Same rule as :func:`pruned_vertices_as_stated`, one min cut per (u, s)."""
    inst = state.instance
    Q = core_terminals(cores, inst)
    out = set()
    for u in range(inst.n):
        if u in Q:
            continue
        for s in sorted(Q):
            value, _ = state.separating_cut({inst.root, u}, {s})
            if value >= state.level + 1:
                out.add(u)
                break
    return frozenset(out)


def prune_to_core_graph(closure: MetricClosure, state: AugState, cores: Cores, E0=frozenset()) -> CoreGraph:
    if not cores:
        raise ValueError("cores must be nonempty")
    pruned = pruned_vertices(state, cores)
    assert state.instance.root not in pruned
    return CoreGraph(state, list(cores), frozenset(E0), closure, pruned)


def build_core_graph(state: AugState, cores: Cores) -> CoreGraph:
    E0 = build_E0(state, cores)
    closure = metric_completion(state.instance.n, g0_edges(state, E0))
    return prune_to_core_graph(closure, state, cores, E0)


def lift_cover(cg: CoreGraph, A: Iterable[Pair]) -> frozenset[int]:
    """Original non-base, non-partial edges on the witness paths of ``A``."""
    state = cg.state
    out: set[int] = set()
    for pair in A:
        if pair not in cg.weights:
            raise KeyError(f"pair {pair} is not a core-graph edge")
        for e in cg.closure.paths[pair]:
            if isinstance(e, int) and e not in state.partial:
                out.add(e)
    assert not out & state.base
    return frozenset(out)
