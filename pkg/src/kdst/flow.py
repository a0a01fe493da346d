"""Exact max-flow / min-cut on capacitated directed multigraphs.

Capacities may be ``int`` or ``Fraction``; arithmetic stays exact. The
algorithm is Dinic's (BFS level graph + blocking flow by DFS).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction
Arc = tuple[int, int, Number]


def infinite_capacity(arcs: Iterable[Arc]) -> Number:
    """Sentinel strictly larger than the total finite capacity."""
    return sum((c for _, _, c in arcs), 0) + 1


class _Network:
    __slots__ = ("n", "head", "cap", "adj")

    def __init__(self, n: int, arcs: Iterable[Arc]):
        self.n = n
        self.head: list[int] = []
        self.cap: list[Number] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, c in arcs:
            if c < 0:
                raise ValueError("negative capacity")
            if u == v:
                continue
            self.adj[u].append(len(self.head))
            self.head.append(v)
            self.cap.append(c)
            self.adj[v].append(len(self.head))
            self.head.append(u)
            self.cap.append(0)

    def _levels(self, s: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for a in self.adj[u]:
                v = self.head[a]
                if level[v] < 0 and self.cap[a] > 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level

    def max_flow(self, s: int, t: int) -> Number:
        total: Number = 0
        while True:
            level = self._levels(s)
            if level[t] < 0:
                return total
            it = [0] * self.n
            while True:
                pushed = self._blocking_path(s, t, level, it)
                if pushed is None:
                    break
                total += pushed

    def _blocking_path(self, s: int, t: int, level: list[int], it: list[int]):
        # iterative DFS that finds one augmenting path in the level graph
        path: list[int] = []
        u = s
        while True:
            if u == t:
                delta = min(self.cap[a] for a in path)
                for a in path:
                    self.cap[a] -= delta
                    self.cap[a ^ 1] += delta
                return delta
            adj = self.adj[u]
            while it[u] < len(adj):
                a = adj[it[u]]
                v = self.head[a]
                if self.cap[a] > 0 and level[v] == level[u] + 1:
                    break
                it[u] += 1
            else:
                if u == s:
                    return None
                # dead end: retreat and block this vertex
                level[u] = -1
                a = path.pop()
                u = self.head[a ^ 1]
                it[u] += 1
                continue
            a = adj[it[u]]
            path.append(a)
            u = self.head[a]

    def reaches(self, target: int) -> set[int]:
        """Vertices with a residual path to ``target``."""
        seen = {target}
        q = deque([target])
        while q:
            v = q.popleft()
            for a in self.adj[v]:
                # a is v->u; the paired arc a^1 is u->v
                u = self.head[a]
                if u not in seen and self.cap[a ^ 1] > 0:
                    seen.add(u)
                    q.append(u)
        return seen

    def reached_from(self, source: int) -> set[int]:
        seen = {source}
        q = deque([source])
        while q:
            u = q.popleft()
            for a in self.adj[u]:
                v = self.head[a]
                if v not in seen and self.cap[a] > 0:
                    seen.add(v)
                    q.append(v)
        return seen


def max_flow_min_cut(
    n: int, arcs: Sequence[Arc], source: int, sink: int, maximal: bool = False
) -> tuple[Number, frozenset[int]]:
    """Max-flow value and a sink-side minimum cut.

    By default the cut is the inclusion-minimal sink side: every vertex that
    can still reach ``sink`` in the residual graph. With ``maximal=True`` the
    inclusion-maximal sink side (complement of the residual source side) is
    returned instead.
    """
    if source == sink:
        raise ValueError("source and sink coincide")
    net = _Network(n, arcs)
    value = net.max_flow(source, sink)
    if maximal:
        side = frozenset(range(n)) - net.reached_from(source)
    else:
        side = frozenset(net.reaches(sink))
    return value, side


def min_cut_between_sets(
    n: int,
    arcs: Sequence[Arc],
    sources: Iterable[int],
    sinks: Iterable[int],
    maximal: bool = False,
) -> tuple[Number, frozenset[int]]:
    """Minimum capacity entering a set W with ``sinks`` in W and ``sources`` outside.

    Returns ``(value, W)`` with ``W`` the minimal (or maximal) such set. Two
    fresh vertices are attached with infinite-capacity arcs and stripped from
    the returned cut.
    """
    A, B = set(sources), set(sinks)
    if not A or not B:
        raise ValueError("both vertex sets must be nonempty")
    if A & B:
        raise ValueError("source and sink sets overlap")
    inf = infinite_capacity(arcs)
    s, t = n, n + 1
    ext = list(arcs)
    ext += [(s, a, inf) for a in sorted(A)]
    ext += [(b, t, inf) for b in sorted(B)]
    value, side = max_flow_min_cut(n + 2, ext, s, t, maximal=maximal)
    return value, side - {s, t}


def cut_capacity(arcs: Iterable[Arc], W: Iterable[int]) -> Number:
    """Total capacity of arcs entering ``W``."""
    W = set(W)
    return sum((c for u, v, c in arcs if u not in W and v in W), 0)
