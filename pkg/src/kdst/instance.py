"""Instance model, text format, cut coverage and terminal connectivity."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

FORMAT_VERSION = 1


class InstanceError(ValueError):
    """Raised for malformed or invalid instances."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    weight: Fraction


@dataclass(frozen=True)
class Instance:
    n: int
    root: int
    terminals: frozenset[int]
    edges: tuple[Edge, ...]
    k: int
    steiner: frozenset[int] = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise InstanceError("need at least a root and one terminal")
        if not 0 <= self.root < self.n:
            raise InstanceError(f"root {self.root} out of range")
        if not self.terminals:
            raise InstanceError("no terminals")
        for t in self.terminals:
            if not 0 <= t < self.n:
                raise InstanceError(f"terminal {t} out of range")
        if self.root in self.terminals:
            raise InstanceError("duplicate vertex role: root is also a terminal")
        if self.k < 1:
            raise InstanceError("k must be at least 1")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise InstanceError("edge ids must be 0..m-1 in order")
            if not (0 <= e.tail < self.n and 0 <= e.head < self.n):
                raise InstanceError(f"edge {i} has an endpoint out of range")
            if e.tail == e.head:
                raise InstanceError(f"edge {i} is a self-loop")
            if e.tail in self.terminals:
                raise InstanceError(f"terminal out-edge: edge {i} leaves terminal {e.tail}")
            if e.weight < 0:
                raise InstanceError(f"edge {i} has negative weight")
        steiner = frozenset(range(self.n)) - self.terminals - {self.root}
        object.__setattr__(self, "steiner", steiner)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_edges(self) -> frozenset[int]:
        return frozenset(range(len(self.edges)))

    def weight(self, edge_ids: Iterable[int]) -> Fraction:
        return sum((self.edges[i].weight for i in edge_ids), Fraction(0))

    def sorted_terminals(self) -> list[int]:
        return sorted(self.terminals)


def _parse_weight(token: str, lineno: int) -> Fraction:
    try:
        w = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InstanceError(f"bad weight {token!r}", lineno) from None
    if w < 0:
        raise InstanceError(f"negative weight {token}", lineno)
    return w


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceError(f"expected integer, got {token!r}", lineno) from None


def parse_instance(text: str | Iterable[str]) -> Instance:
    """Parse the line-oriented ``kdst`` text format.

    Decimal weights are converted exactly (``Fraction("0.1") == 1/10``).
    Edge ids are assigned in file order starting at 0.
    """
    lines: Iterable[str] = text.splitlines() if isinstance(text, str) else text
    n = root = k = None
    terminals: list[int] | None = None
    raw_edges: list[tuple[int, int, Fraction, int]] = []
    version_seen = False

    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "kdst":
            if args != [str(FORMAT_VERSION)]:
                raise InstanceError(f"unsupported format version {' '.join(args)!r}", lineno)
            version_seen = True
        elif key == "nodes":
            if len(args) != 1 or n is not None:
                raise InstanceError("expected a single 'nodes <n>' directive", lineno)
            n = _parse_int(args[0], lineno)
        elif key == "root":
            if len(args) != 1 or root is not None:
                raise InstanceError("expected a single 'root <id>' directive", lineno)
            root = _parse_int(args[0], lineno)
        elif key == "terminals":
            if terminals is None:
                terminals = []
            for a in args:
                t = _parse_int(a, lineno)
                if t in terminals:
                    raise InstanceError(f"duplicate vertex role: terminal {t} listed twice", lineno)
                if t == root:
                    raise InstanceError(f"duplicate vertex role: {t} is root and terminal", lineno)
                terminals.append(t)
        elif key == "edge":
            if len(args) != 3:
                raise InstanceError("expected 'edge <tail> <head> <weight>'", lineno)
            u, v = _parse_int(args[0], lineno), _parse_int(args[1], lineno)
            raw_edges.append((u, v, _parse_weight(args[2], lineno), lineno))
        elif key == "k":
            if len(args) != 1 or k is not None:
                raise InstanceError("expected a single 'k <int>' directive", lineno)
            k = _parse_int(args[0], lineno)
            if k < 1:
                raise InstanceError("k must be at least 1", lineno)
        else:
            raise InstanceError(f"unknown directive {key!r}", lineno)

    if not version_seen:
        raise InstanceError("missing 'kdst 1' header")
    if n is None or root is None or terminals is None or k is None:
        raise InstanceError("missing one of nodes/root/terminals/k")
    if root in terminals:
        raise InstanceError(f"duplicate vertex role: {root} is root and terminal")
    term_set = frozenset(terminals)
    for u, v, _, lineno in raw_edges:
        if u in term_set:
            raise InstanceError(f"terminal out-edge: {u} -> {v}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise InstanceError(f"endpoint out of range in edge {u} -> {v}", lineno)
        if u == v:
            raise InstanceError(f"self-loop on {u}", lineno)
    edges = tuple(Edge(i, u, v, w) for i, (u, v, w, _) in enumerate(raw_edges))
    return Instance(n=n, root=root, terminals=term_set, edges=edges, k=k)


def _format_weight(w: Fraction) -> str:
    if w.denominator == 1:
        return str(w.numerator)
    # terminating decimals round-trip through Fraction(str) exactly
    d = w.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d == 1:
        digits = 0
        scaled = w
        while scaled.denominator != 1:
            scaled *= 10
            digits += 1
        s = str(abs(scaled.numerator)).rjust(digits + 1, "0")
        sign = "-" if w < 0 else ""
        return f"{sign}{s[:-digits]}.{s[-digits:]}"
    return f"{w.numerator}/{w.denominator}"


def format_instance(inst: Instance) -> str:
    out = [
        f"kdst {FORMAT_VERSION}",
        f"nodes {inst.n}",
        f"root {inst.root}",
        "terminals " + " ".join(map(str, inst.sorted_terminals())),
    ]
    out += [f"edge {e.tail} {e.head} {_format_weight(e.weight)}" for e in inst.edges]
    out.append(f"k {inst.k}")
    return "\n".join(out) + "\n"


def cut_set(inst: Instance, vertices: Iterable[int]) -> frozenset[int]:
    """Validate and return a sink-side cut set (excludes the root, meets T)."""
    U = frozenset(vertices)
    if inst.root in U:
        raise ValueError("cut set contains the root")
    if not U & inst.terminals:
        raise ValueError("cut set contains no terminal")
    return U


def canonical(U: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(U))


def covering_edges(inst: Instance, F: Iterable[int], U: Iterable[int]) -> frozenset[int]:
    """Edges of ``F`` entering ``U`` (tail outside, head inside)."""
    U = U if isinstance(U, (set, frozenset)) else frozenset(U)
    return frozenset(
        i for i in F if inst.edges[i].tail not in U and inst.edges[i].head in U
    )


def terminal_connectivity(inst: Instance, F: Iterable[int], t: int) -> int:
    """Maximum number of edge-disjoint root-to-``t`` paths using edges ``F``."""
    from .flow import max_flow_min_cut

    if t not in inst.terminals:
        raise KeyError(f"unknown terminal {t}")
    arcs = [(inst.edges[i].tail, inst.edges[i].head, 1) for i in sorted(set(F))]
    value, _ = max_flow_min_cut(inst.n, arcs, inst.root, t)
    return int(value)


def connectivity_certificate(inst: Instance, F: Iterable[int]) -> dict[int, int]:
    F = frozenset(F)
    return {t: terminal_connectivity(inst, F, t) for t in inst.sorted_terminals()}


def is_feasible(inst: Instance, F: Iterable[int], k: int | None = None) -> bool:
    k = inst.k if k is None else k
    F = frozenset(F)
    return all(terminal_connectivity(inst, F, t) >= k for t in inst.sorted_terminals())


def iter_cut_sets(inst: Instance, containing: int | None = None) -> Iterator[frozenset[int]]:
    """All subsets of V - {r} meeting T (optionally containing a given vertex)."""
    others = [v for v in range(inst.n) if v != inst.root]
    for mask in range(1, 1 << len(others)):
        U = frozenset(v for j, v in enumerate(others) if mask >> j & 1)
        if containing is not None and containing not in U:
            continue
        if U & inst.terminals:
            yield U
