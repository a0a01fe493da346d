"""Seeded random instance generator."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .instance import Edge, Instance, connectivity_certificate, format_instance


def generate_instance(
    n_steiner: int,
    n_terminals: int,
    density: float = 0.5,
    max_weight: float | int | str = 10,
    seed: int = 0,
    k: int = 1,
) -> Instance:
    """Random instance: root 0, Steiner 1..s, terminals after them.

    Candidate edges r->(S+T) and S->(S+T) are kept independently with
    probability ``density``; weights are multiples of 0.1 in (0, max_weight].
    Any terminal left short of k edge-disjoint paths receives k parallel
    root edges of weight ``max_weight``.
    """
    if n_steiner < 0 or n_terminals < 1:
        raise ValueError("need n_steiner >= 0 and n_terminals >= 1")
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    if k < 1:
        raise ValueError("k must be >= 1")
    wmax = Fraction(str(max_weight))
    if wmax <= 0:
        raise ValueError("max_weight must be positive")
    units = max(1, int(wmax * 10))
    rng = np.random.default_rng(seed)
    root = 0
    steiner = list(range(1, n_steiner + 1))
    terminals = list(range(n_steiner + 1, n_steiner + 1 + n_terminals))
    n = 1 + n_steiner + n_terminals
    heads = steiner + terminals
    candidates = [(root, v) for v in heads] + [(u, v) for u in steiner for v in heads if u != v]
    raw = []
    for u, v in candidates:
        if rng.random() < density:
            raw.append((u, v, Fraction(int(rng.integers(1, units + 1)), 10)))
    edges = tuple(Edge(i, u, v, w) for i, (u, v, w) in enumerate(raw))
    inst = Instance(n=n, root=root, terminals=frozenset(terminals), edges=edges, k=k)
    cert = connectivity_certificate(inst, inst.all_edges)
    for t in terminals:
        if cert[t] < k:
            raw += [(root, t, wmax)] * k
    edges = tuple(Edge(i, u, v, w) for i, (u, v, w) in enumerate(raw))
    return Instance(n=n, root=root, terminals=frozenset(terminals), edges=edges, k=k)


def generate_instance_text(*args, **kwargs) -> str:
    return format_instance(generate_instance(*args, **kwargs))
