"""Shared generators and brute-force oracles for the test suite."""

from fractions import Fraction
from itertools import product

import numpy as np

from kdst import AugState, augment_connectivity, generate_instance

# vertex ids used by the fixtures
R, S1, T1, T2 = 0, 1, 2, 3


def e(*labels):
    """Fixture labels e1, e2, ... -> 0-based edge ids."""
    return frozenset(i - 1 for i in labels)


def random_state(seed, max_vertices=9, partial_prob=0.3):
    """A valid augmentation state on a small generated instance."""
    rng = np.random.default_rng(seed)
    s = int(rng.integers(0, 4))
    t = int(rng.integers(1, max_vertices - s))
    k = int(rng.integers(1, 4))
    inst = generate_instance(s, t, float(rng.choice([0.4, 0.7, 1.0])), 4, seed, k)
    level = int(rng.integers(0, k))
    base = frozenset()
    for lv in range(level):
        base |= augment_connectivity(inst, base, lv, seed=seed)
    rest = [i for i in range(inst.m) if i not in base]
    partial = frozenset(i for i in rest if rng.random() < partial_prob)
    return AugState(inst, level, base, partial), rng


def brute_min_cut(n, arcs, sources, sinks):
    """Minimum entering capacity over all W with sinks inside and sources outside.

    Returns (value, list of all minimizing W).
    """
    free = [v for v in range(n) if v not in sources and v not in sinks]
    best, argbest = None, []
    for bits in product((0, 1), repeat=len(free)):
        W = frozenset(sinks) | {v for v, b in zip(free, bits) if b}
        cap = sum((c for u, v, c in arcs if u not in W and v in W), Fraction(0))
        if best is None or cap < best:
            best, argbest = cap, [W]
        elif cap == best:
            argbest.append(W)
    return best, argbest


def random_fraction_vector(rng, keys, density=0.5):
    return {
        p: Fraction(int(rng.integers(0, 4)), int(rng.integers(1, 4))) if rng.random() < density else Fraction(0)
        for p in keys
    }
