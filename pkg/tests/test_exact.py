from fractions import Fraction
from itertools import combinations

import pytest

from helpers import R, S1, T1, T2, e, random_state
from kdst import AugState, enumerate_strict_cores, enumerate_tight_sets, exact_augmentation_optimum, exact_optimum
from kdst.exact import EnumerationLimitError, InfeasibleError, min_weight_hitting_set
from kdst.generate import generate_instance
from kdst.instance import is_feasible


def test_exact_optimum_fixtures(fix_a, fix_b, fix_c):
    assert exact_optimum(fix_a) == (3, e(1, 2, 3))
    assert exact_optimum(fix_b) == (2, e(1, 2))
    assert exact_optimum(fix_c) == (4, e(1, 2, 3))


def test_exact_optimum_guard(fix_a):
    with pytest.raises(EnumerationLimitError):
        exact_optimum(fix_a, max_edges=4)


def test_exact_optimum_infeasible(fix_b):
    from dataclasses import replace
    with pytest.raises(InfeasibleError):
        exact_optimum(replace(fix_b, k=3))


def plain_enumeration(inst):
    best = None
    for size in range(inst.m + 1):
        for combo in combinations(range(inst.m), size):
            if is_feasible(inst, frozenset(combo)):
                key = (inst.weight(combo), combo)
                best = key if best is None or key < best else best
    return best


@pytest.mark.parametrize("seed", range(25))
def test_branch_and_bound_matches_plain_enumeration(seed):
    inst = generate_instance(seed % 3, 1 + seed % 2, 0.4, 3, seed, k=1 + seed % 2)
    if inst.m > 12:
        pytest.skip("too many edges for plain enumeration")
    w, edges = exact_optimum(inst)
    bw, bedges = plain_enumeration(inst)
    assert w == bw
    assert tuple(sorted(edges)) == bedges


def test_exact_augmentation_examples(fix_a, fix_c):
    assert exact_augmentation_optimum(AugState(fix_a, 0, frozenset())) == 3
    assert exact_augmentation_optimum(AugState(fix_c, 1, e(1, 2))) == 2
    assert exact_augmentation_optimum(AugState(fix_a, 0, e(1, 2, 3))) == 0


def test_enumerate_tight_sets_examples(fix_a, fix_b):
    family = enumerate_tight_sets(AugState(fix_a, 0, frozenset()))
    assert len(family.tight) == 6
    family = enumerate_tight_sets(AugState(fix_a, 0, frozenset(), e(2)))
    assert set(family.tight) == {frozenset(s) for s in ({T2}, {S1, T1}, {S1, T2}, {S1, T1, T2})}
    assert enumerate_tight_sets(AugState(fix_b, 1, e(1), e(2))).tight == []


def test_enumerate_strict_cores_examples(fix_a, fix_b):
    got = enumerate_strict_cores(AugState(fix_a, 0, frozenset()))
    assert set(got) == {frozenset(s) for s in ({T1}, {S1, T1}, {T2}, {S1, T2})}
    got = enumerate_strict_cores(AugState(fix_a, 0, frozenset(), e(2)))
    assert set(got) == {frozenset(s) for s in ({T2}, {S1, T2}, {S1, T1})}
    assert enumerate_strict_cores(AugState(fix_b, 1, e(1), e(2))) == []


def test_enumeration_guard(fix_a):
    with pytest.raises(EnumerationLimitError):
        enumerate_tight_sets(AugState(fix_a, 0, frozenset()), max_vertices=3)


@pytest.mark.parametrize("seed", range(20))
def test_flags_are_consistent(seed):
    state, _ = random_state(seed)
    for s in enumerate_tight_sets(state).sets:
        if s.minimal:
            assert s.core and s.strict
        if s.strict:
            assert s.core


def brute_hitting_set(sets, weights):
    keys = sorted(weights)
    best = None
    for size in range(len(keys) + 1):
        for combo in combinations(keys, size):
            chosen = set(combo)
            if all(chosen & set(s) for s in sets):
                w = sum((weights[k] for k in combo), Fraction(0))
                best = w if best is None or w < best else best
    return best


@pytest.mark.parametrize("seed", range(30))
def test_hitting_set_matches_brute_force(seed):
    import numpy as np
    rng = np.random.default_rng(seed)
    keys = list(range(int(rng.integers(1, 9))))
    weights = {k: Fraction(int(rng.integers(0, 5)), int(rng.integers(1, 3))) for k in keys}
    sets = [[k for k in keys if rng.random() < 0.4] for _ in range(int(rng.integers(0, 6)))]
    got = min_weight_hitting_set(sets, weights)
    want = brute_hitting_set(sets, weights)
    if any(not s for s in sets):
        assert got is None
    else:
        assert got[0] == want
        assert all(got[1] & set(s) for s in sets)
