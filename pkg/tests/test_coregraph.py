import pytest

from helpers import R, S1, T1, T2, e, random_state
from kdst import AugState, build_core_graph, build_E0, enumerate_tight_sets, lift_cover, minimal_cores
from kdst.coregraph import (
    build_E0_pairwise,
    g0_edges,
    metric_completion,
    pruned_vertices,
    pruned_vertices_as_stated,
    pruned_vertices_as_stated_pairwise,
)
from kdst.exact import exact_augmentation_optimum, min_weight_hitting_set
from kdst.tight import core_terminals


def state_and_cores(inst, level=0, base=(), partial=()):
    st = AugState(inst, level, frozenset(base), frozenset(partial))
    return st, minimal_cores(st)


def test_every_vertex_shortcuts_to_root(fix_a):
    st, cores = state_and_cores(fix_a)
    E0 = build_E0(st, cores)
    assert all((u, R) in E0 for u in range(1, fix_a.n))


def test_e0_examples(fix_a):
    st, cores = state_and_cores(fix_a)
    assert (R, T1) not in build_E0(st, cores)
    st, cores = state_and_cores(fix_a, partial=e(2))
    assert (S1, T1) in build_E0(st, cores)


def test_metric_completion_examples(fix_a):
    st, cores = state_and_cores(fix_a)
    cg = build_core_graph(st, cores)
    assert cg.weights[(R, T1)] == 2
    assert cg.path((R, T1)) == (0, 1)
    assert cg.weights[(T1, T2)] == 2
    assert cg.path((T1, T2)) == ((T1, R), 0, 2)


def test_nothing_pruned_on_fix_a(fix_a):
    st, cores = state_and_cores(fix_a)
    assert pruned_vertices(st, cores) == frozenset()
    assert pruned_vertices_as_stated(st, cores) == frozenset()


def test_stated_rule_prunes_s1(fix_a):
    st, cores = state_and_cores(fix_a, partial=e(2))
    assert pruned_vertices_as_stated(st, cores) == {S1}
    # the rule actually used keeps s1, since it lies inside a minimal core
    assert pruned_vertices(st, cores) == frozenset()


def test_lift_examples(fix_a):
    st, cores = state_and_cores(fix_a)
    cg = build_core_graph(st, cores)
    assert lift_cover(cg, [(R, T1)]) == e(1, 2)
    assert lift_cover(cg, [(T1, T2)]) == e(1, 3)
    assert lift_cover(cg, []) == frozenset()
    with pytest.raises(KeyError):
        lift_cover(cg, [(T1, T1)])


def test_lift_skips_partial_cover_edges(fix_a):
    st, cores = state_and_cores(fix_a, partial=e(1))
    cg = build_core_graph(st, cores)
    assert cg.weights[(R, T1)] == 1
    assert lift_cover(cg, [(R, T1)]) == e(2)


def covered_by_pairs(X, pairs):
    return any(u not in X and v in X for u, v in pairs)


@pytest.mark.parametrize("seed", range(80))
def test_structure_against_enumeration(seed):
    state, _ = random_state(seed)
    cores = minimal_cores(state)
    if not cores:
        return
    inst = state.instance
    family = enumerate_tight_sets(state)
    E0 = build_E0(state, cores)
    want = {
        (u, v)
        for u in range(inst.n)
        for v in range(inst.n)
        if u != v and all(u in X for X in family.tight if v in X)
    }
    assert E0 == want == build_E0_pairwise(state, cores)

    Q = core_terminals(cores, inst)
    stated = {
        u
        for u in range(inst.n)
        if u not in Q and any(all(u in X for X in family.tight if s in X) for s in Q)
    }
    assert pruned_vertices_as_stated(state, cores) == stated == pruned_vertices_as_stated_pairwise(state, cores)

    cg = build_core_graph(state, cores)
    # lift bound: every pair's original edges weigh no more than the pair
    for pair in cg.pairs:
        assert inst.weight(lift_cover(cg, [pair])) <= cg.weights[pair]
    # no shortcut enters a tight set
    for X in family.tight:
        assert not covered_by_pairs(X, E0)


def test_stated_pruning_rule_breaks_existence():
    # regression: the stated rule drops every pair able to cover some core
    state, _ = random_state(276)
    cores = minimal_cores(state)
    family = enumerate_tight_sets(state)
    closure = metric_completion(state.instance.n, g0_edges(state, build_E0(state, cores)))

    def cheapest(pruned):
        W = {p: w for p, w in closure.weights.items() if p[0] not in pruned}
        sets = [[p for p in W if p[0] not in X and p[1] in X] for X in family.cores]
        return min_weight_hitting_set(sets, W)

    assert cheapest(pruned_vertices_as_stated(state, cores)) is None
    best = cheapest(pruned_vertices(state, cores))
    assert best is not None and best[0] <= exact_augmentation_optimum(state)


def test_to_json_is_plain(fix_a):
    import json
    st, cores = state_and_cores(fix_a)
    data = build_core_graph(st, cores).to_json()
    assert json.loads(json.dumps(data)) == data
    assert data["cores"] == [{"terminal": T1, "set": [T1]}, {"terminal": T2, "set": [T2]}]
