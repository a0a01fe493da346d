import pytest

from helpers import R, S1, T1, T2, e, random_state
from kdst import AugState, enumerate_tight_sets, minimal_cores, minimal_tight_set
from kdst.tight import CorruptStateError


def test_minimal_tight_set_empty_graph(fix_a):
    assert minimal_tight_set(AugState(fix_a, 0, frozenset()), T1) == {T1}


def test_minimal_tight_set_level_one(fix_a):
    assert minimal_tight_set(AugState(fix_a, 1, e(1, 2, 3)), T1) == {T1}


def test_minimal_tight_set_absent_when_covered(fix_a):
    assert minimal_tight_set(AugState(fix_a, 1, e(1, 2, 3), e(4)), T1) is None


def test_minimal_tight_set_rejects_non_terminal(fix_a):
    with pytest.raises(KeyError):
        minimal_tight_set(AugState(fix_a, 0, frozenset()), S1)


def test_corrupt_state(fix_a):
    with pytest.raises(CorruptStateError):
        minimal_tight_set(AugState(fix_a, 1, e(1)), T1)


def test_state_validation(fix_a):
    with pytest.raises(ValueError):
        AugState(fix_a, 0, e(1), e(1))
    with pytest.raises(ValueError):
        AugState(fix_a, 0, frozenset({9}))
    with pytest.raises(ValueError):
        AugState(fix_a, -1, frozenset())


def test_minimal_cores_examples(fix_a):
    assert minimal_cores(AugState(fix_a, 0, frozenset())) == [(T1, {T1}), (T2, {T2})]
    got = minimal_cores(AugState(fix_a, 0, frozenset(), e(2)))
    assert sorted(got) == [(T1, {S1, T1}), (T2, {T2})]
    assert minimal_cores(AugState(fix_a, 1, e(1, 2, 3), e(4, 5))) == []


def test_minimal_cores_both_pulled_through_s1(fix_a):
    # e2 and e3 bought: any tight set holding a terminal must also hold s1
    cores = minimal_cores(AugState(fix_a, 0, frozenset(), e(2, 3)))
    assert cores == [(T1, {S1, T1}), (T2, {S1, T2})]


@pytest.mark.parametrize("seed", range(60))
def test_minimal_cores_match_enumeration(seed):
    state, _ = random_state(seed)
    family = enumerate_tight_sets(state)
    got = sorted(sorted(C) for _, C in minimal_cores(state))
    assert got == sorted(sorted(C) for C in family.minimal)


@pytest.mark.parametrize("seed", range(30))
def test_minimal_tight_set_is_smallest_tight_set(seed):
    state, _ = random_state(seed)
    family = enumerate_tight_sets(state)
    for t in state.instance.sorted_terminals():
        containing = [U for U in family.tight if t in U]
        C = minimal_tight_set(state, t)
        if not containing:
            assert C is None
        else:
            assert C in containing and all(C <= U for U in containing)
