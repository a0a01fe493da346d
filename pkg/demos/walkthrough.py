"""One augmentation step on a four-vertex instance, traced by hand.

Run with ``python3 demos/walkthrough.py``.
"""

# %%
from fractions import Fraction

from kdst import (
    AugState,
    build_core_graph,
    enumerate_strict_cores,
    lift_cover,
    minimal_cores,
    parse_instance,
    round_cover,
    solve_strict_core_lp,
)
from kdst.rounding import RoundingConfig

TEXT = """
kdst 1
nodes 4
root 0
terminals 2 3
edge 0 1 1   # r  -> s1
edge 1 2 1   # s1 -> t1
edge 1 3 1   # s1 -> t2
edge 0 2 3   # r  -> t1
edge 0 3 3   # r  -> t2
k 1
"""
inst = parse_instance(TEXT)
print(f"{inst.n} vertices, {inst.m} edges, terminals {sorted(inst.terminals)}")

# %% Nothing is bought yet, so every cut set is tight at level 0.
state = AugState(inst, level=0, base=frozenset())
cores = minimal_cores(state)
print("minimal cores:", [(t, sorted(C)) for t, C in cores])
print("strict cores:", [sorted(X) for X in enumerate_strict_cores(state)])

# %% The core graph: shortest paths over original edges plus zero-weight shortcuts.
cg = build_core_graph(state, cores)
for (u, v), w in cg.weights.items():
    if w:
        print(f"  pair {u}->{v}  w1={w}  path={cg.path((u, v))}")

# %% Cutting planes find the LP optimum without listing every strict core.
x = solve_strict_core_lp(cg)
print("LP value:", x.objective)
print("LP support:", {p: str(v) for p, v in x.values.items()})
print("constraints generated:", [sorted(c) for c in x.constraints])

# %% Round, then map core-graph pairs back to original edges.
res = round_cover(x, cg, RoundingConfig.for_instance(cg, seed=1))
F = lift_cover(cg, res.pairs)
print(f"rounded cover {sorted(res.pairs)} (w1 {res.weight}, attempt {res.attempts})")
print(f"lifted edges {sorted(F)} weight {inst.weight(F)}")
assert inst.weight(F) <= res.weight <= 2 * RoundingConfig.for_instance(cg).rounds * x.objective

# %% With e2 already in the partial cover, t1's smallest tight set grows to include s1.
state2 = state.with_partial({1})
print("cores with e2 bought:", [(t, sorted(C)) for t, C in minimal_cores(state2)])
print("strict cores:", [sorted(X) for X in enumerate_strict_cores(state2)])
print("w1 of pair r->t1 now", build_core_graph(state2, minimal_cores(state2)).weights[(0, 2)], "vs", Fraction(2))
