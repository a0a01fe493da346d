"""Follow the outer loop level by level on a k=3 instance.

Each level raises every terminal's connectivity by one. The trace shows how
many minimal cores each augmentation started with, the LP value, and the
weight actually added.

Run with ``python3 demos/trace_levels.py``.
"""

# %%
from kdst import generate_instance, solve_kdst, terminal_connectivity

inst = generate_instance(n_steiner=3, n_terminals=5, density=0.6, max_weight=5, seed=3, k=3)
print(f"|V|={inst.n} |S|={len(inst.steiner)} |T|={len(inst.terminals)} |E|={inst.m} k={inst.k}")

# %%
sol = solve_kdst(inst, seed=3)
for rec in sol.trace:
    print(
        f"level {rec.level} iter {rec.iteration}: cores {rec.cores_before}->{rec.cores_after}, "
        f"LP {float(rec.lp_value):.2f}, cover {float(rec.cover_weight):.2f}, "
        f"added {rec.lifted_edges} ({float(rec.lifted_weight):.2f}), attempts {rec.attempts}"
    )

# %% Independent check of the final certificate.
for t in sorted(inst.terminals):
    assert terminal_connectivity(inst, sol.edges, t) >= inst.k
print(f"total weight {sol.weight} using {len(sol.edges)} of {inst.m} edges; certificate {sol.certificate}")
