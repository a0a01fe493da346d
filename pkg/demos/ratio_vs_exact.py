"""How far from optimal is the pipeline in practice?

Generates small random instances, solves each with the approximation pipeline,
the fractional LP bound and exact branch-and-bound, and prints a table.
The proven factor 2kR(ceil(log2|T|)+1) is printed alongside for contrast.

Run with ``python3 demos/ratio_vs_exact.py [count]``.
"""

# %%
import sys

import numpy as np

from kdst import AugState, augmentation_lp_lower_bound, exact_optimum, generate_instance, solve_kdst
from kdst.pipeline import approximation_factor

count = int(sys.argv[1]) if len(sys.argv) > 1 else 20

# %%
rows = []
for seed in range(count):
    rng = np.random.default_rng(seed)
    inst = generate_instance(int(rng.integers(0, 3)), int(rng.integers(1, 4)), 0.5, 10, seed, int(rng.integers(1, 3)))
    if inst.m > 20:
        continue
    sol = solve_kdst(inst, seed=seed)
    opt, _ = exact_optimum(inst)
    lp0 = augmentation_lp_lower_bound(AugState(inst, 0, frozenset()))
    rows.append((seed, inst.n, inst.m, inst.k, lp0, opt, sol.weight, approximation_factor(inst, sol.rounds)))

# %%
print(f"{'seed':>4} {'|V|':>3} {'|E|':>3} {'k':>2} {'LP(l=0)':>8} {'OPT':>6} {'ALG':>6} {'ratio':>6} {'bound':>6}")
for seed, n, m, k, lp0, opt, alg, bound in rows:
    ratio = float(alg / opt) if opt else 1.0
    print(f"{seed:>4} {n:>3} {m:>3} {k:>2} {float(lp0):>8.2f} {float(opt):>6.2f} {float(alg):>6.2f} {ratio:>6.3f} {bound:>6}")

ratios = [float(r[6] / r[5]) for r in rows if r[5]]
print(f"\n{len(rows)} instances, mean ratio {np.mean(ratios):.3f}, worst {max(ratios):.3f}")
