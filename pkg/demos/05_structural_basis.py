"""Dimensionality reduction without a response variable.

The concentration functional (sum of squared cell probabilities of a
composite) decreases as variables join a composite and bottoms out once
the chosen set determines everything else.  Growing a composite along
the steepest concentration drop, then pruning, isolates a structural
basis: here two variables out of six, where the other four are
relabelings and functions of the basis.

Run:  python demos/05_structural_basis.py
"""

import numpy as np

from catassoc import Dataset, composite, ep, minimal_basis, structural_basis, verify_basis
from catassoc.report import fmt4

rng = np.random.default_rng(17)
combos = [(i, j) for i in range(3) for j in range(4)]
reps = rng.integers(1, 6, len(combos))
v1 = np.repeat([c[0] for c in combos], reps)
v2 = np.repeat([c[1] for c in combos], reps)
relabel1 = np.array([2, 0, 1])
relabel2 = np.array([3, 2, 1, 0])
ds = Dataset.from_label_columns({
    "V1": [str(v) for v in v1],
    "V2": [str(v) for v in v2],
    "V3": [str(v) for v in (v1 + v2) % 3],   # lossy joint function
    "V4": [str(relabel1[v]) for v in v1],    # relabeling of V1
    "V5": [str(relabel2[v]) for v in v2],    # relabeling of V2
    "V6": [str(min(v, 1)) for v in v1],      # coarsening of V1
})
print(f"dataset: {ds.n_records} records, 6 variables, "
      f"V3..V6 derived from V1 and V2\n")

print("concentration of each single variable (smaller = more spread out):")
for nm in ds.names:
    print(f"  Ep({nm}) = {fmt4(ep(ds, [nm]).value)}")

trace = structural_basis(ds)
print("\nforward picks (concentration after each addition):")
for step in trace.forward_steps:
    print(f"  + {step.variable}: Ep = {fmt4(step.value)}")
print(f"pruned: {list(trace.pruned) or 'none'}")
print(f"basis: {list(trace.basis)}")

report = verify_basis(ds, trace.basis)
print(f"\nverification: determined={all(report.determined.values())}, "
      f"subsets={report.subsets_ok}, zero-one conditionals="
      f"{report.conditionals_01}, minimal={report.minimal}")

cells = composite(ds, list(trace.basis)).size
print(f"basis composite has {cells} observed cells; every variable is a "
      "deterministic function of the cell")

mb = minimal_basis(ds)
print(f"\nexhaustive smallest basis: {list(mb)} "
      f"({composite(ds, list(mb)).size} cells -- same cardinality, as any "
      "two bases must have)")
