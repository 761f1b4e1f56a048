"""Biseparability bound on mixtures: one that holds and one that fails.

Run: python demos/04_mixed_biseparable.py
"""

import numpy as np

from l1coh import c_l1, check_result3, classify
from l1coh.detectors import result3_bound, x_by_cut
from l1coh.zoo import ghz_w_mixture, mixed_example1

print("q|0><0| (x) Phi+_BC + (1-q)|1><1|_B (x) Phi-_AC")
for q in (0.0, 0.25, 0.5, 1.0):
    d = mixed_example1(q)
    r = check_result3(d)
    print(f"  q={q:.2f}  C={c_l1(d.state):.3f}  X by cut={np.round(x_by_cut(d), 3).tolist()}  {r.describe()}")

print("\nq|GHZ><GHZ| + (1-q)|W><W|")
for q in (0.0, 0.5, 1.0):
    d = ghz_w_mixture(q)
    r = check_result3(d)
    quoted = result3_bound(d.meta["quoted_weights"], [2 / 3] * 3)
    print(f"  q={q:.2f}  C={c_l1(d.state):.3f}  {r.describe()}  (rhs with X=2/3 on every cut: {quoted:.4f})")
    print(f"          verdict without decomposition: {classify(d.state).verdict}")
