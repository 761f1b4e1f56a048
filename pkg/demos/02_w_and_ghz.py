"""W and GHZ states fail every product test and every single-cut bound.

Run: python demos/02_w_and_ghz.py
"""

import numpy as np

from l1coh import c_l1, classify
from l1coh.states import partial_trace
from l1coh.zoo import ghz_state, w_state

w = w_state()
print(f"C(W) = {c_l1(w):.12f}")
print("Tr_BC W =\n", np.real(partial_trace(w, [0]).matrix).round(6))

for name, s in [("W", w), ("GHZ(pi/4)", ghz_state()), ("GHZ(pi/6, pi/3)", ghz_state(np.pi / 6, np.pi / 3))]:
    rep = classify(s)
    print(f"\n--- {name} ---")
    for line in rep.lines():
        print(line)
