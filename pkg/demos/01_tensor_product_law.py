"""Coherence of a tensor product follows from the coherences of its factors.

Run: python demos/01_tensor_product_law.py
"""

import numpy as np

from l1coh import c_l1, kron, product_law
from l1coh.coherence import am_gm_bound
from l1coh.zoo import random_state

rng = np.random.default_rng(0)

print("dims a  dims b   C(a)      C(b)      C(a(x)b)   law        |diff|")
for da, db in [((2,), (2, 2)), ((2, 2), (2, 2)), ((3,), (3, 3))]:
    a, b = random_state(da, rng), random_state(db, rng)
    ca, cb, cab = c_l1(a), c_l1(b), c_l1(kron(a, b))
    law = product_law(ca, cb)
    print(f"{str(da):7} {str(db):8} {ca:.6f}  {cb:.6f}  {cab:.6f}  {law:.6f}  {abs(cab - law):.1e}")

# The cross term C(a)C(b) never exceeds ((C(a) + C(b)) / 2)^2.
ca, cb = 0.4, 1.3
print(f"\ncross term {ca * cb:.4f} <= AM-GM bound {am_gm_bound(ca, cb):.4f}")
