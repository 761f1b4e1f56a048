"""Sweep a0|000> + a1|100> + |111>/sqrt(2) against the A-BC single-cut bound.

Writes figure1.csv next to this script and reports where the bound starts
failing. Pass --plot to draw it (needs matplotlib, not a package dependency).

Run: python demos/03_figure1_sweep.py [--plot]
"""

import sys
from pathlib import Path

from l1coh.reproduce import figure1_crossover, figure1_csv, figure1_row, figure1_rows

rows = figure1_rows(141)
out = Path(__file__).with_name("figure1.csv")
out.write_text(figure1_csv(rows))
print(f"wrote {len(rows)} rows to {out}")

mid = figure1_row(0.5)
print(f"a0 = 0.5: coherence {mid.coherence:.9f}, bound {mid.upper_bound:.9f}, violated {mid.violated}")
cross = figure1_crossover()
print(f"bound holds for a0 < {cross:.12f} and fails beyond it")

if "--plot" in sys.argv:
    import matplotlib.pyplot as plt

    a0 = [r.a0 for r in rows]
    plt.plot(a0, [r.coherence for r in rows], label="C_l1")
    plt.plot(a0, [r.upper_bound for r in rows], label="U (A-BC)")
    plt.axvline(cross, ls=":", c="gray")
    plt.xlabel("a0")
    plt.legend()
    plt.show()
