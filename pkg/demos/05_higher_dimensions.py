"""Four qubits and three qutrits use the same checks.

Run: python demos/05_higher_dimensions.py
"""

from l1coh import c_l1, check_result3, check_result4
from l1coh.detectors import x_by_cut
from l1coh.oracle import verify_detector_soundness
from l1coh.qstate import format_decomposition
from l1coh.zoo import appendix_states

app = appendix_states()

d = app.four_qubit_bisep
print(f"four-qubit biseparable: C={c_l1(d.state):.3f} X={x_by_cut(d)}")
print("  " + check_result3(d).describe())

d = app.four_qubit_sep
print(f"four-qubit separable:   C={c_l1(d.state):.3f}")
print("  " + check_result4(d).describe())

d = app.qutrit_bisep
print(f"three qutrits:          C={c_l1(d.state):.3f}")
print("  " + check_result3(d).describe())
print("\nthe qutrit decomposition in qstate v1 form:\n")
print(format_decomposition(d))

print(verify_detector_soundness(200, dims=(3, 3, 3), seed=1).summary())
