"""Detect and classify multipartite entanglement with the l1 norm of coherence."""

from .coherence import am_gm_bound, c_l1, product_law, product_law_n
from .detectors import (
    ClassificationReport,
    Component,
    Cut,
    Decomposition,
    InequalityRecord,
    check_full_separable_equality,
    check_product_equality,
    check_result2,
    check_result3,
    check_result4,
    classify,
)
from .states import QuantumState, kron, make_pure, make_state, mix, partial_trace, validate

__all__ = [
    "ClassificationReport",
    "Component",
    "Cut",
    "Decomposition",
    "InequalityRecord",
    "QuantumState",
    "am_gm_bound",
    "c_l1",
    "check_full_separable_equality",
    "check_product_equality",
    "check_result2",
    "check_result3",
    "check_result4",
    "classify",
    "kron",
    "make_pure",
    "make_state",
    "mix",
    "partial_trace",
    "product_law",
    "product_law_n",
    "validate",
]
