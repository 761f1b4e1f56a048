"""l1 norm of coherence and its tensor-product composition law."""

from __future__ import annotations

from functools import reduce
from typing import Iterable

import numpy as np

from .states import QuantumState


def c_l1(s: QuantumState | np.ndarray) -> float:
    """Sum of the moduli of all off-diagonal entries, in the computational basis.

    Examples
    --------
    >>> from l1coh.zoo import w_state
    >>> round(c_l1(w_state()), 12)
    2.0
    """
    m = s.matrix if isinstance(s, QuantumState) else np.asarray(s)
    off = m - np.diag(np.diag(m))
    return float(np.abs(off).sum())  # np.abs is hypot-based for complex input


def _nonneg(*values: float) -> None:
    for v in values:
        if v < 0:
            raise ValueError(f"coherence values are nonnegative, got {v}")


def product_law(c_a: float, c_b: float) -> float:
    """Coherence of ``rho (x) sigma`` from the coherences of the two factors."""
    _nonneg(c_a, c_b)
    return c_a + c_b + c_a * c_b


def product_law_n(values: Iterable[float]) -> float:
    """Fold :func:`product_law` over several factors.

    Equal to ``prod(1 + c_i) - 1``; for three factors it is the sum of the
    singles, the pairwise products and the triple product.
    """
    values = [float(v) for v in values]
    _nonneg(*values)
    return reduce(product_law, values, 0.0)


def am_gm_bound(c_x: float, c_y: float) -> float:
    """Upper bound ``(c_x + c_y)**2 / 4`` on the cross term ``c_x * c_y``."""
    _nonneg(c_x, c_y)
    return (c_x + c_y) ** 2 / 4
