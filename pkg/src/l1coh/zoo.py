"""Named example states and seeded random generators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .detectors import Component, Cut, Decomposition
from .errors import NormalizationViolated, WeightOutOfRange
from .states import (
    TOL_HERMITIAN,
    QuantumState,
    embed,
    ket,
    kron,
    make_pure,
    make_state,
)

QUBITS3 = (2, 2, 2)


def _check_weight(q: float) -> float:
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise WeightOutOfRange(f"mixing weight q={q} outside [0, 1]")
    return q


def bisep_pure_example1(l0: float, l1: float, l2: float) -> QuantumState:
    """``l0|101> + l1|110> + l2|111>`` with real coefficients, sum of squares 1."""
    norm2 = l0 * l0 + l1 * l1 + l2 * l2
    if abs(norm2 - 1.0) > TOL_HERMITIAN:
        raise NormalizationViolated(f"l0^2 + l1^2 + l2^2 = {norm2!r}, expected 1")
    return make_pure(l0 * ket("101") + l1 * ket("110") + l2 * ket("111"), QUBITS3)


def w_state() -> QuantumState:
    return make_pure((ket("100") + ket("010") + ket("001")) / np.sqrt(3), QUBITS3)


def ghz_state(theta: float = np.pi / 4, delta: float = 0.0) -> QuantumState:
    """``cos(theta)|000> + exp(i delta) sin(theta)|111>``."""
    return make_pure(np.cos(theta) * ket("000") + np.exp(1j * delta) * np.sin(theta) * ket("111"), QUBITS3)


def example4_state(a0: float, a1: float) -> QuantumState:
    """``a0|000> + a1|100> + |111>/sqrt(2)`` with ``a0, a1 >= 0`` and ``a0^2 + a1^2 = 1/2``."""
    if a0 < 0 or a1 < 0:
        raise NormalizationViolated(f"a0, a1 must be nonnegative, got {a0}, {a1}")
    if abs(a0 * a0 + a1 * a1 - 0.5) > TOL_HERMITIAN:
        raise NormalizationViolated(f"a0^2 + a1^2 = {a0 * a0 + a1 * a1!r}, expected 1/2")
    return make_pure(a0 * ket("000") + a1 * ket("100") + ket("111") / np.sqrt(2), QUBITS3)


def example4_a1(a0: float) -> float:
    """``sqrt(1/2 - a0**2)``, snapped to 0 when ``a0**2`` is within rounding of 1/2.

    The snap makes the endpoint ``a0 = 1/sqrt(2)`` give the GHZ state exactly.
    """
    rem = 0.5 - float(a0) ** 2
    return float(np.sqrt(rem)) if rem > 1e-15 else 0.0


def example4_from_a0(a0: float) -> QuantumState:
    """:func:`example4_state` with ``a1`` fixed by normalisation."""
    return example4_state(float(a0), example4_a1(a0))


def bell_phi(sign: int = +1) -> QuantumState:
    """``(|00> + sign|11>)/sqrt(2)``."""
    return make_pure((ket("00") + sign * ket("11")) / np.sqrt(2), (2, 2))


def basis_state(label: str, dims=None) -> QuantumState:
    dims = dims if dims is not None else (2,) * len(label)
    return make_pure(ket(label, dims), dims)


def mixed_example1(q: float) -> Decomposition:
    """``q |0><0|_A (x) Phi+_BC + (1-q) |1><1|_B (x) Phi-_AC``, cuts A-BC and B-AC."""
    q = _check_weight(q)
    t1 = embed(basis_state("0"), bell_phi(+1), 0)
    t2 = embed(basis_state("1"), bell_phi(-1), 1)
    return Decomposition(
        (Component(q, t1, Cut(0, 3)), Component(1 - q, t2, Cut(1, 3))),
        {"name": "mixed biseparable example", "quoted_weights": (q, 1 - q, 0.0)},
    )


def ghz_w_mixture(q: float) -> Decomposition:
    """``q |GHZ><GHZ| + (1-q) |W><W|``.

    Neither term is a product across any cut. The cut tags (A-BC on GHZ,
    B-AC on W) mirror the weight assignment ``p = (q, 1-q, 0)`` quoted for
    this mixture and are kept in ``meta``.
    """
    q = _check_weight(q)
    return Decomposition(
        (Component(q, ghz_state(np.pi / 4, 0.0), Cut(0, 3)), Component(1 - q, w_state(), Cut(1, 3))),
        {"name": "GHZ-W mixture", "quoted_weights": (q, 1 - q, 0.0), "terms_are_products": False},
    )


@dataclass(frozen=True)
class AppendixStates:
    four_qubit_bisep: Decomposition
    four_qubit_sep: Decomposition
    qutrit_bisep: Decomposition


def appendix_states() -> AppendixStates:
    """Four-qubit biseparable and separable mixtures, and a three-qutrit biseparable pure state."""
    phi_plus = make_pure((ket("100") + ket("010")) / np.sqrt(2), (2, 2, 2))
    phi_minus = make_pure((ket("100") - ket("010")) / np.sqrt(2), (2, 2, 2))
    rho1 = Decomposition(
        (
            Component(0.5, embed(basis_state("0"), phi_plus, 0), Cut(0, 4)),
            Component(0.5, embed(basis_state("1"), phi_minus, 1), Cut(1, 4)),
        ),
        {"name": "four-qubit biseparable mixture"},
    )
    rho2 = Decomposition(
        tuple(
            Component.product(0.25, [basis_state(ch) for ch in label])
            for label in ("0000", "0011", "1000", "1111")
        ),
        {"name": "four-qubit diagonal separable mixture"},
    )
    dims3 = (3, 3)
    bc = make_pure((ket("12", dims3) + ket("01", dims3) + ket("20", dims3)) / np.sqrt(3), dims3)
    qutrit = Decomposition.single(kron(basis_state("0", (3,)), bc), Cut(0, 3), name="three-qutrit biseparable state")
    return AppendixStates(rho1, rho2, qutrit)


# random generators ---------------------------------------------------------


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_pure(dims, seed=None) -> QuantumState:
    """Haar-random pure state on ``dims`` (normalised complex Gaussian vector)."""
    rng = _rng(seed)
    dims = tuple(dims)
    n = int(np.prod(dims))
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return make_pure(v / np.linalg.norm(v), dims)


def random_mixed(dims, seed=None, rank: int | None = None) -> QuantumState:
    """Random mixture of ``rank`` random pure states with Dirichlet weights."""
    rng = _rng(seed)
    dims = tuple(dims)
    rank = rank if rank is not None else int(rng.integers(2, 5))
    w = rng.dirichlet(np.ones(rank))
    m = sum(p * random_pure(dims, rng).matrix for p in w)
    return make_state(m, dims, purity_hint="mixed")


def random_state(dims, seed=None) -> QuantumState:
    """Pure or mixed with equal probability."""
    rng = _rng(seed)
    return random_pure(dims, rng) if rng.random() < 0.5 else random_mixed(dims, rng)


def random_product(dims, seed=None) -> QuantumState:
    """Tensor product of independent random pure single-party states."""
    rng = _rng(seed)
    factors = [random_pure((d,), rng) for d in dims]
    out = factors[0]
    for f in factors[1:]:
        out = kron(out, f)
    return out


def random_cut_product(dims, cut: int, seed=None, mixed_rest: bool = False) -> QuantumState:
    """Random pure single-party state at ``cut`` times a random state of the rest."""
    rng = _rng(seed)
    dims = tuple(dims)
    rest_dims = dims[:cut] + dims[cut + 1 :]
    rest = random_mixed(rest_dims, rng) if mixed_rest else random_pure(rest_dims, rng)
    return embed(random_pure((dims[cut],), rng), rest, cut)


def random_bisep_ensemble(dims, k: int, seed=None) -> Decomposition:
    """``k`` random products, each across a uniformly chosen one-vs-rest cut."""
    rng = _rng(seed)
    dims = tuple(dims)
    n = len(dims)
    w = rng.dirichlet(np.ones(k))
    comps = []
    for p in w:
        cut = int(rng.integers(n))
        comps.append(Component(float(p), random_cut_product(dims, cut, rng, mixed_rest=bool(rng.integers(2))), Cut(cut, n)))
    return _renormalised(comps)


def random_sep_ensemble(dims, k: int, seed=None) -> Decomposition:
    """``k`` random full products with their single-party factors attached."""
    rng = _rng(seed)
    dims = tuple(dims)
    w = rng.dirichlet(np.ones(k))
    comps = [Component.product(float(p), [random_pure((d,), rng) for d in dims]) for p in w]
    return _renormalised(comps)


def _renormalised(comps: list[Component]) -> Decomposition:
    # Dirichlet draws sum to 1 only up to rounding
    total = sum(c.weight for c in comps)
    return Decomposition(tuple(Component(c.weight / total, c.state, c.cut, c.factors) for c in comps))
