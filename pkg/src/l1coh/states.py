"""Dense density matrices over multi-party Hilbert spaces.

Subsystem 0 is the leftmost symbol of a ket string and the slowest-varying
index of the computational basis, so ``|101>`` on dims ``(2, 2, 2)`` is basis
index 5.

All functions return new :class:`QuantumState` objects; the wrapped arrays
are read-only so states can be shared freely.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimsMismatch,
    EmptyKeepSet,
    IndexOutOfRange,
    InvalidState,
    LengthMismatch,
    NotNormalized,
    WeightSumInvalid,
)

TOL_HERMITIAN = 1e-9
TOL_PSD = 1e-8
MAX_SIDE = 256

PURE, MIXED, UNKNOWN = "pure", "mixed", "unknown"


def _check_dims(dims: Iterable[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise DimsMismatch("dims must name at least one subsystem")
    if any(d < 2 for d in dims):
        raise DimsMismatch(f"every local dimension must be >= 2, got {dims}")
    return dims


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Density matrix tagged with its local subsystem dimensions.

    Constructing one directly only checks shapes. Use :func:`make_state`
    (or the other constructors in this module) to get Hermiticity, trace
    and positivity validation.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]
    purity_hint: str = UNKNOWN

    def __post_init__(self):
        dims = _check_dims(self.dims)
        m = np.array(self.matrix, dtype=complex, copy=True)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimsMismatch(f"density matrix must be square, got shape {m.shape}")
        side = int(np.prod(dims))
        if m.shape[0] != side:
            raise DimsMismatch(f"matrix side {m.shape[0]} does not match dims {dims} (product {side})")
        if side > MAX_SIDE:
            raise DimsMismatch(f"matrix side {side} exceeds supported maximum {MAX_SIDE}")
        if self.purity_hint not in (PURE, MIXED, UNKNOWN):
            raise ValueError(f"unknown purity hint {self.purity_hint!r}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def side(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def __repr__(self):
        return f"QuantumState(dims={self.dims}, purity_hint={self.purity_hint!r})"


@dataclass(frozen=True)
class ValidationReport:
    hermiticity_deviation: float
    trace_deviation: float
    min_eigenvalue: float
    tol: float
    tol_psd: float

    @property
    def hermitian(self) -> bool:
        return self.hermiticity_deviation <= self.tol

    @property
    def unit_trace(self) -> bool:
        return self.trace_deviation <= self.tol

    @property
    def positive(self) -> bool:
        return self.min_eigenvalue >= -self.tol_psd

    @property
    def ok(self) -> bool:
        return self.hermitian and self.unit_trace and self.positive

    def failures(self) -> list[str]:
        out = []
        if not self.hermitian:
            out.append(f"not Hermitian (max deviation {self.hermiticity_deviation:.3g})")
        if not self.unit_trace:
            out.append(f"trace deviates from 1 by {self.trace_deviation:.3g}")
        if not self.positive:
            out.append(f"negative eigenvalue {self.min_eigenvalue:.3g}")
        return out


def validate(s: QuantumState, tol: float = TOL_HERMITIAN, tol_psd: float = TOL_PSD) -> ValidationReport:
    """Measure how far ``s`` is from being a density matrix.

    Never raises; inspect :attr:`ValidationReport.ok` or
    :meth:`ValidationReport.failures`.
    """
    m = s.matrix
    herm = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    tr = float(abs(np.trace(m) - 1.0))
    # eigvalsh only reads one triangle, so symmetrise first
    min_eig = float(np.linalg.eigvalsh((m + m.conj().T) / 2).min())
    return ValidationReport(herm, tr, min_eig, tol, tol_psd)


def make_state(
    matrix,
    dims: Sequence[int],
    *,
    purity_hint: str = UNKNOWN,
    check: bool = True,
    check_psd: bool = True,
    tol: float = TOL_HERMITIAN,
    tol_psd: float = TOL_PSD,
) -> QuantumState:
    """Wrap ``matrix`` as a state on ``dims``, validating it unless ``check=False``.

    Raises
    ------
    InvalidState
        If Hermiticity or unit trace fail at ``tol`` or (with ``check_psd``)
        the smallest eigenvalue is below ``-tol_psd``.
    """
    s = QuantumState(matrix, tuple(dims), purity_hint)
    if check:
        rep = validate(s, tol, tol_psd)
        bad = [f for f in rep.failures() if check_psd or not f.startswith("negative")]
        if bad:
            raise InvalidState("; ".join(bad))
    return s


def make_pure(amplitudes, dims: Sequence[int], tol: float = TOL_HERMITIAN) -> QuantumState:
    """Projector ``|psi><psi|`` for the amplitude vector ``psi``.

    Examples
    --------
    >>> make_pure([1, 0], [2]).matrix.real
    array([[1., 0.],
           [0., 0.]])
    """
    dims = _check_dims(dims)
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    side = int(np.prod(dims))
    if psi.size != side:
        raise LengthMismatch(f"{psi.size} amplitudes given for dims {dims} (need {side})")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > tol:
        raise NotNormalized(f"state vector norm is {norm!r}, expected 1")
    psi = psi / norm
    return QuantumState(np.outer(psi, psi.conj()), dims, PURE)


def basis_index(digits: Sequence[int], dims: Sequence[int]) -> int:
    """Computational-basis index of the ket labelled by ``digits``."""
    if len(digits) != len(dims):
        raise LengthMismatch(f"{len(digits)} digits for {len(dims)} subsystems")
    idx = 0
    for digit, d in zip(digits, dims):
        if not 0 <= digit < d:
            raise IndexOutOfRange(f"basis digit {digit} out of range for local dimension {d}")
        idx = idx * d + digit
    return idx


def ket(label: str | Sequence[int], dims: Sequence[int] | None = None) -> np.ndarray:
    """Basis vector for a label such as ``"101"``; qubits assumed when ``dims`` is None."""
    digits = [int(c) for c in label]
    dims = tuple(dims) if dims is not None else (2,) * len(digits)
    v = np.zeros(int(np.prod(dims)), dtype=complex)
    v[basis_index(digits, dims)] = 1.0
    return v


def kron(a: QuantumState, b: QuantumState) -> QuantumState:
    """Tensor product; ``a`` occupies the leading subsystems."""
    hint = PURE if a.purity_hint == PURE and b.purity_hint == PURE else UNKNOWN
    return QuantumState(np.kron(a.matrix, b.matrix), a.dims + b.dims, hint)


def kron_all(states: Sequence[QuantumState]) -> QuantumState:
    if not states:
        raise DimsMismatch("kron_all needs at least one state")
    out = states[0]
    for s in states[1:]:
        out = kron(out, s)
    return out


def _normalise_indices(indices: Iterable[int], n: int) -> tuple[int, ...]:
    out = []
    for i in indices:
        i = int(i)
        if not 0 <= i < n:
            raise IndexOutOfRange(f"subsystem index {i} out of range for {n} subsystems")
        out.append(i)
    return tuple(out)


def partial_trace(s: QuantumState, keep: Iterable[int]) -> QuantumState:
    """Reduced state on the subsystems in ``keep`` (returned in ascending order).

    Raises
    ------
    EmptyKeepSet
        If ``keep`` is empty.
    IndexOutOfRange
        If an index does not name a subsystem.
    """
    n = s.n_parties
    keep = sorted(set(_normalise_indices(keep, n)))
    if not keep:
        raise EmptyKeepSet("partial trace must keep at least one subsystem")
    if len(keep) == n:
        return s
    letters = string.ascii_letters
    rows = list(letters[:n])
    cols = list(letters[n : 2 * n])
    for i in range(n):
        if i not in keep:
            cols[i] = rows[i]
    out = "".join(rows[i] for i in keep) + "".join(cols[i] for i in keep)
    t = s.matrix.reshape(s.dims + s.dims)
    r = np.einsum("".join(rows) + "".join(cols) + "->" + out, t)
    kept_dims = tuple(s.dims[i] for i in keep)
    side = int(np.prod(kept_dims))
    return QuantumState(r.reshape(side, side), kept_dims, UNKNOWN)


def reduced(s: QuantumState, keep: Iterable[int]) -> QuantumState:
    """Alias of :func:`partial_trace` reading as "the reduced state on ``keep``"."""
    return partial_trace(s, keep)


def permute(s: QuantumState, order: Sequence[int]) -> QuantumState:
    """Reorder subsystems: subsystem ``order[k]`` of ``s`` becomes subsystem ``k``."""
    n = s.n_parties
    order = _normalise_indices(order, n)
    if sorted(order) != list(range(n)):
        raise IndexOutOfRange(f"{order} is not a permutation of {n} subsystems")
    t = s.matrix.reshape(s.dims + s.dims)
    t = t.transpose(list(order) + [n + i for i in order])
    dims = tuple(s.dims[i] for i in order)
    return QuantumState(t.reshape(s.side, s.side), dims, s.purity_hint)


def embed(solo: QuantumState, rest: QuantumState, position: int) -> QuantumState:
    """Place a one-party ``solo`` state at ``position`` next to ``rest``.

    ``rest`` keeps the relative order of the remaining subsystems, e.g.
    ``embed(rho_B, rho_AC, 1)`` is ``rho_B (x) rho_AC`` written in A, B, C order.
    """
    if solo.n_parties != 1:
        raise DimsMismatch("embed expects a single-party solo state")
    n = rest.n_parties + 1
    if not 0 <= position < n:
        raise IndexOutOfRange(f"position {position} out of range for {n} subsystems")
    prod = kron(solo, rest)
    # prod is ordered (position, others...)
    current = [position] + [i for i in range(n) if i != position]
    order = [current.index(k) for k in range(n)]
    return permute(prod, order)


def mix(components: Sequence[tuple[float, QuantumState]], tol: float = TOL_HERMITIAN) -> QuantumState:
    """Convex combination ``sum_i p_i rho_i``.

    Examples
    --------
    >>> s = mix([(0.5, make_pure([1, 0], [2])), (0.5, make_pure([0, 1], [2]))])
    >>> s.matrix.real
    array([[0.5, 0. ],
           [0. , 0.5]])
    """
    if not components:
        raise WeightSumInvalid("mixture has no components")
    weights = np.array([float(p) for p, _ in components])
    if np.any(weights < -tol) or np.any(weights > 1 + tol):
        raise WeightSumInvalid(f"weights must lie in [0, 1], got {weights.tolist()}")
    if abs(weights.sum() - 1.0) > tol:
        raise WeightSumInvalid(f"weights sum to {weights.sum()!r}, expected 1")
    dims = components[0][1].dims
    total = np.zeros_like(components[0][1].matrix)
    for p, s in components:
        if s.dims != dims:
            raise DimsMismatch(f"component dims {s.dims} differ from {dims}")
        total = total + float(p) * s.matrix
    return QuantumState(total, dims, MIXED)
