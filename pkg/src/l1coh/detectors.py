"""Coherence-based product, separability and biseparability tests.

Every check returns an :class:`InequalityRecord`. A violated record is
evidence *against* the structure being tested (product form across a cut,
biseparability, full separability); a satisfied record proves nothing.
:func:`classify` aggregates the records into a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .coherence import c_l1, product_law, product_law_n
from .errors import (
    DecompositionMismatch,
    DimsMismatch,
    FactorDimMismatch,
    MixedCuts,
    WeightOutOfRange,
    WeightSumInvalid,
)
from .states import TOL_HERMITIAN, QuantumState, kron_all, mix, partial_trace

TOL_DETECT = 1e-9

RESULT2 = "result2"
RESULT3 = "result3"
RESULT4 = "result4"
PRODUCT_EQ = "corollary2_eq"
FULL_PRODUCT_EQ = "corollary3_eq"

EQUALITIES = frozenset({PRODUCT_EQ, FULL_PRODUCT_EQ})
SEPARABILITY_CHECKS = frozenset({FULL_PRODUCT_EQ, RESULT4})
BISEPARABILITY_CHECKS = frozenset({PRODUCT_EQ, RESULT2, RESULT3})

CONSISTENT_WITH_SEPARABLE = "consistent_with_separable"
CONSISTENT_WITH_BISEPARABLE = "consistent_with_biseparable"
NOT_SEPARABLE = "not_separable"
NOT_BISEPARABLE = "not_biseparable"
GENUINE_CANDIDATE = "genuine_entangled_candidate"

DECOMPOSITION_GIVEN = "decomposition_given"
HEURISTIC = "reduced_state_heuristic"

PARTY_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


@dataclass(frozen=True)
class Cut:
    """One-vs-rest bipartition: subsystem ``solo`` against all the others."""

    solo: int
    n_parties: int

    def __post_init__(self):
        if not 0 <= self.solo < self.n_parties:
            raise ValueError(f"solo index {self.solo} out of range for {self.n_parties} parties")

    @property
    def rest(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n_parties) if i != self.solo)

    @property
    def label(self) -> str:
        return PARTY_NAMES[self.solo] + "-" + "".join(PARTY_NAMES[i] for i in self.rest)

    def __str__(self):
        return self.label


def all_cuts(n_parties: int) -> list[Cut]:
    return [Cut(i, n_parties) for i in range(n_parties)]


def _as_cut(cut: Cut | int | None, n: int) -> Cut | None:
    if cut is None or isinstance(cut, Cut):
        return cut
    return Cut(int(cut), n)


@dataclass(frozen=True)
class Component:
    """Weighted term of a decomposition.

    ``cut`` names the bipartition the term is claimed to be a product across
    (needed by the biseparability checks). ``factors`` lists one single-party
    state per subsystem (needed by the full-separability check); it is not
    required to reproduce ``state`` exactly, which is what lets the
    reduced-state heuristic pair a state with its own marginals.
    """

    weight: float
    state: QuantumState
    cut: Cut | None = None
    factors: tuple[QuantumState, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "cut", _as_cut(self.cut, self.state.n_parties))
        if self.cut is not None and self.cut.n_parties != self.state.n_parties:
            raise DimsMismatch(f"cut {self.cut} does not fit a {self.state.n_parties}-party state")
        if self.factors is not None:
            factors = tuple(self.factors)
            dims = tuple(d for f in factors for d in f.dims)
            if any(f.n_parties != 1 for f in factors) or dims != self.state.dims:
                raise FactorDimMismatch(
                    f"factor dims {[f.dims for f in factors]} do not match state dims {self.state.dims}"
                )
            object.__setattr__(self, "factors", factors)

    @classmethod
    def product(cls, weight: float, factors: Sequence[QuantumState], cut: Cut | int | None = None) -> "Component":
        """Term whose state is the tensor product of ``factors``."""
        factors = tuple(factors)
        return cls(weight, kron_all(factors), cut, factors)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Convex decomposition ``sum_i p_i sigma_i`` with per-term structure tags.

    ``meta`` carries free-form annotations (for example weights quoted for a
    mixture that is not actually built from biseparable terms).
    """

    components: tuple[Component, ...]
    meta: dict = field(default_factory=dict)
    tol: float = TOL_HERMITIAN

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise WeightSumInvalid("decomposition has no components")
        object.__setattr__(self, "components", comps)
        for c in comps:
            if not -self.tol <= c.weight <= 1 + self.tol:
                raise WeightOutOfRange(f"weight {c.weight} outside [0, 1]")
            if c.state.dims != comps[0].state.dims:
                raise DimsMismatch(f"component dims {c.state.dims} differ from {comps[0].state.dims}")
        total = sum(c.weight for c in comps)
        if abs(total - 1.0) > self.tol:
            raise WeightSumInvalid(f"weights sum to {total!r}, expected 1")

    @property
    def dims(self) -> tuple[int, ...]:
        return self.components[0].state.dims

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    @property
    def weights(self) -> list[float]:
        return [c.weight for c in self.components]

    @cached_property
    def state(self) -> QuantumState:
        """The assembled mixture."""
        return mix([(c.weight, c.state) for c in self.components], tol=self.tol)

    def cuts(self) -> set[Cut | None]:
        return {c.cut for c in self.components}

    @classmethod
    def single(cls, state: QuantumState, cut: Cut | int | None = None, factors=None, **meta) -> "Decomposition":
        return cls((Component(1.0, state, cut, factors),), meta)


@dataclass(frozen=True)
class InequalityRecord:
    """One evaluated criterion. ``slack = rhs - lhs``; negative slack means violation."""

    name: str
    lhs: float
    rhs: float
    x_terms: tuple[float, ...]
    satisfied: bool
    cut: Cut | None = None
    from_decomposition: bool = False

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def is_equality(self) -> bool:
        return self.name in EQUALITIES

    @property
    def status(self) -> str:
        return "SAT" if self.satisfied else "VIOLATED"

    def describe(self) -> str:
        where = f"[{self.cut.label}]" if self.cut is not None else ""
        return (
            f"{self.name.upper()}{where} lhs={self.lhs:.12f} rhs={self.rhs:.12f} "
            f"slack={self.slack:.12f} {self.status}"
        )


def _record(name, lhs, rhs, x_terms, tol, cut=None, from_decomposition=False) -> InequalityRecord:
    if name in EQUALITIES:
        ok = abs(lhs - rhs) <= tol
    else:
        ok = lhs <= rhs + tol
    return InequalityRecord(name, float(lhs), float(rhs), tuple(float(x) for x in x_terms), bool(ok), cut, from_decomposition)


def split_coherences(s: QuantumState, cut: Cut | int) -> tuple[float, float]:
    """Coherences of the two marginals across ``cut``: ``(C(solo), C(rest))``."""
    cut = _as_cut(cut, s.n_parties)
    return c_l1(partial_trace(s, [cut.solo])), c_l1(partial_trace(s, cut.rest))


def x_term(s: QuantumState, cut: Cut | int) -> float:
    """``C(rho_solo) + C(rho_rest)`` for the marginals of ``s`` across ``cut``."""
    return sum(split_coherences(s, cut))


def single_party_coherences(s: QuantumState) -> list[float]:
    return [c_l1(partial_trace(s, [i])) for i in range(s.n_parties)]


def check_product_equality(s: QuantumState, cut: Cut | int, tol: float = TOL_DETECT) -> InequalityRecord:
    """Does ``C(s)`` obey the product law across ``cut``?

    Every product state ``rho_solo (x) rho_rest`` satisfies it, so a
    violation shows ``s`` is not a product across the cut.
    """
    cut = _as_cut(cut, s.n_parties)
    c_solo, c_rest = split_coherences(s, cut)
    return _record(PRODUCT_EQ, c_l1(s), product_law(c_solo, c_rest), (c_solo, c_rest), tol, cut)


def check_full_separable_equality(s: QuantumState, tol: float = TOL_DETECT) -> InequalityRecord:
    """Does ``C(s)`` equal the n-fold product law of the single-party coherences?"""
    singles = single_party_coherences(s)
    return _record(FULL_PRODUCT_EQ, c_l1(s), product_law_n(singles), singles, tol)


def result2_bound(weights: Iterable[float], x_terms: Iterable[float]) -> float:
    """``sum_i p_i (X_i + X_i**2 / 4)``."""
    return float(sum(p * (x + x * x / 4) for p, x in zip(weights, x_terms)))


def result3_bound(weights: Iterable[float], x_terms: Iterable[float]) -> float:
    """``(1/4) sum_i p_i (X_i + 2)**2``; equals ``result2_bound + sum(p)``."""
    return float(sum(p * (x + 2) ** 2 for p, x in zip(weights, x_terms)) / 4)


def component_x_terms(d: Decomposition) -> list[float]:
    """X for each component, from that component's own marginals across its cut."""
    out = []
    for c in d.components:
        if c.cut is None:
            raise MixedCuts("every component needs a cut label")
        out.append(x_term(c.state, c.cut))
    return out


def x_by_cut(d: Decomposition) -> list[float]:
    """X per party, averaged over the components cut at that party (weighted when possible).

    Parties with no component get 0.
    """
    xs = component_x_terms(d)
    out = []
    for i in range(d.n_parties):
        pairs = [(c.weight, x) for c, x in zip(d.components, xs) if c.cut.solo == i]
        w = sum(p for p, _ in pairs)
        if not pairs:
            out.append(0.0)
        elif w > 0:
            out.append(sum(p * x for p, x in pairs) / w)
        else:
            out.append(sum(x for _, x in pairs) / len(pairs))
    return out


def check_result2(d: Decomposition, tol: float = TOL_DETECT, *, from_decomposition: bool = True) -> InequalityRecord:
    """Coherence bound for mixtures of products across one fixed cut.

    ``C(sum_i p_i sigma_i) <= sum_i p_i (X_i + X_i**2/4)``.

    Raises
    ------
    MixedCuts
        If the components do not all carry the same cut.
    """
    cuts = d.cuts()
    if len(cuts) != 1 or None in cuts:
        raise MixedCuts(f"single-cut check needs one shared cut, got {sorted(map(str, cuts))}")
    xs = component_x_terms(d)
    (cut,) = cuts
    return _record(RESULT2, c_l1(d.state), result2_bound(d.weights, xs), xs, tol, cut, from_decomposition)


def check_result3(d: Decomposition, tol: float = TOL_DETECT, *, from_decomposition: bool = True) -> InequalityRecord:
    """Biseparability bound for mixtures whose terms may use different cuts.

    ``1 + C(sum_i p_i sigma_i) <= (1/4) sum_i p_i (X_i + 2)**2``; works for
    any number of parties and any local dimension.
    """
    xs = component_x_terms(d)
    cuts = d.cuts()
    cut = next(iter(cuts)) if len(cuts) == 1 else None
    return _record(RESULT3, 1 + c_l1(d.state), result3_bound(d.weights, xs), xs, tol, cut, from_decomposition)


def check_result4(d: Decomposition, tol: float = TOL_DETECT, *, from_decomposition: bool = True) -> InequalityRecord:
    """Full-separability bound ``C(sum_i p_i sigma_i) <= sum_i p_i F_i``.

    ``F_i`` is the n-fold product law applied to the coherences of the
    single-party factors of term ``i``. ``x_terms`` holds the ``F_i``.
    """
    per_term = []
    for c in d.components:
        if c.factors is None:
            raise FactorDimMismatch("every component needs single-party factors")
        per_term.append(product_law_n(c_l1(f) for f in c.factors))
    rhs = float(sum(p * f for p, f in zip(d.weights, per_term)))
    return _record(RESULT4, c_l1(d.state), rhs, per_term, tol, None, from_decomposition)


def candidate_decomposition(s: QuantumState, cut: Cut | int) -> Decomposition:
    """Single-term decomposition of ``s`` itself, tagged with ``cut``."""
    return Decomposition.single(s, cut)


def marginal_product_decomposition(s: QuantumState) -> Decomposition:
    """Single-term decomposition pairing ``s`` with its own one-party marginals."""
    factors = tuple(partial_trace(s, [i]) for i in range(s.n_parties))
    return Decomposition.single(s, None, factors)


@dataclass(frozen=True)
class ClassificationReport:
    records: tuple[InequalityRecord, ...]
    verdict: str
    mode: str
    pure: bool

    def lines(self) -> list[str]:
        out = [r.describe() for r in self.records]
        out.append(f"MODE {self.mode.upper()}")
        out.append(f"VERDICT {self.verdict.upper()}")
        return out


def is_pure(s: QuantumState, tol: float = TOL_HERMITIAN) -> bool:
    purity = float(np.real(np.vdot(s.matrix, s.matrix)))
    return abs(purity - 1.0) <= tol


def decide_verdict(records: Sequence[InequalityRecord], n_parties: int, structural: bool) -> str:
    """Aggregate records into a verdict.

    Records built from a supplied decomposition always count. State-level
    records (the product equalities and the reduced-state heuristic) only
    count when ``structural`` is set, i.e. when the state is pure or no
    decomposition was supplied. Under that rule a state is flagged as not
    biseparable once every one-vs-rest cut carries a violated record.
    """
    considered = [r for r in records if r.from_decomposition or structural]
    sep_violated = any(not r.satisfied for r in considered if r.name in SEPARABILITY_CHECKS)
    global_bisep = [r for r in considered if r.name in BISEPARABILITY_CHECKS and r.from_decomposition and r.cut is None]
    bisep_violated = any(not r.satisfied for r in global_bisep)
    bisep_support = any(r.satisfied for r in global_bisep)
    # single-cut decomposition records speak for the decomposition as a whole
    single_cut = [r for r in considered if r.name in (RESULT2, RESULT3) and r.from_decomposition and r.cut is not None]
    bisep_violated |= any(not r.satisfied for r in single_cut)
    bisep_support |= any(r.satisfied for r in single_cut)

    if structural:
        per_cut = [r for r in considered if r.cut is not None and r.name in BISEPARABILITY_CHECKS and not r.from_decomposition]
        failed = {r.cut.solo for r in per_cut if not r.satisfied}
        examined = {r.cut.solo for r in per_cut}
        if n_parties >= 2 and failed >= set(range(n_parties)):
            bisep_violated = True
        bisep_support |= bool(examined - failed)

    if sep_violated and bisep_violated:
        return GENUINE_CANDIDATE
    if bisep_violated:
        return NOT_BISEPARABLE
    if sep_violated:
        return CONSISTENT_WITH_BISEPARABLE if bisep_support else NOT_SEPARABLE
    if any(r.name in SEPARABILITY_CHECKS for r in considered):
        return CONSISTENT_WITH_SEPARABLE
    return CONSISTENT_WITH_BISEPARABLE


def classify(s: QuantumState, d: Decomposition | None = None, tol: float = TOL_DETECT) -> ClassificationReport:
    """Run every applicable check on ``s`` and aggregate a verdict.

    Without ``d`` the decomposition-dependent bounds are evaluated on
    single-term candidates built from ``s`` and its marginals, and the report
    is marked ``reduced_state_heuristic``.

    Raises
    ------
    DecompositionMismatch
        If ``d`` does not assemble to ``s``.
    """
    n = s.n_parties
    records = [check_full_separable_equality(s, tol)]
    records += [check_product_equality(s, cut, tol) for cut in all_cuts(n)]

    if d is not None:
        if d.dims != s.dims:
            raise DecompositionMismatch(f"decomposition dims {d.dims} differ from state dims {s.dims}")
        dev = float(np.max(np.abs(d.state.matrix - s.matrix)))
        if dev > TOL_HERMITIAN:
            raise DecompositionMismatch(f"decomposition deviates from the state by {dev:.3g}")
        cuts = d.cuts()
        if None not in cuts:
            if len(cuts) == 1:
                records.append(check_result2(d, tol))
            records.append(check_result3(d, tol))
        if all(c.factors is not None for c in d.components):
            records.append(check_result4(d, tol))
        mode = DECOMPOSITION_GIVEN
    else:
        for cut in all_cuts(n):
            cand = candidate_decomposition(s, cut)
            records.append(check_result2(cand, tol, from_decomposition=False))
            records.append(check_result3(cand, tol, from_decomposition=False))
        records.append(check_result4(marginal_product_decomposition(s), tol, from_decomposition=False))
        mode = HEURISTIC

    pure = is_pure(s)
    verdict = decide_verdict(records, n, structural=pure or d is None)
    return ClassificationReport(tuple(records), verdict, mode, pure)
