"""Brute-force checks of the closed-form laws the detectors rely on.

The oracle side never reuses the library's Kronecker product or coherence
routine: products are formed by explicit index broadcasting and coherences by
masking the diagonal and summing ``hypot(re, im)``. Each trial draws from its
own ``default_rng([seed, trial])`` stream so a failure can be replayed alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coherence import product_law, product_law_n
from .detectors import check_product_equality, check_result3, check_result4
from .zoo import random_bisep_ensemble, random_cut_product, random_sep_ensemble, random_state

TOL_ORACLE = 1e-10


@dataclass(frozen=True)
class Failure:
    seed: int
    trial: int
    description: str


@dataclass
class OracleReport:
    name: str
    trials: int = 0
    max_abs_error: float = 0.0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "OracleReport") -> "OracleReport":
        return OracleReport(
            f"{self.name}+{other.name}",
            self.trials + other.trials,
            max(self.max_abs_error, other.max_abs_error),
            self.failures + other.failures,
        )

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: trials={self.trials} max_abs_error={self.max_abs_error:.3e} {status}"


def brute_coherence(m: np.ndarray) -> float:
    m = np.asarray(m)
    off = ~np.eye(m.shape[0], dtype=bool)
    return float(np.hypot(m.real, m.imag)[off].sum())


def brute_kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``(a (x) b)[i*p + k, j*p + l] = a[i, j] b[k, l]`` by broadcasting."""
    n, p = a.shape[0], b.shape[0]
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(n * p, n * p)


def _trial_rng(seed: int, t: int) -> np.random.Generator:
    return np.random.default_rng([seed, t])


def verify_product_law(trials: int, dims_a, dims_b, tol: float = TOL_ORACLE, seed: int = 0) -> OracleReport:
    """Coherence of an explicit Kronecker product against the composition law."""
    rep = OracleReport(f"product_law {list(dims_a)}x{list(dims_b)}")
    for t in range(trials):
        rng = _trial_rng(seed, t)
        a = random_state(dims_a, rng).matrix
        b = random_state(dims_b, rng).matrix
        direct = brute_coherence(brute_kron(a, b))
        law = product_law(brute_coherence(a), brute_coherence(b))
        err = abs(direct - law)
        rep.trials += 1
        rep.max_abs_error = max(rep.max_abs_error, err)
        if err > tol:
            rep.failures.append(Failure(seed, t, f"C(a(x)b)={direct!r} law={law!r}"))
    return rep


def verify_convexity(trials: int, dims, k: int = 3, tol: float = TOL_ORACLE, seed: int = 0) -> OracleReport:
    """``C(sum p_i rho_i) <= sum p_i C(rho_i)`` on random ensembles of ``k`` states."""
    if k < 2:
        raise ValueError("convexity needs at least two components")
    rep = OracleReport(f"convexity {list(dims)} k={k}")
    for t in range(trials):
        rng = _trial_rng(seed, t)
        w = rng.dirichlet(np.ones(k))
        mats = [random_state(dims, rng).matrix for _ in range(k)]
        lhs = brute_coherence(sum(p * m for p, m in zip(w, mats)))
        rhs = float(sum(p * brute_coherence(m) for p, m in zip(w, mats)))
        excess = max(0.0, lhs - rhs)
        rep.trials += 1
        rep.max_abs_error = max(rep.max_abs_error, excess)
        if excess > tol:
            rep.failures.append(Failure(seed, t, f"C(mix)={lhs!r} > {rhs!r}"))
    return rep


def _tally(rep: OracleReport, seed: int, t: int, err: float, tol: float, what: str) -> None:
    rep.trials += 1
    rep.max_abs_error = max(rep.max_abs_error, err)
    if err > tol:
        rep.failures.append(Failure(seed, t, what))


def soundness_product_equality(trials: int, dims, tol: float = 1e-9, seed: int = 0) -> OracleReport:
    rep = OracleReport(f"product_equality {list(dims)}")
    n = len(dims)
    for t in range(trials):
        rng = _trial_rng(seed, t)
        cut = int(rng.integers(n))
        s = random_cut_product(dims, cut, rng, mixed_rest=bool(rng.integers(2)))
        r = check_product_equality(s, cut, tol)
        _tally(rep, seed, t, abs(r.lhs - r.rhs), tol, f"cut {cut}: lhs={r.lhs!r} rhs={r.rhs!r}")
    return rep


def soundness_result3(trials: int, dims, tol: float = 1e-9, seed: int = 0, max_k: int = 4) -> OracleReport:
    rep = OracleReport(f"biseparable_bound {list(dims)}")
    for t in range(trials):
        rng = _trial_rng(seed, t)
        d = random_bisep_ensemble(dims, int(rng.integers(1, max_k + 1)), rng)
        r = check_result3(d, tol)
        _tally(rep, seed, t, max(0.0, r.lhs - r.rhs), tol, f"lhs={r.lhs!r} rhs={r.rhs!r}")
    return rep


def soundness_result4(trials: int, dims, tol: float = 1e-9, seed: int = 0, max_k: int = 4) -> OracleReport:
    rep = OracleReport(f"separable_bound {list(dims)}")
    for t in range(trials):
        rng = _trial_rng(seed, t)
        d = random_sep_ensemble(dims, int(rng.integers(1, max_k + 1)), rng)
        r = check_result4(d, tol)
        _tally(rep, seed, t, max(0.0, r.lhs - r.rhs), tol, f"lhs={r.lhs!r} rhs={r.rhs!r}")
    return rep


def verify_detector_soundness(trials: int, dims=(2, 2, 2), tol: float = 1e-9, seed: int = 0) -> OracleReport:
    """No check may fire on a state built to satisfy its premise.

    Runs ``trials`` random cut products, biseparable ensembles and separable
    ensembles; the merged report holds the largest violation seen.
    """
    return (
        soundness_product_equality(trials, dims, tol, seed)
        .merge(soundness_result3(trials, dims, tol, seed))
        .merge(soundness_result4(trials, dims, tol, seed))
    )


def verify_product_law_n(trials: int, k: int = 3, tol: float = 1e-12, seed: int = 0) -> OracleReport:
    """Fold of the binary law against ``prod(1 + c_i) - 1``."""
    rep = OracleReport(f"product_law_n k={k}")
    for t in range(trials):
        c = _trial_rng(seed, t).uniform(0, 3, size=k)
        _tally(rep, seed, t, abs(product_law_n(c) - (np.prod(1 + c) - 1)), tol, f"c={c.tolist()}")
    return rep


SUITES = {
    "product-law": lambda trials, seed: verify_product_law(trials, (2,), (2, 2), seed=seed)
    .merge(verify_product_law(trials, (2, 2), (2, 2), seed=seed))
    .merge(verify_product_law(trials, (3,), (3, 3), seed=seed)),
    "convexity": lambda trials, seed: verify_convexity(trials, (2, 2, 2), 3, seed=seed),
    "soundness": lambda trials, seed: verify_detector_soundness(trials, (2, 2, 2), seed=seed),
}
