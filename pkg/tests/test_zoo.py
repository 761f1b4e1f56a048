import numpy as np
import pytest

from l1coh.coherence import c_l1
from l1coh.errors import NormalizationViolated, WeightOutOfRange
from l1coh.states import partial_trace, validate
from l1coh.zoo import (
    appendix_states,
    bisep_pure_example1,
    example4_a1,
    example4_from_a0,
    example4_state,
    ghz_state,
    ghz_w_mixture,
    mixed_example1,
    random_bisep_ensemble,
    random_cut_product,
    random_mixed,
    random_product,
    random_pure,
    random_sep_ensemble,
    random_state,
    w_state,
)


def test_named_states_are_valid():
    app = appendix_states()
    states = [
        bisep_pure_example1(0.6, 0.8, 0.0),
        w_state(),
        ghz_state(),
        ghz_state(np.pi / 3, np.pi / 3),
        example4_state(0.5, 0.5),
        mixed_example1(0.3).state,
        ghz_w_mixture(0.7).state,
        app.four_qubit_bisep.state,
        app.four_qubit_sep.state,
        app.qutrit_bisep.state,
    ]
    for s in states:
        assert validate(s).ok, s


def test_bisep_pure_rejects_bad_norm():
    with pytest.raises(NormalizationViolated):
        bisep_pure_example1(1, 1, 0)


def test_example4_errors():
    with pytest.raises(NormalizationViolated):
        example4_state(0.6, 0.6)
    with pytest.raises(NormalizationViolated):
        example4_state(-0.5, 0.5)


def test_example4_half_half_coherence():
    assert abs(c_l1(example4_state(0.5, 0.5)) - (0.5 + np.sqrt(2))) <= 1e-12


def test_example4_endpoints():
    np.testing.assert_allclose(example4_from_a0(1 / np.sqrt(2)).matrix, ghz_state().matrix, atol=1e-15)
    assert abs(c_l1(example4_from_a0(0.0)) - 1.0) <= 1e-12


@pytest.mark.parametrize("a0", np.linspace(0, 1 / np.sqrt(2), 50))
def test_example4_reduced_coherences(a0):
    a1 = example4_a1(a0)
    s = example4_state(a0, a1)
    r2 = np.sqrt(2)
    assert abs(c_l1(s) - (2 * a0 * a1 + r2 * a0 + r2 * a1)) <= 1e-12
    assert abs(c_l1(partial_trace(s, [0])) - 2 * a0 * a1) <= 1e-12
    assert abs(c_l1(partial_trace(s, [1, 2])) - r2 * a1) <= 1e-12
    # B and C marginals are diagonal; AC and AB share the |0>,|1> overlap with a1
    for solo in (1, 2):
        assert c_l1(partial_trace(s, [solo])) <= 1e-15
        rest = [i for i in range(3) if i != solo]
        assert abs(c_l1(partial_trace(s, rest)) - 2 * a0 * a1) <= 1e-12


def test_mixed_example1_values():
    d = mixed_example1(0.5)
    assert abs(c_l1(d.state) - 1.0) <= 1e-12
    assert d.meta["quoted_weights"] == (0.5, 0.5, 0.0)
    with pytest.raises(WeightOutOfRange):
        mixed_example1(1.2)


def test_ghz_w_mixture_endpoints():
    assert abs(c_l1(ghz_w_mixture(0).state) - 2) <= 1e-12
    assert abs(c_l1(ghz_w_mixture(1).state) - 1) <= 1e-12
    with pytest.raises(WeightOutOfRange):
        ghz_w_mixture(-0.1)


@pytest.mark.parametrize("q", np.linspace(0, 1, 11))
def test_ghz_w_mixture_coherence_is_two_minus_q(q):
    m = ghz_w_mixture(q).state.matrix
    ref = sum(abs(m[i, j]) for i in range(8) for j in range(8) if i != j)
    assert abs(ref - (2 - q)) <= 1e-12


@pytest.mark.parametrize(
    "gen",
    [
        lambda s: random_pure((2, 3), s),
        lambda s: random_mixed((2, 2, 2), s),
        lambda s: random_state((3, 3), s),
        lambda s: random_product((2, 3, 2), s),
        lambda s: random_cut_product((2, 2, 2), 1, s, mixed_rest=True),
        lambda s: random_bisep_ensemble((2, 2, 2), 3, s).state,
        lambda s: random_sep_ensemble((2, 2, 2), 3, s).state,
    ],
)
def test_generators_are_valid_and_deterministic(gen):
    for seed in range(20):
        a, b = gen(seed), gen(seed)
        assert validate(a).ok
        np.testing.assert_array_equal(a.matrix, b.matrix)
    assert not np.array_equal(gen(0).matrix, gen(1).matrix)


def test_random_product_is_pure_product():
    s = random_product((2, 2), 4)
    a, b = partial_trace(s, [0]), partial_trace(s, [1])
    np.testing.assert_allclose(s.matrix, np.kron(a.matrix, b.matrix), atol=1e-14)


def test_random_mixed_rank():
    s = random_mixed((2, 2), 0, rank=2)
    assert np.sum(np.linalg.eigvalsh(s.matrix) > 1e-10) == 2


def test_ensembles_carry_structure():
    d = random_bisep_ensemble((2, 2, 2), 4, 9)
    assert all(c.cut is not None for c in d.components)
    d = random_sep_ensemble((3, 2), 2, 9)
    assert all(c.factors is not None and len(c.factors) == 2 for c in d.components)
    assert abs(sum(d.weights) - 1) <= 1e-15


def test_generator_examples_satisfy_their_checks():
    from l1coh.detectors import check_full_separable_equality, check_result3, check_result4

    assert check_full_separable_equality(random_product([2, 2, 2], 7), tol=1e-9).satisfied
    assert check_result3(random_bisep_ensemble([2, 2, 2], 3, 1)).satisfied
    assert check_result4(random_sep_ensemble([2, 2, 2], 4, 2)).satisfied
