import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from l1coh.coherence import c_l1
from l1coh.detectors import check_result3, check_result4
from l1coh.qstate import (
    ParseError,
    StateValidationError,
    format_decomposition,
    format_pure,
    format_state,
    load_state,
    parse_decomposition,
    parse_state,
)
from l1coh.zoo import appendix_states, mixed_example1, random_state, w_state

W_TEXT = """\
qstate v1
dims 2 2 2
pure   # W state
amp 100 0.57735026918962573 0
amp 010 0.57735026918962573 0
amp 001 0.57735026918962573 0
"""

MIXED_TEXT = """\
qstate v1
dims 2 2 2
mixed
component 0.5
cut 0
pure
amp 000 0.70710678118654757 0
amp 011 0.70710678118654757 0
end
component 0.5
cut 1
pure
amp 010 0.70710678118654757 0
amp 111 -0.70710678118654757 0
end
"""

PRODUCT_TEXT = """\
qstate v1
dims 2 2
mixed
component 1
product
factor
pure
amp 0 0.70710678118654757 0
amp 1 0.70710678118654757 0
factor
matrix
0.5 0 0 0
0 0 0.5 0
end
"""


def test_parse_w():
    s = parse_state(W_TEXT)
    assert s.dims == (2, 2, 2)
    assert abs(c_l1(s) - 2) <= 1e-12


def test_parse_mixed_decomposition_matches_example():
    d = parse_decomposition(MIXED_TEXT)
    np.testing.assert_allclose(d.state.matrix, mixed_example1(0.5).state.matrix, atol=1e-15)
    r = check_result3(d)
    assert r.satisfied and abs(r.rhs - 2.25) <= 1e-12


def test_parse_product_block():
    d = parse_decomposition(PRODUCT_TEXT)
    r = check_result4(d)
    assert r.satisfied and abs(r.lhs - 1) <= 1e-12 and abs(r.rhs - 1) <= 1e-12


def test_parse_state_accepts_mixed_without_cuts():
    text = MIXED_TEXT.replace("cut 0\n", "").replace("cut 1\n", "")
    assert abs(c_l1(parse_state(text)) - 1) <= 1e-12
    with pytest.raises(ParseError) as e:
        parse_decomposition(text)
    assert e.value.line == 4


@pytest.mark.parametrize(
    "text,line",
    [
        ("qstate v2\ndims 2\npure\namp 0 1 0\n", 1),
        ("qstate v1\nsize 2\npure\namp 0 1 0\n", 2),
        ("qstate v1\ndims 2\npure\namp 0 one 0\n", 4),
        ("qstate v1\ndims 2\npure\namp 00 1 0\n", 4),
        ("qstate v1\ndims 2\nmatrix\n1 0 0 0\n0 0\n", 5),
        ("qstate v1\ndims 2\nblob\n", 3),
        ("qstate v1\ndims 2\npure\namp 0 1 0\nextra\n", 5),
        ("qstate v1\ndims 1\npure\n", 2),
        ("qstate v1\ndims 2 2\nmixed\ncomponent 1\ncut 5\n", 5),
        ("qstate v1\ndims 2\nmatrix\n1 0 0 0\n", 5),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as e:
        parse_state(text)
    assert e.value.line == line
    assert f"line {line}" in str(e.value)


def test_invalid_state_is_validation_error():
    with pytest.raises(StateValidationError):
        parse_state("qstate v1\ndims 2\npure\namp 0 1 0\namp 1 1 0\n")
    with pytest.raises(StateValidationError):
        parse_state("qstate v1\ndims 2\nmatrix\n0.5 0 0 0\n0 0 0.4 0\n")


def test_comments_and_blank_lines_are_ignored():
    text = "# header comment\n\nqstate v1\ndims 2  # one qubit\n\npure\namp 1 1 0 # excited\n"
    np.testing.assert_array_equal(parse_state(text).matrix, np.diag([0, 1]))


def test_format_pure_round_trip():
    psi = np.array([0, 1, 1j, 0]) / np.sqrt(2)
    s = parse_state(format_pure(psi, (2, 2)))
    np.testing.assert_allclose(s.matrix, np.outer(psi, psi.conj()), atol=1e-15)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2,), (3,), (2, 2), (2, 3), (2, 2, 2)]))
def test_format_state_round_trip(seed, dims):
    s = random_state(dims, seed)
    back = parse_state(format_state(s))
    assert back.dims == s.dims
    assert np.max(np.abs(back.matrix - s.matrix)) <= 1e-15


def test_decomposition_round_trip():
    for d in (mixed_example1(0.3), appendix_states().four_qubit_sep, appendix_states().qutrit_bisep):
        back = parse_decomposition(format_decomposition(d))
        assert [c.cut for c in back.components] == [c.cut for c in d.components]
        assert np.max(np.abs(back.state.matrix - d.state.matrix)) <= 1e-15


def test_load_state(tmp_path):
    p = tmp_path / "w.qst"
    p.write_text(W_TEXT)
    np.testing.assert_allclose(load_state(p).matrix, w_state().matrix, atol=1e-15)
