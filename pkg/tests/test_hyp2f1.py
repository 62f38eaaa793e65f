import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gelint.errors import ConvergenceError, DomainError
from gelint.hyp2f1 import Hyp2F1Params, gauss_2f1, hyp2f1, pochhammer_ratio_step

from conftest import agm_K_E

param = st.floats(min_value=-3.0, max_value=3.0)


def test_value_at_zero_is_one():
    assert hyp2f1(0.3, -0.7, 1.1, 0.0) == 1.0


def test_log_closed_form():
    # F(1, 1; 2; x) = -ln(1 - x) / x
    assert hyp2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-15)
    for x in (0.1, 0.7, 0.9):
        assert hyp2f1(1, 1, 2, x) == pytest.approx(-math.log1p(-x) / x, rel=1e-14)


def test_classical_K_by_agm():
    # F(1/2, 1/2; 1; k^2) = (2/pi) K(k)
    K, _ = agm_K_E(0.5)
    assert hyp2f1(0.5, 0.5, 1.0, 0.25) == pytest.approx(2 / math.pi * K, rel=1e-14)


def test_classical_E_by_agm():
    # F(1/2, -1/2; 1; k^2) = (2/pi) E(k)
    _, E = agm_K_E(0.8)
    assert hyp2f1(0.5, -0.5, 1.0, 0.64) == pytest.approx(2 / math.pi * E, rel=1e-14)


def test_terminating_series():
    # F(-2, b; c; x) = 1 - 2 b x / c + b (b + 1) x^2 / (c (c + 1))
    b, c, x = 0.7, 1.3, 0.6
    expected = 1 - 2 * b * x / c + b * (b + 1) * x * x / (c * (c + 1))
    assert hyp2f1(-2, b, c, x) == pytest.approx(expected, rel=1e-15)


def test_step_examples():
    assert pochhammer_ratio_step(1.0, 1, 1, 2, 0, 0.5) == 0.25
    assert pochhammer_ratio_step(3.7, -2, 0.4, 1.5, 2, 0.5) == 0.0
    assert pochhammer_ratio_step(1.0, 0.5, 0.5, 1.0, 0, 0.25) == 0.0625


@pytest.mark.parametrize("c", [0.0, -1.0, -3.0, -2.0 + 1e-13])
def test_pole_in_c(c):
    with pytest.raises(DomainError):
        Hyp2F1Params(0.5, 0.5, c, 0.3)


@pytest.mark.parametrize("x", [-0.1, 1.0, 1.5])
def test_x_outside_disc(x):
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, x)


def test_term_cap_raises():
    with pytest.raises(ConvergenceError):
        hyp2f1(5.0, 5.0, 0.5, 1.0 - 1e-9)


@given(param, param, st.floats(min_value=0.2, max_value=4.0), st.floats(min_value=0.0, max_value=0.9))
def test_symmetric_in_a_b(a, b, c, x):
    assert hyp2f1(a, b, c, x) == pytest.approx(hyp2f1(b, a, c, x), rel=1e-14, abs=1e-300)


@given(param, param, st.floats(min_value=0.2, max_value=4.0))
def test_exactly_one_at_zero(a, b, c):
    assert gauss_2f1(Hyp2F1Params(a, b, c, 0.0)) == 1.0
