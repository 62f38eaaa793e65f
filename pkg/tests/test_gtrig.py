import math

import numpy as np
import pytest

from gelint.errors import DomainError
from gelint.gtrig import GTrigParams, arcsin_pq, cos_pq, sin_pq
from gelint.special import pi_pq

P_GRID = [-3.0, 1.5, 2.0, 3.0, 5.0]
Q_GRID = [1.25, 2.0, 3.0]


def interior_thetas(params, n=17):
    return [params.half_period * i / (n + 1) for i in range(1, n + 1)]


@pytest.fixture(scope="module")
def classical():
    return GTrigParams.create(2.0, 2.0)


def test_half_period_cached(classical):
    assert classical.half_period == pi_pq(2.0, 2.0) / 2


def test_arcsin_examples(classical):
    assert arcsin_pq(classical, 0.0) == 0.0
    assert arcsin_pq(classical, 1.0) == classical.half_period
    assert arcsin_pq(classical, 0.5) == pytest.approx(math.pi / 6, abs=1e-14)
    assert arcsin_pq(classical, 0.9) == pytest.approx(math.asin(0.9), abs=1e-14)


def test_arcsin_infinite_p_is_identity():
    params = GTrigParams.create("inf", 3.0)
    assert arcsin_pq(params, 0.37) == 0.37
    assert params.half_period == 1.0


@pytest.mark.parametrize("x", [-0.1, 1.1])
def test_arcsin_domain(classical, x):
    with pytest.raises(DomainError):
        arcsin_pq(classical, x)


def test_sin_examples(classical):
    assert sin_pq(classical, 0.0) == 0.0
    assert sin_pq(classical, classical.half_period) == 1.0
    assert sin_pq(classical, math.pi / 4) == pytest.approx(math.sqrt(2) / 2, abs=1e-12)


def test_sin_matches_classical_sine_on_grid(classical):
    for theta in np.linspace(0.0, math.pi / 2, 41)[1:-1]:
        assert sin_pq(classical, theta) == pytest.approx(math.sin(theta), abs=1e-12)


def test_sin_domain(classical):
    with pytest.raises(DomainError):
        sin_pq(classical, -0.1)
    with pytest.raises(DomainError):
        sin_pq(classical, 2.0)


def test_cos_examples(classical):
    assert cos_pq(classical, 0.0) == 1.0
    assert cos_pq(classical, classical.half_period) == 0.0
    assert cos_pq(classical, math.pi / 3) == pytest.approx(0.5, abs=1e-12)


def test_cos_undefined_for_infinite_p():
    with pytest.raises(DomainError):
        cos_pq(GTrigParams.create("inf", 2.0), 0.5)


def test_cos_negative_p_blows_up_at_half_period():
    params = GTrigParams.create(-3.0, 2.0)
    with pytest.raises(DomainError):
        cos_pq(params, params.half_period)
    near = [cos_pq(params, params.half_period * f) for f in (0.9, 0.99, 0.999)]
    assert near[0] < near[1] < near[2]


@pytest.mark.parametrize("p", P_GRID)
@pytest.mark.parametrize("q", Q_GRID)
def test_pythagorean_identity(p, q):
    params = GTrigParams.create(p, q)
    for theta in interior_thetas(params):
        s, c = sin_pq(params, theta), cos_pq(params, theta)
        assert c ** p + s ** q == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("p", P_GRID)
@pytest.mark.parametrize("q", Q_GRID)
def test_round_trip(p, q):
    params = GTrigParams.create(p, q)
    for theta in interior_thetas(params):
        assert arcsin_pq(params, sin_pq(params, theta)) == pytest.approx(theta, abs=1e-10)


@pytest.mark.parametrize("p, q", [(-3.0, 2.0), (1.5, 1.25), (3.0, 3.0), (5.0, 2.0)])
def test_sin_derivative_is_cos(p, q):
    params = GTrigParams.create(p, q)
    h = 1e-5
    for theta in interior_thetas(params, 7):
        fd = (sin_pq(params, theta + h) - sin_pq(params, theta - h)) / (2 * h)
        assert fd == pytest.approx(cos_pq(params, theta), rel=1e-6)


@pytest.mark.parametrize("p, q", [(-3.0, 2.0), (1.5, 1.25), (3.0, 3.0), (5.0, 2.0)])
def test_cos_derivative_identity(p, q):
    params = GTrigParams.create(p, q)
    h = 1e-5
    for theta in interior_thetas(params, 7):
        fd = (cos_pq(params, theta + h) - cos_pq(params, theta - h)) / (2 * h)
        s, c = sin_pq(params, theta), cos_pq(params, theta)
        rhs = -(q / p) * s ** (q - 1) * c ** (2 - p)
        assert fd == pytest.approx(rhs, rel=1e-6)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 5.0])
def test_cos_power_decays_at_half_period(p):
    params = GTrigParams.create(p, 2.0)
    thetas = [params.half_period * (1 - 10.0 ** -j) for j in range(1, 7)]
    values = [cos_pq(params, t) ** (p - 1) for t in thetas]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[-1] < 1e-2
    assert cos_pq(params, params.half_period) ** (p - 1) == 0.0
