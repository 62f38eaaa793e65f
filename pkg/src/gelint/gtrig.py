"""Generalized trigonometric functions sin_{p,q}, cos_{p,q} and arcsin_{p,q}.

arcsin_{p,q}(x) = int_0^x (1 - t^q)^(-1/p) dt increases from 0 to pi_{p,q}/2 on
[0, 1]; sin_{p,q} is its inverse and cos_{p,q} = (sin_{p,q})' =
(1 - sin_{p,q}^q)^(1/p).  For p = inf the inverse integral is the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._numeric import one_minus_pow
from .errors import ConvergenceError, DomainError
from .params import Exponent, as_exponent
from .quadrature import IntegrandSpec, integrate
from .special import pi_pq

__all__ = ["GTrigParams", "arcsin_pq", "sin_pq", "cos_pq"]

THETA_TOL = 1e-12
_BISECT_ABOVE = 1.0 - 1e-8
_MAX_ITER = 200
_QUAD_TOL = 1e-15


@dataclass(frozen=True)
class GTrigParams:
    p: Exponent
    q: float
    half_period: float

    @classmethod
    def create(cls, p, q: float) -> GTrigParams:
        p = as_exponent(p)
        return cls(p, float(q), 0.5 * pi_pq(p, q))


def _arcsin_integrand(params: GTrigParams) -> IntegrandSpec:
    neg_rp, q = -params.p.recip, params.q

    def f(t, comp):
        return one_minus_pow(t, comp, q) ** neg_rp

    return IntegrandSpec(f, singular_right=params.p.recip > 0, vectorized=True, complement=True)


def _arcsin(params: GTrigParams, x: float) -> float:
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return params.half_period
    spec = _arcsin_integrand(params)
    if x <= 0.5:
        return integrate(spec, 0.0, x, _QUAD_TOL).value
    # near 1 integrate the short tail so the singularity sits at an endpoint
    return params.half_period - integrate(spec, x, 1.0, _QUAD_TOL).value


def arcsin_pq(params: GTrigParams, x: float) -> float:
    """The inverse of sin_{p,q}: int_0^x (1 - t^q)^(-1/p) dt, or x when p = inf."""
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"arcsin_pq needs x in [0, 1], got {x!r}", param="x")
    if params.p.is_infinite:
        return float(x)
    return _arcsin(params, float(x))


def _check_theta(params: GTrigParams, theta: float) -> float:
    theta = float(theta)
    if not (0.0 <= theta <= params.half_period):
        raise DomainError(
            f"theta={theta!r} outside [0, {params.half_period!r}]", param="theta"
        )
    return theta


def sin_pq(params: GTrigParams, theta: float) -> float:
    """Solve arcsin_pq(x) = theta for x in [0, 1].

    Safeguarded Newton on the bracket [0, 1], using d/dx arcsin_pq(x) =
    (1 - x^q)^(-1/p).  Above 1 - 1e-8 the derivative degenerates and the
    iteration falls back to bisection.
    """
    theta = _check_theta(params, theta)
    if theta == 0.0:
        return 0.0
    if theta == params.half_period:
        return 1.0
    if params.p.is_infinite:
        return theta
    q, rp = params.q, params.p.recip
    lo, hi = 0.0, 1.0
    x = theta / params.half_period
    for _ in range(_MAX_ITER):
        resid = _arcsin(params, x) - theta
        if abs(resid) <= THETA_TOL:
            return x
        if resid > 0.0:
            hi = x
        else:
            lo = x
        if hi - lo <= 2.0 * math.ulp(hi):
            return x
        step_ok = False
        if x < _BISECT_ABOVE:
            # Newton: divide the residual by the integrand at x
            candidate = x - resid * (1.0 - x ** q) ** rp
            step_ok = lo < candidate < hi
        x = candidate if step_ok else 0.5 * (lo + hi)
    raise ConvergenceError(f"sin_pq did not converge for theta={theta!r}", value=x)


def cos_pq(params: GTrigParams, theta: float) -> float:
    """cos_{p,q}(theta) = (1 - sin_{p,q}(theta)^q)^(1/p), defined for p != inf.

    For p < 0 the exponent 1/p is negative and the function blows up at the
    half period, which is therefore excluded.
    """
    if params.p.is_infinite:
        raise DomainError("cos_pq is defined only for finite p", param="p")
    theta = _check_theta(params, theta)
    if params.p.recip < 0.0 and theta == params.half_period:
        raise DomainError("cos_pq diverges at the half period when p < 0", param="theta")
    x = sin_pq(params, theta)
    return (1.0 - x ** params.q) ** params.p.recip
