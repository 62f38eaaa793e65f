"""Generalized complete elliptic integrals K_{p,q,r}(k) and E_{p,q,r}(k).

    K_{p,q,r}(k) = int_0^1 (1 - t^q)^(-1/p) (1 - k^q t^q)^(-1/r) dt
    E_{p,q,r}(k) = int_0^1 (1 - t^q)^(-1/p) (1 - k^q t^q)^(1/r*) dt

with the first factor absent when p = inf.  Three independent routes are
available: the t-integral above by tanh-sinh, the Gauss series

    K = (pi_{p,q}/2) F(1/q, 1/r; 1/p* + 1/q; k^q)
    E = (pi_{p,q}/2) F(1/q, -1/r*; 1/p* + 1/q; k^q),

and the theta-integral over (0, pi_{p,q}/2) after substituting t = sin_{p,q}(theta).

A point carries k^q and 1 - k^q separately.  Callers that know 1 - k^q
exactly (the complementary modulus, for instance) pass it through
:meth:`GciPoint.from_power` so no cancellation occurs near k = 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._numeric import one_minus_pow, pow_or_one
from .errors import DivergenceError, DomainError
from .gtrig import GTrigParams, sin_pq
from .hyp2f1 import hyp2f1
from .params import ParamTriple, check_modulus, one_minus_power
from .quadrature import IntegrandSpec, integrate_01, integrate
from .special import pi_pq

__all__ = [
    "Backend",
    "Which",
    "GciPoint",
    "GciValue",
    "OdeCoefficients",
    "DIVERGENT",
    "SERIES_THRESHOLD",
    "eval_K",
    "eval_E",
    "eval_K_minus_E",
    "eval_theta_form",
    "limit_K_at_1",
    "limit_E_at_1",
    "ode_coefficients",
    "dE_dk",
    "dK_dk",
]

SERIES_THRESHOLD = 0.9
DEFAULT_TOL = 1e-12
_THETA_QUAD_FLOOR = 1e-11
_EPS = 2.220446049250313e-16


class Backend(str, enum.Enum):
    QUADRATURE_T = "quadrature_t"
    SERIES = "series"
    QUADRATURE_THETA = "quadrature_theta"
    AUTO = "auto"
    # endpoint short-circuits (k = 0, and K at k = 1)
    CLOSED_FORM = "closed_form"


class Which(str, enum.Enum):
    K = "K"
    E = "E"


class _Divergent:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "DIVERGENT"

    def __bool__(self) -> bool:
        return False


DIVERGENT = _Divergent()


@dataclass(frozen=True)
class GciPoint:
    triple: ParamTriple
    k: float
    kq: float        # k**q
    kq_comp: float   # 1 - k**q

    @classmethod
    def at(cls, triple: ParamTriple, k: float) -> GciPoint:
        k = check_modulus(k)
        return cls(triple, k, k ** triple.q, one_minus_power(k, triple.q))

    @classmethod
    def from_power(cls, triple: ParamTriple, kq: float, kq_comp: float | None = None) -> GciPoint:
        """Point given k**q directly, optionally with an exact 1 - k**q."""
        if not (0.0 <= kq <= 1.0):
            raise DomainError(f"k^q={kq!r} outside [0, 1]", param="k")
        if kq_comp is None:
            kq_comp = 1.0 - kq
        return cls(triple, kq ** (1.0 / triple.q), kq, kq_comp)


@dataclass(frozen=True)
class GciValue:
    value: float
    abs_err_estimate: float
    backend_used: Backend

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class OdeCoefficients:
    a: float


def ode_coefficients(triple: ParamTriple) -> OdeCoefficients:
    """a = 1 + q/r* - q/p for the derivative system of K and E."""
    q = triple.q
    return OdeCoefficients(1.0 + q * (1.0 - 1.0 / triple.r) - q * triple.p.recip)


def limit_K_at_1(triple: ParamTriple):
    """lim_{k->1} K: ``DIVERGENT`` if 1/p + 1/r >= 1, else pi_{u,q}/2 with 1/u = 1/p + 1/r."""
    u = triple.derived.u
    if u is None:
        return DIVERGENT
    return 0.5 * pi_pq(u, triple.q)


def limit_E_at_1(triple: ParamTriple) -> float:
    """E(1) = pi_{v,q}/2 with 1/v = 1/p - 1/r*."""
    return 0.5 * pi_pq(triple.derived.v, triple.q)


def _half_pi(triple: ParamTriple) -> float:
    return 0.5 * pi_pq(triple.p, triple.q)


def _quad_tol(tol: float, scale: float, floor: float = 1e-15) -> float:
    return min(max(tol * (1.0 + scale), floor), 1e-2)


def _resolve(point: GciPoint, backend: Backend) -> Backend:
    backend = Backend(backend)
    if backend is Backend.AUTO:
        return Backend.SERIES if point.kq <= SERIES_THRESHOLD else Backend.QUADRATURE_T
    if backend is Backend.CLOSED_FORM:
        raise DomainError("closed_form is not a selectable backend", param="backend")
    return backend


def _t_form(point: GciPoint, k_exp: float, tol: float, extra_tq: bool = False) -> tuple[float, float]:
    """int_0^1 (1-t^q)^(-1/p) (1 - k^q t^q)^k_exp [t^q if extra_tq] dt."""
    triple = point.triple
    q, neg_rp = triple.q, -triple.p.recip
    kq, kq_comp = point.kq, point.kq_comp

    def f(t, comp):
        omq = one_minus_pow(t, comp, q)
        # 1 - k^q t^q = (1 - k^q) + k^q (1 - t^q), exact near t = 1
        inner = kq_comp + kq * omq
        with np.errstate(over="ignore"):
            # an overflow here surfaces as IntegrandError from the integrator
            val = pow_or_one(omq, neg_rp) * pow_or_one(inner, k_exp)
        if extra_tq:
            val = val * t ** q
        return val

    singular = neg_rp < 0.0 or (kq_comp == 0.0 and k_exp < 0.0)
    spec = IntegrandSpec(f, singular_right=singular, vectorized=True, complement=True)
    scale = _half_pi(triple)
    res = integrate_01(spec, _quad_tol(tol, scale))
    return res.value, res.abs_err_estimate


def _series(point: GciPoint, second: float) -> tuple[float, float]:
    triple = point.triple
    q = triple.q
    c = 1.0 - triple.p.recip + 1.0 / q
    hp = _half_pi(triple)
    value = hp * hyp2f1(1.0 / q, second, c, point.kq)
    return value, 8.0 * _EPS * abs(value)


def _closed(value: float) -> GciValue:
    return GciValue(value, 4.0 * _EPS * abs(value), Backend.CLOSED_FORM)


def eval_K(point: GciPoint, backend: Backend = Backend.AUTO, tol: float = DEFAULT_TOL) -> GciValue:
    """K_{p,q,r}(k) on [0, 1), plus the finite k = 1 limit when it exists."""
    triple = point.triple
    if point.kq == 0.0:
        return _closed(_half_pi(triple))
    if point.kq_comp == 0.0:
        limit = limit_K_at_1(triple)
        if limit is DIVERGENT:
            raise DivergenceError(
                "K diverges at k = 1 because 1/p + 1/r >= 1", param="k"
            )
        return _closed(limit)
    chosen = _resolve(point, backend)
    if chosen is Backend.SERIES:
        value, err = _series(point, 1.0 / triple.r)
    elif chosen is Backend.QUADRATURE_T:
        value, err = _t_form(point, -1.0 / triple.r, tol)
    else:
        return eval_theta_form(point, Which.K, tol)
    return GciValue(value, err, chosen)


def eval_E(point: GciPoint, backend: Backend = Backend.AUTO, tol: float = DEFAULT_TOL) -> GciValue:
    """E_{p,q,r}(k) on [0, 1]."""
    triple = point.triple
    if point.kq == 0.0:
        return _closed(_half_pi(triple))
    chosen = _resolve(point, backend)
    exponent = 1.0 - 1.0 / triple.r
    if chosen is Backend.SERIES:
        value, err = _series(point, -exponent)
    elif chosen is Backend.QUADRATURE_T:
        value, err = _t_form(point, exponent, tol)
    else:
        return eval_theta_form(point, Which.E, tol)
    return GciValue(value, err, chosen)


def eval_K_minus_E(point: GciPoint, tol: float = DEFAULT_TOL) -> GciValue:
    """K - E = k^q int_0^1 t^q (1-t^q)^(-1/p) (1 - k^q t^q)^(-1/r) dt.

    Evaluated directly, so the difference keeps full relative accuracy as
    k -> 0 where K and E agree to many digits.
    """
    if point.kq == 0.0:
        return _closed(0.0)
    if point.kq_comp == 0.0 and limit_K_at_1(point.triple) is DIVERGENT:
        raise DivergenceError("K - E diverges at k = 1 because 1/p + 1/r >= 1", param="k")
    value, err = _t_form(point, -1.0 / point.triple.r, tol / max(point.kq, 1e-300), extra_tq=True)
    return GciValue(point.kq * value, point.kq * err, Backend.QUADRATURE_T)


def eval_theta_form(point: GciPoint, which: Which, tol: float = DEFAULT_TOL) -> GciValue:
    """K or E as an integral over theta in (0, pi_{p,q}/2) of a function of sin_{p,q}(theta)."""
    triple = point.triple
    which = Which(which)
    if triple.p.is_infinite:
        raise DomainError("the theta form needs finite p; use the t form for p = inf", param="p")
    if point.kq_comp == 0.0:
        raise DomainError("the theta form needs k < 1", param="k")
    params = GTrigParams.create(triple.p, triple.q)
    exponent = -1.0 / triple.r if which is Which.K else 1.0 - 1.0 / triple.r
    if point.kq == 0.0:
        return GciValue(params.half_period, 4.0 * _EPS * params.half_period, Backend.QUADRATURE_THETA)
    q, kq, kq_comp = triple.q, point.kq, point.kq_comp

    def f(theta: float) -> float:
        x = sin_pq(params, min(theta, params.half_period))
        return (kq_comp + kq * (1.0 - x ** q)) ** exponent

    spec = IntegrandSpec(f)
    res = integrate(spec, 0.0, params.half_period, _quad_tol(tol, params.half_period, _THETA_QUAD_FLOOR))
    return GciValue(res.value, res.abs_err_estimate, Backend.QUADRATURE_THETA)


def _derivative_point(point: GciPoint) -> None:
    if not (0.0 < point.k < 1.0) or point.kq_comp == 0.0:
        raise DomainError(f"derivatives need k in (0, 1), got {point.k!r}", param="k")


def dE_dk(point: GciPoint, tol: float = DEFAULT_TOL, backend: Backend = Backend.AUTO) -> float:
    """dE/dk = q (E - K) / (r* k)."""
    _derivative_point(point)
    triple = point.triple
    e = eval_E(point, backend, tol).value
    k_ = eval_K(point, backend, tol).value
    return triple.q * (e - k_) * (1.0 - 1.0 / triple.r) / point.k


def dK_dk(point: GciPoint, tol: float = DEFAULT_TOL, backend: Backend = Backend.AUTO) -> float:
    """dK/dk = (a E - (a - k^q) K) / (k (1 - k^q)) with a = 1 + q/r* - q/p."""
    _derivative_point(point)
    a = ode_coefficients(point.triple).a
    e = eval_E(point, backend, tol).value
    k_ = eval_K(point, backend, tol).value
    return (a * e - (a - point.kq) * k_) / (point.k * point.kq_comp)
