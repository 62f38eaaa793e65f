"""Residuals of the generalized Legendre relation and the identities around it.

For p in P*, q, r in (1, inf), k in (0, 1), k' = (1 - k^q)^(1/r) and
1/s = 1/p - 1/q,

    L(k) = E_{p,q,r*}(k) K_{p,r,q*}(k') + K_{p,q,r*}(k) E_{p,r,q*}(k')
           - K_{p,q,r*}(k) K_{p,r,q*}(k')
         = pi_{p,q} pi_{s,r} / 4.

The factors at k use the triple (p, q, r*); the factors at k' use (p, r, q*).
Both triples are built here and nowhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .gci import (
    Backend,
    GciPoint,
    GciValue,
    dE_dk,
    dK_dk,
    eval_E,
    eval_K,
    eval_K_minus_E,
)
from .hyp2f1 import hyp2f1
from .params import ParamTriple, check_modulus, validate_triple
from .special import log_gamma, pi_pq

__all__ = [
    "LegendreReport",
    "ElliottParams",
    "ProofCoefficients",
    "legendre_triples",
    "legendre_points",
    "legendre_rhs",
    "legendre_residual",
    "legendre_constancy_scan",
    "map_pqrk_to_elliott",
    "elliott_rhs",
    "elliott_residual",
    "elliott_bridge_factor",
    "ode_residual",
    "proof_coefficients",
    "vanishing_product",
]

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class LegendreReport:
    k: float
    k_prime: float
    term_EKp: float
    term_KEp: float
    term_KKp: float
    rhs: float
    residual: float
    err_estimate: float


@dataclass(frozen=True)
class ElliottParams:
    a: float
    b: float
    c: float
    x: float

    def __post_init__(self):
        if not abs(self.a) < 0.5:
            raise DomainError(f"Elliott's identity needs |a| < 1/2, got a={self.a!r}", param="a")
        if not self.b > -0.5:
            raise DomainError(f"Elliott's identity needs b > -1/2, got b={self.b!r}", param="b")
        if not abs(self.c) < 0.5:
            raise DomainError(f"Elliott's identity needs |c| < 1/2, got c={self.c!r}", param="c")
        if not 0.0 < self.x < 1.0:
            raise DomainError(f"Elliott's identity needs x in (0, 1), got x={self.x!r}", param="x")


@dataclass(frozen=True)
class ProofCoefficients:
    a: float
    b: float

    def defect(self, triple: ParamTriple) -> float:
        """q b - r a, identically zero."""
        return triple.q * self.b - triple.r * self.a


def legendre_triples(triple: ParamTriple) -> tuple[ParamTriple, ParamTriple]:
    """(p, q, r*) for the factors at k and (p, r, q*) for the factors at k'."""
    d = triple.derived
    return (
        validate_triple(triple.p, triple.q, d.r_conj),
        validate_triple(triple.p, triple.r, d.q_conj),
    )


def legendre_points(triple: ParamTriple, k: float) -> tuple[GciPoint, GciPoint]:
    """The two evaluation points; (k')^r = 1 - k^q is passed exactly to the second."""
    at_k, at_kp = legendre_triples(triple)
    first = GciPoint.at(at_k, k)
    second = GciPoint.from_power(at_kp, first.kq_comp, first.kq)
    return first, second


def legendre_rhs(triple: ParamTriple) -> float:
    """pi_{p,q} pi_{s,r} / 4 with 1/s = 1/p - 1/q."""
    s = triple.derived.s
    if s is None:
        raise DomainError("1/s = 1/p - 1/q >= 1 leaves P*", param="p")
    return pi_pq(triple.p, triple.q) * pi_pq(s, triple.r) / 4.0


def legendre_residual(triple: ParamTriple, k: float, tol: float = DEFAULT_TOL,
                      backend: Backend = Backend.AUTO) -> LegendreReport:
    k = check_modulus(k)
    if not 0.0 < k < 1.0:
        raise DomainError(f"the Legendre relation is stated for k in (0, 1), got {k!r}", param="k")
    first, second = legendre_points(triple, k)
    e1, k1 = eval_E(first, backend, tol), eval_K(first, backend, tol)
    e2, k2 = eval_E(second, backend, tol), eval_K(second, backend, tol)
    ekp = e1.value * k2.value
    kep = k1.value * e2.value
    kkp = k1.value * k2.value
    rhs = legendre_rhs(triple)
    residual = ekp + kep - kkp - rhs
    err = _product_error([(e1, k2), (k1, e2), (k1, k2)])
    eps = 2.220446049250313e-16
    err += 4.0 * eps * (abs(ekp) + abs(kep) + abs(kkp) + rhs)
    return LegendreReport(k, second.k, ekp, kep, kkp, rhs, residual, err)


def _product_error(pairs: Iterable[tuple[GciValue, GciValue]]) -> float:
    return sum(abs(x.value) * y.abs_err_estimate + abs(y.value) * x.abs_err_estimate
               for x, y in pairs)


def legendre_constancy_scan(triple: ParamTriple, k_grid: Iterable[float],
                            tol: float = DEFAULT_TOL) -> float:
    """max over the grid of |L(k) - pi_{p,q} pi_{s,r} / 4|."""
    worst = 0.0
    for k in k_grid:
        worst = max(worst, abs(legendre_residual(triple, k, tol).residual))
    return worst


def map_pqrk_to_elliott(triple: ParamTriple, k: float) -> ElliottParams:
    """a = 1/q - 1/2, b = 1/2 - 1/p, c = 1/r - 1/2, x = k^q.

    Under this map the factors of L(k) become the six 2F1 values of Elliott's
    identity times pi_{p,q} pi_{p,r} / 4.
    """
    k = check_modulus(k)
    return ElliottParams(
        a=1.0 / triple.q - 0.5,
        b=0.5 - triple.p.recip,
        c=1.0 / triple.r - 0.5,
        x=k ** triple.q,
    )


def elliott_bridge_factor(triple: ParamTriple) -> float:
    """pi_{p,q} pi_{p,r} / 4: L(k) - rhs equals this times the Elliott residual."""
    return pi_pq(triple.p, triple.q) * pi_pq(triple.p, triple.r) / 4.0


def elliott_rhs(a: float, b: float, c: float) -> float:
    """Gamma(a+b+1) Gamma(b+c+1) / (Gamma(a+b+c+3/2) Gamma(b+1/2))."""
    return math.exp(log_gamma(a + b + 1.0) + log_gamma(b + c + 1.0)
                    - log_gamma(a + b + c + 1.5) - log_gamma(b + 0.5))


def elliott_residual(params: ElliottParams, tol: float = 1e-16) -> float:
    """Left side minus right side of Elliott's identity at (a, b, c, x)."""
    a, b, c, x = params.a, params.b, params.c, params.x
    y = 1.0 - x
    ab1, bc1 = a + b + 1.0, b + c + 1.0
    f1 = hyp2f1(0.5 + a, -0.5 - c, ab1, x, tol)
    f2 = hyp2f1(0.5 - a, 0.5 + c, bc1, y, tol)
    f3 = hyp2f1(0.5 + a, 0.5 - c, ab1, x, tol)
    f4 = hyp2f1(-0.5 - a, 0.5 + c, bc1, y, tol)
    # the third product repeats f3 and f2
    return f1 * f2 + f3 * f4 - f3 * f2 - elliott_rhs(a, b, c)


def ode_residual(triple: ParamTriple, k: float, h: float = 1e-5,
                 tol: float = 1e-15) -> tuple[float, float]:
    """Relative gaps |FD - analytic| / |analytic| for dE/dk and dK/dk.

    The central differences use the t-quadrature backend.  Neither derivative
    vanishes on 0 < k < 1: K increases and E decreases strictly.
    """
    if not 1e-7 <= h <= 1e-3:
        raise DomainError(f"step h={h!r} outside [1e-7, 1e-3]", param="h")
    if not h < k < 1.0 - h:
        raise DomainError(f"k={k!r} must lie in (h, 1 - h)", param="k")
    quad = Backend.QUADRATURE_T
    centre = GciPoint.at(triple, k)
    up, down = GciPoint.at(triple, k + h), GciPoint.at(triple, k - h)
    fd_e = (eval_E(up, quad, tol).value - eval_E(down, quad, tol).value) / (2.0 * h)
    fd_k = (eval_K(up, quad, tol).value - eval_K(down, quad, tol).value) / (2.0 * h)
    de = dE_dk(centre, tol)
    dk = dK_dk(centre, tol)
    return abs(fd_e - de) / abs(de), abs(fd_k - dk) / abs(dk)


def proof_coefficients(triple: ParamTriple) -> ProofCoefficients:
    """a = 1 + q/r - q/p, b = 1 + r/q - r/p."""
    q, r, rp = triple.q, triple.r, triple.p.recip
    return ProofCoefficients(a=1.0 + q / r - q * rp, b=1.0 + r / q - r * rp)


def vanishing_product(triple: ParamTriple, k: float, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """((K - E)_{p,q,r*}(k) K_{p,r,q*}(k'), (pi_{p,r}/2) k K_{p,q,r*}(k)).

    The first entry is bounded by the second, which forces it to 0 as k -> 0.
    """
    first, second = legendre_points(triple, k)
    diff = eval_K_minus_E(first, tol).value
    k_comp = eval_K(second, Backend.AUTO, tol).value
    bound = 0.5 * pi_pq(triple.p, triple.r) * k * eval_K(first, Backend.AUTO, tol).value
    return diff * k_comp, bound
