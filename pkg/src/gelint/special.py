"""Gamma and beta functions, and the generalized half-period pi_{p,q}."""

from __future__ import annotations

import math

from .errors import DomainError
from .params import as_exponent

__all__ = ["log_gamma", "beta", "pi_pq"]


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"log_gamma needs a positive finite argument, got {x!r}", param="x")
    return math.lgamma(x)


def beta(x: float, y: float) -> float:
    """B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), evaluated in log space."""
    if not (x > 0 and y > 0):
        raise DomainError(f"beta needs positive arguments, got ({x!r}, {y!r})")
    return math.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y))


def pi_pq(p, q: float) -> float:
    """pi_{p,q} = 2 * int_0^1 (1 - t^q)^(-1/p) dt = (2/q) B(1/q, 1/p*).

    ``p`` may be anything :func:`gelint.params.as_exponent` accepts.  For
    p = inf the value is exactly 2.
    """
    p = as_exponent(p)
    q = float(q)
    if not (q > 1 and math.isfinite(q)):
        raise DomainError(f"q must lie in (1, inf), got {q!r}", param="q")
    if p.is_infinite:
        return 2.0
    # 1/p* = 1 - 1/p
    return 2.0 / q * beta(1.0 / q, 1.0 - p.recip)
