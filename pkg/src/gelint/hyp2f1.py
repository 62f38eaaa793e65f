"""Gauss hypergeometric function 2F1(a, b; c; x) on 0 <= x < 1 by its power series."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

__all__ = ["Hyp2F1Params", "gauss_2f1", "hyp2f1", "pochhammer_ratio_step", "MAX_TERMS"]

MAX_TERMS = 1_000_000
_POLE_BAND = 1e-12


@dataclass(frozen=True)
class Hyp2F1Params:
    a: float
    b: float
    c: float
    x: float

    def __post_init__(self):
        c = self.c
        if c <= _POLE_BAND and abs(c - round(c)) <= _POLE_BAND:
            raise DomainError(f"c={c!r} is at a pole of 2F1 (zero or a negative integer)", param="c")
        if not (0.0 <= self.x < 1.0):
            raise DomainError(f"x={self.x!r} outside [0, 1); the series does not converge", param="x")


def pochhammer_ratio_step(term: float, a: float, b: float, c: float, n: int, x: float) -> float:
    """The (n+1)-th series term from the n-th: term * (a+n)(b+n) x / ((c+n)(n+1))."""
    num = (a + n) * (b + n)
    if num == 0.0:
        return 0.0
    return term * num * x / ((c + n) * (n + 1))


def gauss_2f1(params: Hyp2F1Params, tol: float = 1e-16) -> float:
    """Sum the series until the remaining tail is below ``tol * |partial sum|``.

    Once n exceeds the size of the parameters the term ratio is monotone in n
    and tends to x, so the tail after term n+1 is at most
    |term_{n+1}| / (1 - max(ratio_n, x)).  Partial sums use Kahan compensation.
    A nonpositive integer ``a`` or ``b`` terminates the series exactly.
    """
    a, b, c, x = params.a, params.b, params.c, params.x
    if x == 0.0:
        return 1.0
    settle = 2.0 * (abs(a) + abs(b) + abs(c) + 1.0)
    total, carry = 1.0, 0.0
    term = 1.0
    for n in range(MAX_TERMS):
        nxt = pochhammer_ratio_step(term, a, b, c, n, x)
        if nxt == 0.0:
            return total + carry
        # Kahan summation of the partial sums
        y = nxt - carry
        t = total + y
        carry = (t - total) - y
        total = t
        if n + 1 > settle:
            ratio = abs(nxt / term) if term != 0.0 else math.inf
            bound_ratio = max(ratio, x)
            if bound_ratio < 1.0:
                following = abs(pochhammer_ratio_step(nxt, a, b, c, n + 1, x))
                if following / (1.0 - bound_ratio) <= tol * abs(total):
                    return total
        term = nxt
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {x}) needs more than {MAX_TERMS} terms; use the quadrature backend",
        value=total,
    )


def hyp2f1(a: float, b: float, c: float, x: float, tol: float = 1e-16) -> float:
    return gauss_2f1(Hyp2F1Params(a, b, c, x), tol)
