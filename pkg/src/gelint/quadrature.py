"""Tanh-sinh quadrature on finite intervals with integrable endpoint singularities.

The substitution

    x = a + (b - a) / (1 + exp(-2 u)),    u = (pi/2) sinh(tau)

maps tau in R onto (a, b) and makes the transformed integrand decay
double-exponentially, so algebraic singularities such as (1 - t^q)^(-1/p)
need no special treatment.  The trapezoidal rule in tau is refined by
halving the step; each level only evaluates the new (odd) nodes.

Distances to both endpoints are tabulated directly instead of being
recovered as ``1 - x``.  Integrands that lose accuracy near t = 1 can set
``complement=True`` to receive the exact ``1 - t`` as a second argument.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, IntegrandError

__all__ = [
    "IntegrandSpec",
    "QuadResult",
    "integrate",
    "integrate_01",
    "integrate_0x",
    "MAX_LEVEL",
]

MAX_LEVEL = 12
MIN_LEVEL = 3
TAU_MAX = 6.1
# smallest endpoint distance (on the unit interval) at which nodes are kept
_TINY = 1e-300
# nodes closer than this to a regular endpoint contribute below roundoff
_REGULAR_CUTOFF = 1e-34
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class IntegrandSpec:
    """An integrand on an open interval plus hints about its endpoints.

    ``f`` maps t to a real.  With ``vectorized=True`` it is called once per
    refinement level on a numpy array of abscissas; otherwise element by
    element.  With ``complement=True`` it is called as ``f(t, 1 - t)``.
    """

    f: Callable
    singular_left: bool = False
    singular_right: bool = False
    vectorized: bool = False
    complement: bool = False


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_err_estimate: float
    evaluations: int


@dataclass(frozen=True)
class _Level:
    tau: np.ndarray
    dist_left: np.ndarray   # (x - a) / (b - a)
    dist_right: np.ndarray  # (b - x) / (b - a)
    weight: np.ndarray      # dx/dtau / (b - a), without the step h


_levels: dict[int, _Level] = {}
_levels_lock = threading.Lock()


def _build_level(level: int) -> _Level:
    h = 2.0 ** -level
    n = int(math.floor(TAU_MAX / h))
    j = np.arange(-n, n + 1)
    if level > 0:
        j = j[j % 2 != 0]
    tau = j * h
    u = 0.5 * math.pi * np.sinh(tau)
    with np.errstate(over="ignore", under="ignore"):
        dist_left = 1.0 / (1.0 + np.exp(-2.0 * u))
        dist_right = 1.0 / (1.0 + np.exp(2.0 * u))
        weight = math.pi * np.cosh(tau) * dist_left * dist_right
    keep = (dist_left >= _TINY) & (dist_right >= _TINY)
    return _Level(tau[keep], dist_left[keep], dist_right[keep], weight[keep])


def _nodes(level: int) -> _Level:
    table = _levels.get(level)
    if table is None:
        with _levels_lock:
            table = _levels.get(level)
            if table is None:
                table = _build_level(level)
                _levels[level] = table
    return table


def _evaluate(spec: IntegrandSpec, x: np.ndarray, comp: np.ndarray) -> np.ndarray:
    if spec.vectorized:
        values = spec.f(x, comp) if spec.complement else spec.f(x)
        values = np.broadcast_to(np.asarray(values, dtype=float), x.shape)
    elif spec.complement:
        values = np.array([spec.f(float(t), float(c)) for t, c in zip(x, comp)], dtype=float)
    else:
        values = np.array([spec.f(float(t)) for t in x], dtype=float)
    if not np.all(np.isfinite(values)):
        bad = x[~np.isfinite(values)][0]
        raise IntegrandError(f"integrand is not finite at interior point t={bad!r}")
    return values


def integrate(spec: IntegrandSpec, a: float, b: float, tol: float = 1e-12) -> QuadResult:
    """Integrate ``spec.f`` over (a, b), a < b, to absolute tolerance ``tol``.

    Nodes stop where the distance to an endpoint would drop below 1e-300.
    At a singular end the mass beyond the last node is extrapolated from a
    power-law fit f ~ C d^(-alpha) through the outermost nodes, and the
    trapezoidal sum is corrected for the half weight of that last node.
    This keeps (1 - t)^(-alpha) accurate for alpha close to 1.

    The error estimate is the change between the last two refinement levels,
    floored at the roundoff level of the weighted sum, plus the uncertainty
    of the extrapolated tails.  Integrands that only see ``t`` cannot get
    closer than about 1e-16 to the right end; there the tail is only bounded,
    so use ``complement=True`` for singular right ends.
    """
    if not (1e-15 <= tol <= 1e-2):
        raise DomainError(f"tol={tol!r} outside [1e-15, 1e-2]", param="tol")
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"need finite a < b, got ({a!r}, {b!r})")
    length = b - a
    one_minus_b = 1.0 - b

    total = 0.0
    abs_total = 0.0
    evaluations = 0
    previous = None
    diff = math.inf
    tail_err = 0.0
    # three outermost nodes per side as (distance, f, dx/dtau)
    edge_left: list[tuple[float, float, float]] = []
    edge_right: list[tuple[float, float, float]] = []
    for level in range(MAX_LEVEL + 1):
        nodes = _nodes(level)
        keep = np.ones(nodes.tau.shape, dtype=bool)
        if not spec.singular_left:
            keep &= nodes.dist_left >= _REGULAR_CUTOFF
        if not spec.singular_right:
            keep &= nodes.dist_right >= _REGULAR_CUTOFF
        tau = nodes.tau[keep]
        dl = nodes.dist_left[keep] * length
        dr = nodes.dist_right[keep] * length
        x = np.where(tau <= 0.0, a + dl, b - dr)
        w = nodes.weight[keep] * length
        if not spec.complement:
            # the integrand only sees t, which must not round onto an endpoint
            inside = (x > a) & (x < b)
            x, dl, dr, w = x[inside], dl[inside], dr[inside], w[inside]
        comp = one_minus_b + dr
        values = _evaluate(spec, x, comp) if x.size else np.zeros(0)
        evaluations += int(x.size)
        if x.size:
            edge_left = _outermost(edge_left, dl, values, w)
            edge_right = _outermost(edge_right, dr, values, w)

        h = 2.0 ** -level
        contrib = w * values
        new_sum = h * math.fsum(contrib)
        new_abs = h * math.fsum(np.abs(contrib))
        if level == 0:
            total, abs_total = new_sum, new_abs
        else:
            total = 0.5 * total + new_sum
            abs_total = 0.5 * abs_total + new_abs

        corr_l, err_l = _end_correction(edge_left, h, True)
        corr_r, err_r = _end_correction(edge_right, h, spec.complement)
        value = total + corr_l + corr_r
        tail_err = err_l + err_r
        floor = 16.0 * _EPS * abs_total
        if previous is not None:
            diff = abs(value - previous)
            if level >= MIN_LEVEL and diff <= max(tol, floor):
                estimate = max(diff, tail_err, 2.0 * _EPS * abs(value))
                if tail_err > max(tol, floor):
                    raise ConvergenceError(
                        f"endpoint tail uncertainty {tail_err:.3g} exceeds tol={tol:g}; "
                        "supply the complement 1 - t to the integrand",
                        value=value,
                        abs_err_estimate=estimate,
                    )
                return QuadResult(value, estimate, max(evaluations, 1))
        previous = value

    raise ConvergenceError(
        f"tanh-sinh did not reach tol={tol:g} after {MAX_LEVEL} levels",
        value=previous,
        abs_err_estimate=max(diff, tail_err),
    )


def _outermost(edge, dist, values, jac):
    order = np.argsort(dist)[:3]
    merged = edge + [(float(dist[i]), float(values[i]), float(jac[i])) for i in order]
    merged.sort()
    return merged[:3]


def _power_fit(near, far):
    """alpha in f ~ C d^(-alpha) through two nodes, or None."""
    (d1, f1, _), (d2, f2, _) = near, far
    if f1 == 0.0 or f2 == 0.0 or (f1 > 0.0) != (f2 > 0.0) or not d1 < d2:
        return None
    return math.log(f1 / f2) / math.log(d2 / d1)


def _end_correction(edge, h: float, exact_nodes: bool) -> tuple[float, float]:
    """Correction to the trapezoidal sum at one end, and its uncertainty.

    With a singular power-law fit (0 < alpha < 1) the exact remainder
    beyond the last node d is d f / (1 - alpha).  The sum is then cut off
    at a node where g = f dx/dtau is not small, so the Euler-Maclaurin end
    terms h/2 g + h^2/12 g' are removed; the three outermost nodes are
    consecutive on the current grid.  Elsewhere 10 d |f| bounds the
    remainder.  If the nodes were rounded (no complement at the right end)
    the sum is biased near the end, so only a bound is reported.
    """
    if not edge:
        return 0.0, 0.0
    d1, f1, w1 = edge[0]
    bound = 10.0 * d1 * abs(f1)
    alpha = _power_fit(edge[0], edge[1]) if len(edge) >= 2 else None
    if alpha is None or alpha <= 0.0:
        return 0.0, bound
    if alpha >= 1.0:
        # no integrable fit at this resolution
        return 0.0, max(bound, 1e3 * d1 * abs(f1))
    mass = d1 * f1 / (1.0 - alpha)
    if not exact_nodes:
        return 0.0, max(bound, 2.0 * abs(mass))
    # fit uncertainty from the next pair of nodes, plus rounding of alpha
    alpha_far = _power_fit(edge[1], edge[2]) if len(edge) >= 3 else None
    if alpha_far is None or not alpha_far < 1.0:
        spread = abs(mass)
    else:
        spread = abs(d1 * f1 * (1.0 / (1.0 - alpha) - 1.0 / (1.0 - alpha_far)))
    # a few ulps in f1/f2 move alpha by ~eps / log(d2/d1)
    d2 = edge[1][0]
    rounding = 16.0 * _EPS * abs(mass) / ((1.0 - alpha) * math.log(d2 / d1))
    g = [w * f for _, f, w in edge]
    end_terms = 0.5 * h * g[0]
    if len(g) == 3:
        # outward derivative by a one-sided second-order difference
        end_terms += h * (3.0 * g[0] - 4.0 * g[1] + g[2]) / 24.0
    return mass - end_terms, spread + rounding


def integrate_01(spec: IntegrandSpec, tol: float = 1e-12) -> QuadResult:
    """Integral of ``spec.f`` over (0, 1)."""
    return integrate(spec, 0.0, 1.0, tol)


def integrate_0x(spec: IntegrandSpec, x: float, tol: float = 1e-12) -> QuadResult:
    """Integral of ``spec.f`` over (0, x) for x in (0, 1].

    For x < 1 the right endpoint is interior to the original domain, so a
    ``singular_right`` hint only applies when x == 1.
    """
    if not (0.0 < x <= 1.0):
        raise DomainError(f"upper limit x={x!r} outside (0, 1]", param="x")
    if x < 1.0 and spec.singular_right:
        spec = IntegrandSpec(spec.f, spec.singular_left, False, spec.vectorized, spec.complement)
    return integrate(spec, 0.0, x, tol)
