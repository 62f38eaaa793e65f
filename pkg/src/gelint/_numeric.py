"""Vectorized kernels shared by the integral-form evaluators."""

from __future__ import annotations

import numpy as np


def one_minus_pow(t, comp, q: float):
    """1 - t**q, using the exact complement ``comp = 1 - t`` where t is near 1."""
    t = np.asarray(t, dtype=float)
    comp = np.asarray(comp, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        near_one = -np.expm1(q * np.log1p(-comp))
    return np.where(comp < 0.5, near_one, 1.0 - t ** q)


def pow_or_one(base, exponent: float):
    """base**exponent with the exponent-zero case returning exact ones."""
    if exponent == 0.0:
        return np.ones_like(base)
    return base ** exponent
