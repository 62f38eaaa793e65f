"""Elliott's identity on an (a, b, c, x) grid, plus the bridge to the Legendre form.

    python scripts/elliott_grid.py

The bridge check maps (p, q, r, k) to (a, b, c, x) and confirms that
L(k) - rhs equals pi_{p,q} pi_{p,r} / 4 times the Elliott residual.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from gelint import (
    ElliottParams,
    elliott_bridge_factor,
    elliott_residual,
    legendre_residual,
    map_pqrk_to_elliott,
    validate_triple,
)


@dataclass
class Config:
    ac: list[float] = field(default_factory=lambda: list(np.linspace(-0.4, 0.4, 5)))
    b: list[float] = field(default_factory=lambda: [-0.4, 0.0, 0.5, 2.0, 10.0])
    x: list[float] = field(default_factory=lambda: [0.1, 0.3, 0.5, 0.7, 0.9])
    bridge_triples: list[tuple] = field(default_factory=lambda: [
        (2, 2, 2), (3, 2, 4), ("inf", 2, 3), (-2, 3, 1.5), (1.5, 1.25, 4)])
    bridge_k: list[float] = field(default_factory=lambda: [0.2, 0.5, 0.8])


def main(cfg: Config = Config()) -> None:
    start = time.perf_counter()
    worst = max(abs(elliott_residual(ElliottParams(float(a), b, float(c), x)))
                for a, b, c, x in itertools.product(cfg.ac, cfg.b, cfg.ac, cfg.x))
    n = len(cfg.ac) ** 2 * len(cfg.b) * len(cfg.x)
    print(f"Elliott grid: {n} points, max |residual| = {worst:.3e} "
          f"({time.perf_counter() - start:.2f} s)")

    gap = 0.0
    for trip, k in itertools.product(cfg.bridge_triples, cfg.bridge_k):
        triple = validate_triple(*trip)
        leg = legendre_residual(triple, k).residual
        ell = elliott_residual(map_pqrk_to_elliott(triple, k))
        gap = max(gap, abs(leg - elliott_bridge_factor(triple) * ell))
    print(f"bridge: max |L - rhs - factor * elliott| = {gap:.3e}")


if __name__ == "__main__":
    main()
