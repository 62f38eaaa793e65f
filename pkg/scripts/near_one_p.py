"""How close to p = 1 the t-quadrature still converges.

    python scripts/near_one_p.py

For 1/p -> 1 the integrand (1 - t^q)^(-1/p) keeps most of its mass below the
smallest representable distance to t = 1.  The integrator extrapolates that
mass from a power-law fit; this sweep shows where the estimate stops meeting
the tolerance and a ConvergenceError is raised instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gelint import Backend, ConvergenceError, GciPoint, eval_K, validate_triple


@dataclass
class Config:
    p: list[float] = field(default_factory=lambda: [1.2, 1.05, 1.02, 1.01, 1.005, 1.002, 1.001])
    q: float = 2.0
    r: float = 3.0
    kq: list[float] = field(default_factory=lambda: [0.3, 0.9, 0.99])


def main(cfg: Config = Config()) -> None:
    print(f"{'p':>7} {'k^q':>5} {'series':>22} {'t-form':>22} {'rel gap':>9}")
    for p in cfg.p:
        triple = validate_triple(p, cfg.q, cfg.r)
        for kq in cfg.kq:
            point = GciPoint.from_power(triple, kq)
            series = eval_K(point, Backend.SERIES).value
            try:
                quad = eval_K(point, Backend.QUADRATURE_T).value
                gap = f"{abs(quad - series) / series:9.1e}"
                quad_s = f"{quad:22.15g}"
            except ConvergenceError:
                quad_s, gap = f"{'no convergence':>22}", f"{'-':>9}"
            print(f"{p:7.4g} {kq:5.2f} {series:22.15g} {quad_s} {gap}")


if __name__ == "__main__":
    main()
