"""Agreement between the series, t-quadrature and theta-quadrature backends.

    python scripts/backend_agreement.py [--samples 30] [--seed 31]
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from gelint import Backend, GciPoint, Which, eval_E, eval_K, eval_theta_form, validate_triple


@dataclass
class Config:
    samples: int = 30
    seed: int = 31
    kq_max_series: float = 0.9


def sample(rng: random.Random, cfg: Config):
    p = rng.choice(["inf", rng.uniform(-5.0, -0.5), rng.uniform(1.3, 5.0)])
    return validate_triple(p, rng.uniform(1.25, 4.0), rng.uniform(1.25, 4.0))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=30)
    ap.add_argument("--seed", type=int, default=31)
    args = ap.parse_args()
    cfg = Config(samples=args.samples, seed=args.seed)
    rng = random.Random(cfg.seed)

    series_gap = theta_gap = 0.0
    theta_time = 0.0
    theta_count = 0
    for _ in range(cfg.samples):
        triple = sample(rng, cfg)
        point = GciPoint.from_power(triple, rng.uniform(0.0, cfg.kq_max_series))
        for fn, which in ((eval_K, Which.K), (eval_E, Which.E)):
            t_form = fn(point, Backend.QUADRATURE_T).value
            series = fn(point, Backend.SERIES).value
            series_gap = max(series_gap, abs(series - t_form) / abs(t_form))
            if not triple.p.is_infinite:
                start = time.perf_counter()
                theta = eval_theta_form(point, which).value
                theta_time += time.perf_counter() - start
                theta_count += 1
                theta_gap = max(theta_gap, abs(theta - t_form) / abs(t_form))
    print(f"series vs t-form:  max relative gap {series_gap:.3e}")
    print(f"theta vs t-form:   max relative gap {theta_gap:.3e} "
          f"({theta_count} evaluations, {theta_time / max(theta_count, 1):.3f} s each)")


if __name__ == "__main__":
    main()
