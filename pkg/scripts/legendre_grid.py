"""Residual of the generalized Legendre relation over a (p, q, r, k) grid.

    python scripts/legendre_grid.py [--out legendre.csv] [--jobs 4]

Prints the worst point and the worst residual relative to the local error
estimate; optionally writes every row as CSV.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from gelint import legendre_residual, validate_triple


@dataclass
class Config:
    p: list = field(default_factory=lambda: [-3.0, -1.5, 1.5, 2.0, 3.0, 5.0, "inf"])
    q: list[float] = field(default_factory=lambda: [1.25, 2.0, 3.0])
    r: list[float] = field(default_factory=lambda: [1.5, 2.0, 4.0])
    k: list[float] = field(default_factory=lambda: [0.1, 0.3, 0.5, 0.7, 0.9])
    tol: float = 1e-12
    jobs: int = 1


def run(cfg: Config) -> list[dict]:
    points = list(itertools.product(cfg.p, cfg.q, cfg.r, cfg.k))

    def one(pt):
        p, q, r, k = pt
        rep = legendre_residual(validate_triple(p, q, r), k, cfg.tol)
        return {"p": p, "q": q, "r": r, "k": k, "rhs": rep.rhs, "residual": rep.residual,
                "err_estimate": rep.err_estimate}

    with ThreadPoolExecutor(max_workers=max(cfg.jobs, 1)) as pool:
        return list(pool.map(one, points))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--tol", type=float, default=1e-12)
    args = ap.parse_args()
    cfg = Config(tol=args.tol, jobs=args.jobs)
    start = time.perf_counter()
    rows = run(cfg)
    elapsed = time.perf_counter() - start
    worst = max(rows, key=lambda row: abs(row["residual"]) / (1 + row["rhs"]))
    ratio = max(abs(row["residual"]) / row["err_estimate"] for row in rows)
    print(f"{len(rows)} points in {elapsed:.2f} s")
    print(f"max |residual|/(1+rhs) = {abs(worst['residual']) / (1 + worst['rhs']):.3e} at "
          f"p={worst['p']} q={worst['q']} r={worst['r']} k={worst['k']}")
    print(f"max |residual|/err_estimate = {ratio:.3f}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)


if __name__ == "__main__":
    main()
