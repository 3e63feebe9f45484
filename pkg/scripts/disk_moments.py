"""Monte-Carlo moments of the disk distance from the origin against 1-D
quadrature, plus the Euclidean / hyperbolic comparison ratio."""

import argparse
import math
from dataclasses import dataclass, field

from scipy import integrate

from lipapprox.metric import disk_comparison_ratios, disk_moment_with_error


@dataclass
class Config:
    ps: list = field(default_factory=lambda: [0.5, 1.0, 2.0, 4.0, 8.0])
    n_samples: int = 1_000_000
    n_pairs: int = 100_000
    seed: int = 0


def radial_moment(p):
    # normalised area measure: 2 r dr
    return integrate.quad(lambda r: 2 * r * math.atanh(r) ** p, 0, 1, limit=200)[0]


def run(cfg: Config):
    print(f"{'p':>5} {'monte carlo':>12} {'stderr':>9} {'quadrature':>11} {'z-score':>8}")
    for k, p in enumerate(cfg.ps):
        mean, se = disk_moment_with_error(p, cfg.n_samples, cfg.seed + k)
        exact = radial_moment(p)
        print(f"{p:5.2f} {mean:12.6f} {se:9.6f} {exact:11.6f} {(mean - exact) / se:8.2f}")
    r = disk_comparison_ratios(cfg.n_pairs, cfg.seed + len(cfg.ps))
    print(f"max |z-w|/beta(z,w) over {r.size} pairs: {r.max():.6f} (bound 2)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=float, action="append")
    ap.add_argument("--n-samples", type=int, default=Config.n_samples)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = Config(n_samples=a.n_samples, seed=a.seed)
    if a.p:
        cfg.ps = a.p
    run(cfg)
