"""Does the choice of net matter for the achieved (not proven) error?

Runs the approximation with every seed point on random spaces and reports the
spread of achieved sup error relative to the proven bound.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from lipapprox import euclidean_space, graph_space, lipschitz_approximant, poincare_disk_space
from lipapprox.cli import random_connected_graph
from lipapprox.metric import sample_unit_disk


@dataclass
class Config:
    n: int = 120
    trials: int = 5
    epsilon: float = 0.3
    seeds_per_space: int = 20
    seed: int = 0


def make_spaces(cfg, rng):
    for _ in range(cfg.trials):
        yield "euclidean", euclidean_space(rng.random((cfg.n, 2)))
        yield "graph", graph_space(cfg.n, random_connected_graph(cfg.n, 4.0, rng))
        yield "poincare", poincare_disk_space(0.95 * sample_unit_disk(cfg.n, rng))


def run(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    print(f"{'space':>10} {'min err/6e':>11} {'max err/6e':>11} {'min |S|':>8} {'max |S|':>8}")
    for kind, space in make_spaces(cfg, rng):
        f = np.sin(3 * space.dist[0]) + 1j * np.sqrt(space.dist[-1]) + rng.uniform(-0.05, 0.05, space.n)
        errs, sizes = [], []
        for s in rng.choice(space.n, size=min(cfg.seeds_per_space, space.n), replace=False):
            _, cert = lipschitz_approximant(space, f, cfg.epsilon, seed_index=int(s))
            assert cert.ok, cert.failures()
            errs.append(cert.achieved_sup_error / cert.proven_sup_error)
            sizes.append(cert.net_size)
        print(f"{kind:>10} {min(errs):11.4f} {max(errs):11.4f} {min(sizes):8d} {max(sizes):8d}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--epsilon", type=float, default=Config.epsilon)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    run(Config(n=a.n, trials=a.trials, epsilon=a.epsilon, seed=a.seed))
