"""Random test corpora and brute-force oracles shared by the test modules."""

import itertools
import math

import numpy as np

from lipapprox import euclidean_space, graph_space, poincare_disk_space
from lipapprox.cli import random_connected_graph
from lipapprox.metric import sample_unit_disk

KINDS = ("euclidean", "graph", "poincare_disk")


def random_space(rng, kind, n):
    if kind == "euclidean":
        return euclidean_space(rng.random((n, int(rng.integers(1, 4)))))
    if kind == "graph":
        return graph_space(n, random_connected_graph(n, float(rng.uniform(2, 6)), rng))
    return poincare_disk_space(0.95 * sample_unit_disk(n, rng), scale=float(rng.choice([1.0, 2.0])))


def corpus(seed, count, n_max=200, n_min=2):
    """``count`` random spaces cycling through the three kinds."""
    rng = np.random.default_rng(seed)
    for k in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        yield rng, random_space(rng, KINDS[k % 3], n)


def brute_lipschitz(values, dist):
    best = 0.0
    for i, j in itertools.combinations(range(len(values)), 2):
        best = max(best, abs(values[i] - values[j]) / dist[i][j])
    return best


def brute_star(values, dist, eps):
    best = 0.0
    for i, j in itertools.combinations(range(len(values)), 2):
        best = max(best, (abs(values[i] - values[j]) - eps) / dist[i][j])
    return best


def floyd_warshall(n, edges):
    d = [[0.0 if i == j else math.inf for j in range(n)] for i in range(n)]
    for u, v, w in edges:
        if w < d[u][v]:
            d[u][v] = d[v][u] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return np.array(d)


def random_lipschitz(rng, space, complex_valued=False, n_anchors=4):
    """Sum of weighted distances to random anchors plus a constant; returns
    values whose exact discrete Lipschitz constant is measured by the caller."""
    anchors = rng.integers(space.n, size=n_anchors)
    w = rng.normal(size=n_anchors)
    if complex_valued:
        w = w + 1j * rng.normal(size=n_anchors)
    return (w[:, None] * space.dist[anchors]).sum(axis=0) + rng.normal()
