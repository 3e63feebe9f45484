"""Maximal t-separated subsets built by a single greedy scan."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import EmptySpace, IndexOutOfRange, SeedsTooClose
from .metric import FiniteMetricSpace


@dataclass(frozen=True)
class SeparatedNet:
    t: float
    indices: list[int]
    covering_radius: float

    def __len__(self):
        return len(self.indices)


@dataclass(frozen=True)
class NetReport:
    separation_ok: bool
    covering_ok: bool
    worst_pair: Optional[tuple[int, int]]  # closest pair of net points
    worst_uncovered: int  # point farthest from the net
    min_separation: float
    covering_radius: float

    @property
    def ok(self) -> bool:
        return self.separation_ok and self.covering_ok


def greedy_maximal_separated(
    space: FiniteMetricSpace, t: float, seed_indices: Sequence[int] = (0,)
) -> SeparatedNet:
    """Grow ``seed_indices`` into a maximal t-separated set.

    Points are scanned in ascending index order and kept when they are at
    distance >= t from everything kept so far.  Afterwards every point lies
    at distance < t from the net.
    """
    if space.n == 0:
        raise EmptySpace("cannot build a net in an empty space")
    if not t > 0:
        raise ValueError(f"t must be positive, got {t!r}")
    D = space.dist
    seeds = [int(s) for s in seed_indices]
    for s in seeds:
        if not 0 <= s < space.n:
            raise IndexOutOfRange(f"seed {s} outside 0..{space.n - 1}")
    if len(set(seeds)) != len(seeds):
        raise ValueError("seed indices repeat")
    for a in range(len(seeds)):
        for b in range(a + 1, len(seeds)):
            d = D[seeds[a], seeds[b]]
            if d < t:
                raise SeedsTooClose((seeds[a], seeds[b]), float(d), t)

    indices = list(seeds)
    if indices:
        nearest = D[indices].min(axis=0)
    else:
        nearest = np.full(space.n, np.inf)
    for i in range(space.n):
        if nearest[i] >= t:
            indices.append(i)
            np.minimum(nearest, D[i], out=nearest)
    return SeparatedNet(t=float(t), indices=indices, covering_radius=float(nearest.max()))


def verify_net(space: FiniteMetricSpace, net: SeparatedNet) -> NetReport:
    idx = np.asarray(net.indices, dtype=int)
    if idx.size == 0:
        raise ValueError("net is empty")
    if idx.min() < 0 or idx.max() >= space.n:
        raise IndexOutOfRange(f"net index outside 0..{space.n - 1}")
    D = space.dist
    sub = D[np.ix_(idx, idx)].copy()
    np.fill_diagonal(sub, np.inf)
    if idx.size > 1:
        a, b = np.unravel_index(np.argmin(sub), sub.shape)
        min_sep = float(sub[a, b])
        worst_pair = tuple(sorted((int(idx[a]), int(idx[b]))))
    else:
        min_sep = np.inf
        worst_pair = None
    nearest = D[idx].min(axis=0)
    far = int(np.argmax(nearest))
    cover = float(nearest[far])
    return NetReport(
        separation_ok=bool(min_sep >= net.t),
        covering_ok=bool(cover < net.t),
        worst_pair=worst_pair,
        worst_uncovered=far,
        min_separation=min_sep,
        covering_radius=cover,
    )
