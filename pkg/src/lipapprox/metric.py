"""Finite metric spaces: explicit matrices, Euclidean clouds, graph path
metrics and samples of the hyperbolic unit disk."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra
from scipy.spatial.distance import pdist, squareform

from .errors import (
    AsymmetricMatrix,
    DimensionMismatch,
    DisconnectedGraph,
    DuplicatePoint,
    EmptySpace,
    InvalidP,
    NegativeDistance,
    NonFiniteDistance,
    NonpositiveWeight,
    NonSquareMatrix,
    NonzeroDiagonal,
    NotAMetric,
    PointOnOrOutsideBoundary,
)

TOL_METRIC = 1e-9

KINDS = ("matrix", "euclidean", "graph", "poincare_disk")


@dataclass(frozen=True)
class ValidationReport:
    is_metric: bool
    worst_triangle_violation: float
    worst_triple: Optional[tuple[int, int, int]]  # (i, j, k): d[i,j] > d[i,k] + d[k,j]
    duplicate_pairs: list[tuple[int, int]]
    tol: float


@dataclass(frozen=True)
class DiskPoint:
    re: float
    im: float

    def __post_init__(self):
        if not np.isfinite(self.re) or not np.isfinite(self.im) or self.re**2 + self.im**2 >= 1.0:
            raise PointOnOrOutsideBoundary(f"({self.re}, {self.im}) is not inside the open unit disk")

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, z: complex) -> "DiskPoint":
        z = complex(z)
        return cls(z.real, z.imag)


@dataclass
class FiniteMetricSpace:
    """n points with an n x n distance matrix.

    Constructors other than :func:`matrix_space` keep the data they were built
    from (``coords``, ``edges`` or ``points``/``scale``) so the space can be
    written back out in its original form.
    """

    dist: np.ndarray
    origin_kind: str = "matrix"
    labels: Optional[list] = None
    coords: Optional[np.ndarray] = None
    edges: Optional[list[tuple[int, int, float]]] = None
    points: Optional[np.ndarray] = None  # complex
    scale: Optional[float] = None
    _diameter: Optional[float] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.dist = np.asarray(self.dist, dtype=float)
        if self.origin_kind not in KINDS:
            raise ValueError(f"unknown origin_kind {self.origin_kind!r}")
        _check_basic(self.dist)
        if self.dist.shape[0] == 0:
            raise EmptySpace("a metric space needs at least one point")
        if self.labels is not None and len(self.labels) != self.n:
            raise DimensionMismatch(f"{len(self.labels)} labels for {self.n} points")
        dups = _duplicate_pairs(self.dist)
        if dups:
            i, j = dups[0]
            raise DuplicatePoint(f"points {i} and {j} are at distance 0")

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def __len__(self):
        return self.n

    def diameter(self) -> float:
        if self._diameter is None:
            self._diameter = float(self.dist.max())
        return self._diameter

    def validate(self, tol_metric: float = TOL_METRIC) -> ValidationReport:
        return validate_metric(self.dist, tol_metric)


def _check_basic(dist: np.ndarray) -> None:
    if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
        raise NonSquareMatrix(f"distance matrix has shape {dist.shape}")
    if not np.all(np.isfinite(dist)):
        raise NonFiniteDistance("distance matrix has non-finite entries")
    if np.any(dist < 0):
        i, j = np.argwhere(dist < 0)[0]
        raise NegativeDistance(f"dist[{i}][{j}] = {dist[i, j]!r} < 0")
    if np.any(np.diag(dist) != 0):
        i = int(np.flatnonzero(np.diag(dist))[0])
        raise NonzeroDiagonal(f"dist[{i}][{i}] = {dist[i, i]!r}")
    if not np.array_equal(dist, dist.T):
        i, j = np.argwhere(dist != dist.T)[0]
        raise AsymmetricMatrix(f"dist[{i}][{j}] != dist[{j}][{i}]")


def _duplicate_pairs(dist: np.ndarray) -> list[tuple[int, int]]:
    iu, ju = np.nonzero(np.triu(dist == 0, k=1))
    return [(int(i), int(j)) for i, j in zip(iu, ju)]


def validate_metric(dist, tol_metric: float = TOL_METRIC) -> ValidationReport:
    """Check every triple for the triangle inequality.

    Symmetry, zero diagonal, sign and shape failures raise.  The tolerance is
    relative: a triple counts as a violation only if it exceeds
    ``tol_metric * diameter``.
    """
    dist = np.asarray(dist, dtype=float)
    _check_basic(dist)
    n = dist.shape[0]
    worst = 0.0
    worst_triple = None
    for k in range(n):
        excess = dist - (dist[:, k, None] + dist[None, k, :])
        idx = int(np.argmax(excess))
        if excess.flat[idx] > worst:
            worst = float(excess.flat[idx])
            i, j = divmod(idx, n)
            worst_triple = (i, j, k)
    tol = tol_metric * (float(dist.max()) if n else 0.0)
    dups = _duplicate_pairs(dist)
    return ValidationReport(
        is_metric=worst <= tol and not dups,
        worst_triangle_violation=worst,
        worst_triple=worst_triple,
        duplicate_pairs=dups,
        tol=tol,
    )


def matrix_space(dist, labels=None, tol_metric: float = TOL_METRIC) -> FiniteMetricSpace:
    """Wrap an explicit distance matrix, rejecting it unless it is a metric."""
    report = validate_metric(dist, tol_metric)
    if report.duplicate_pairs:
        i, j = report.duplicate_pairs[0]
        raise DuplicatePoint(f"points {i} and {j} are at distance 0")
    if not report.is_metric:
        i, j, k = report.worst_triple
        raise NotAMetric(
            f"triangle inequality fails at ({i}, {j}) via {k} by {report.worst_triangle_violation!r}"
        )
    return FiniteMetricSpace(np.array(dist, dtype=float), "matrix", labels=labels)


def euclidean_space(coords, labels=None) -> FiniteMetricSpace:
    try:
        X = np.array(coords, dtype=float)
    except ValueError as exc:
        raise DimensionMismatch("coordinate vectors have differing dimensions") from exc
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2:
        raise DimensionMismatch("coords must be a list of equal-length vectors")
    if X.shape[0] == 0:
        raise EmptySpace("no points")
    dist = squareform(pdist(X)) if X.shape[0] > 1 else np.zeros((1, 1))
    return FiniteMetricSpace(dist, "euclidean", labels=labels, coords=X)


def graph_space(n: int, edges: Sequence[Sequence[float]], labels=None) -> FiniteMetricSpace:
    """Shortest-path metric of a connected, positively weighted graph."""
    if n < 1:
        raise EmptySpace("graph needs at least one node")
    best: dict[tuple[int, int], float] = {}
    clean = []
    for e in edges:
        u, v, w = int(e[0]), int(e[1]), float(e[2])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) references a node outside 0..{n - 1}")
        if not w > 0 or not np.isfinite(w):
            raise NonpositiveWeight(f"edge ({u}, {v}) has weight {w!r}")
        clean.append((u, v, w))
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        # csr_matrix would sum parallel edges; keep the lightest one
        best[key] = min(w, best.get(key, np.inf))
    if best:
        rows, cols = zip(*best)
        graph = csr_matrix((list(best.values()), (rows, cols)), shape=(n, n))
    else:
        graph = csr_matrix((n, n))
    dist = dijkstra(graph, directed=False)
    if not np.all(np.isfinite(dist)):
        i, j = np.argwhere(~np.isfinite(dist))[0]
        raise DisconnectedGraph(f"no path between nodes {i} and {j}")
    dist = np.minimum(dist, dist.T)
    return FiniteMetricSpace(dist, "graph", labels=labels, edges=clean)


def _as_complex(points) -> np.ndarray:
    out = []
    for p in points:
        if isinstance(p, DiskPoint):
            out.append(p.z)
        elif isinstance(p, (complex, float, int, np.number)):
            out.append(complex(p))
        else:
            re, im = p
            out.append(complex(re, im))
    z = np.array(out, dtype=complex).reshape(-1)
    if not np.all(np.isfinite(z)) or np.any(np.abs(z) >= 1.0):
        raise PointOnOrOutsideBoundary("all points must lie strictly inside the unit disk")
    return z


def _pseudo_hyperbolic(z, w):
    return np.abs(z - w) / np.abs(1.0 - np.conj(z) * w)


def hyperbolic_distance(z, w, scale: float = 1.0) -> float:
    """scale * artanh(|z - w| / |1 - conj(z) w|) on the open unit disk.

    ``scale=1`` is the curvature -4 normalisation; ``scale=2`` gives the
    Bergman metric of the disk.
    """
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale!r}")
    z, w = _as_complex([z, w])
    return float(scale * np.arctanh(_pseudo_hyperbolic(z, w)))


def poincare_disk_space(points, scale: float = 1.0, labels=None) -> FiniteMetricSpace:
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale!r}")
    z = _as_complex(points)
    if z.size == 0:
        raise EmptySpace("no points")
    upper = np.triu(scale * np.arctanh(_pseudo_hyperbolic(z[:, None], z[None, :])), k=1)
    dist = upper + upper.T
    return FiniteMetricSpace(dist, "poincare_disk", labels=labels, points=z, scale=float(scale))


def diameter(space: FiniteMetricSpace) -> float:
    return space.diameter()


def sample_unit_disk(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform-by-area points of the open unit disk (radius = sqrt(u))."""
    r = np.sqrt(rng.random(n))
    theta = 2.0 * np.pi * rng.random(n)
    return r * np.exp(1j * theta)


def disk_moment_samples(p: float, n_samples: int, rng_seed: int) -> np.ndarray:
    if not (np.isfinite(p) and p > 0):
        raise InvalidP(f"p must be positive, got {p!r}")
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    rng = np.random.default_rng(rng_seed)
    z = sample_unit_disk(n_samples, rng)
    return np.arctanh(np.abs(z)) ** p


def disk_moment_estimate(p: float, n_samples: int, rng_seed: int) -> float:
    """Monte-Carlo mean of artanh(|z|)**p over the unit disk with normalised
    area measure (the p-th moment of the scale-1 distance from the origin)."""
    return float(disk_moment_samples(p, n_samples, rng_seed).mean())


def disk_moment_with_error(p: float, n_samples: int, rng_seed: int) -> tuple[float, float]:
    """Like :func:`disk_moment_estimate` plus the sample standard error."""
    v = disk_moment_samples(p, n_samples, rng_seed)
    se = float(v.std(ddof=1) / np.sqrt(v.size)) if v.size > 1 else float("nan")
    return float(v.mean()), se


def disk_comparison_ratios(n_pairs: int, rng_seed: int) -> np.ndarray:
    """|z - w| / beta(z, w) (scale 1) over random pairs; bounded by 2."""
    rng = np.random.default_rng(rng_seed)
    z = sample_unit_disk(n_pairs, rng)
    w = sample_unit_disk(n_pairs, rng)
    keep = z != w
    z, w = z[keep], w[keep]
    return np.abs(z - w) / np.arctanh(_pseudo_hyperbolic(z, w))
