"""McShane extension of Lipschitz functions from a subset to the whole space."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import CTooSmall, DimensionMismatch, EmptySubset, IndexOutOfRange
from .metric import FiniteMetricSpace

# relative slack when comparing C against a measured constant
C_RTOL = 1e-12


def _as_values(values) -> np.ndarray:
    v = np.asarray(values)
    if v.dtype.kind not in "fc":
        v = v.astype(float)
    if v.ndim != 1:
        raise DimensionMismatch("function values must be one-dimensional")
    if not np.all(np.isfinite(v)):
        raise ValueError("function values must be finite")
    return v


@dataclass
class SampledFunction:
    """Values of f at every point of ``space``; real or complex dtype."""

    values: np.ndarray
    space: FiniteMetricSpace

    def __post_init__(self):
        self.values = _as_values(self.values)
        if self.values.shape[0] != self.space.n:
            raise DimensionMismatch(f"{self.values.shape[0]} values for {self.space.n} points")

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.values) or not np.any(self.values.imag)

    def restrict(self, indices: Sequence[int]) -> "RestrictedFunction":
        idx = np.asarray(indices, dtype=int)
        return RestrictedFunction(idx, self.values[idx])


@dataclass
class RestrictedFunction:
    indices: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.indices = np.asarray(self.indices, dtype=int).reshape(-1)
        self.values = _as_values(self.values)
        if self.values.shape[0] != self.indices.shape[0]:
            raise DimensionMismatch(f"{self.values.shape[0]} values for {self.indices.shape[0]} indices")
        if np.unique(self.indices).size != self.indices.size:
            raise ValueError("restricted indices must be distinct")

    def __len__(self):
        return self.indices.size

    def check_indices(self, space: FiniteMetricSpace) -> None:
        if self.indices.size and (self.indices.min() < 0 or self.indices.max() >= space.n):
            raise IndexOutOfRange(f"index outside 0..{space.n - 1}")


FunctionLike = Union[SampledFunction, RestrictedFunction]


def pairwise_lipschitz(values: np.ndarray, dist: np.ndarray) -> float:
    """max |v_i - v_j| / dist_ij over i != j (0 for fewer than two points)."""
    n = values.shape[0]
    if n < 2:
        return 0.0
    diff = np.abs(values[:, None] - values[None, :])
    off = ~np.eye(n, dtype=bool)
    if np.any(dist[off] <= 0):
        raise ValueError("distinct points at distance 0")
    return float(np.max(diff[off] / dist[off]))


def lipschitz_constant(f: FunctionLike, space: FiniteMetricSpace = None) -> float:
    if isinstance(f, SampledFunction):
        return pairwise_lipschitz(f.values, f.space.dist)
    if space is None:
        raise ValueError("a restricted function needs its space")
    f.check_indices(space)
    return pairwise_lipschitz(f.values, space.dist[np.ix_(f.indices, f.indices)])


def _prepare(space: FiniteMetricSpace, S: RestrictedFunction, C: float, real: bool):
    if len(S) == 0:
        raise EmptySubset("cannot extend from an empty subset")
    S.check_indices(space)
    if not (np.isfinite(C) and C >= 0):
        raise ValueError(f"C must be a finite non-negative number, got {C!r}")
    vals = S.values
    if real:
        if np.iscomplexobj(vals):
            if np.any(vals.imag):
                raise ValueError("real extension got complex values; use extend_complex")
            vals = vals.real
        vals = vals.astype(float)
    need = lipschitz_constant(S, space)
    if need > C * (1 + C_RTOL):
        raise CTooSmall(C, need)
    return vals, space.dist[:, S.indices]


def mcshane_extend_real(space: FiniteMetricSpace, S: RestrictedFunction, C: float) -> SampledFunction:
    """F(x) = min_s f(s) + C d(x, s): the largest C-Lipschitz extension."""
    vals, D = _prepare(space, S, C, real=True)
    return SampledFunction(np.min(vals[None, :] + C * D, axis=1), space)


def mcshane_extend_real_min(space: FiniteMetricSpace, S: RestrictedFunction, C: float) -> SampledFunction:
    """G(x) = max_s f(s) - C d(x, s): the smallest C-Lipschitz extension."""
    vals, D = _prepare(space, S, C, real=True)
    return SampledFunction(np.max(vals[None, :] - C * D, axis=1), space)


def extend_complex(space: FiniteMetricSpace, S: RestrictedFunction, C: float) -> SampledFunction:
    """Extend real and imaginary parts separately with constant C.

    The result is sqrt(2)*C-Lipschitz, which is within the 2C usually quoted
    for this construction.
    """
    vals, _ = _prepare(space, S, C, real=False)
    if not np.iscomplexobj(vals):
        return mcshane_extend_real(space, S, C)
    U = mcshane_extend_real(space, RestrictedFunction(S.indices, vals.real), C)
    V = mcshane_extend_real(space, RestrictedFunction(S.indices, vals.imag), C)
    return SampledFunction(U.values + 1j * V.values, space)
