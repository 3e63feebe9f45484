"""Moduli of continuity and the net / restrict / extend approximation scheme.

A function f satisfies the *star condition* at level eps with constant C when

    |f(x) - f(y)| <= eps + C * d(x, y)     for all x, y.

Functions in the uniform closure of the Lipschitz functions are exactly those
admitting such a C for every eps.  :func:`lipschitz_approximant` turns a
(eps, C) pair into a Lipschitz function uniformly within 6*eps of f (4*eps
for real f) and records every intermediate constant in a certificate.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import NonpositiveInput, StarViolated
from .extension import (
    RestrictedFunction,
    SampledFunction,
    extend_complex,
    lipschitz_constant,
    mcshane_extend_real,
    pairwise_lipschitz,
)
from .metric import FiniteMetricSpace
from .nets import SeparatedNet, greedy_maximal_separated, verify_net

CHECK_TOL = 1e-9
DEFAULT_MARGIN = 1e-6


def _values(space: FiniteMetricSpace, f) -> np.ndarray:
    if isinstance(f, SampledFunction):
        if f.space is not space and f.space.n != space.n:
            raise ValueError("function lives on a different space")
        return f.values
    return SampledFunction(f, space).values


def _check_eps(epsilon: float) -> None:
    if not (np.isfinite(epsilon) and epsilon > 0):
        raise NonpositiveInput(f"epsilon must be positive, got {epsilon!r}")


def _pair(i, j) -> tuple[int, int]:
    return (int(min(i, j)), int(max(i, j)))


@dataclass(frozen=True)
class StarModulus:
    epsilon: float
    c_star: float
    witness_pair: Optional[tuple[int, int]]


@dataclass(frozen=True)
class UCModulus:
    epsilon: float
    delta: float
    no_violation: bool
    witness_pair: Optional[tuple[int, int]]


@dataclass(frozen=True)
class ModulusRow:
    epsilon: float
    star: StarModulus
    uc: UCModulus


@dataclass
class ModulusTable:
    rows: list[ModulusRow]

    @property
    def epsilons(self):
        return [r.epsilon for r in self.rows]

    @property
    def c_stars(self):
        return [r.star.c_star for r in self.rows]

    @property
    def deltas(self):
        return [r.uc.delta for r in self.rows]

    def is_monotone(self) -> bool:
        """c_star non-increasing and delta non-decreasing in epsilon, exactly."""
        order = np.argsort(self.epsilons, kind="stable")
        c = np.asarray(self.c_stars)[order]
        d = np.asarray(self.deltas)[order]
        return bool(np.all(np.diff(c) <= 0) and np.all(np.diff(d) >= 0))


def star_modulus(space: FiniteMetricSpace, f, epsilon: float) -> StarModulus:
    """Smallest C with |f(x)-f(y)| <= eps + C d(x,y) on every pair."""
    _check_eps(epsilon)
    v = _values(space, f)
    n = space.n
    if n < 2:
        return StarModulus(float(epsilon), 0.0, None)
    q = (np.abs(v[:, None] - v[None, :]) - epsilon) / np.where(space.dist > 0, space.dist, 1.0)
    np.fill_diagonal(q, -np.inf)
    i, j = np.unravel_index(np.argmax(q), q.shape)
    return StarModulus(float(epsilon), max(0.0, float(q[i, j])), _pair(i, j))


def star_modulus_table(space: FiniteMetricSpace, f, epsilons: Sequence[float]) -> ModulusTable:
    if len(epsilons) == 0:
        raise ValueError("no epsilon values given")
    rows = []
    for eps in epsilons:
        rows.append(ModulusRow(float(eps), star_modulus(space, f, eps), uc_modulus(space, f, eps)))
    return ModulusTable(rows)


def uc_modulus(space: FiniteMetricSpace, f, epsilon: float) -> UCModulus:
    """Largest delta such that d(x,y) < delta forces |f(x)-f(y)| < eps.

    When no pair changes by eps or more the diameter is returned with
    ``no_violation`` set (1.0 for a one-point space, so delta stays positive).
    """
    _check_eps(epsilon)
    v = _values(space, f)
    bad = np.abs(v[:, None] - v[None, :]) >= epsilon
    np.fill_diagonal(bad, False)
    if not bad.any():
        diam = space.diameter()
        return UCModulus(float(epsilon), diam if diam > 0 else 1.0, True, None)
    masked = np.where(bad, space.dist, np.inf)
    i, j = np.unravel_index(np.argmin(masked), masked.shape)
    return UCModulus(float(epsilon), float(masked[i, j]), False, _pair(i, j))


def prop2_constant(epsilon: float, delta: float) -> float:
    """eps / delta: the star constant a uniformly continuous function gets on
    a geodesic space by chaining steps shorter than delta."""
    if not (epsilon > 0 and delta > 0):
        raise NonpositiveInput(f"epsilon and delta must be positive, got {epsilon!r}, {delta!r}")
    return epsilon / delta


@dataclass(frozen=True)
class StarCheck:
    holds: bool
    violations: list[tuple[int, int]]
    worst_pair: Optional[tuple[int, int]]
    worst_excess: float  # max of |df| - eps - C d over pairs; <= tol when holds


def check_star(space: FiniteMetricSpace, f, epsilon: float, C: float, tol: float = CHECK_TOL) -> StarCheck:
    _check_eps(epsilon)
    if not C >= 0:
        raise NonpositiveInput(f"C must be non-negative, got {C!r}")
    v = _values(space, f)
    if space.n < 2:
        return StarCheck(True, [], None, -float(epsilon))
    excess = np.abs(v[:, None] - v[None, :]) - epsilon - C * space.dist
    np.fill_diagonal(excess, -np.inf)
    i, j = np.unravel_index(np.argmax(excess), excess.shape)
    iu, ju = np.nonzero(np.triu(excess > tol, k=1))
    violations = [(int(a), int(b)) for a, b in zip(iu, ju)]
    return StarCheck(not violations, violations, _pair(i, j), float(excess[i, j]))


@dataclass
class ApproximationCertificate:
    epsilon: float
    mode: str
    c_used: float
    t: Optional[float]  # None only for a one-point space
    net_size: int
    restriction_lip: float
    extension_lip_bound: float
    proven_sup_error: float
    achieved_sup_error: float
    measured_extension_lip: float
    net_indices: list[int] = field(default_factory=list)
    covering_radius: float = 0.0

    def failures(self, tol: float = CHECK_TOL) -> list[str]:
        out = []
        if self.restriction_lip > 2 * self.c_used + tol:
            out.append(f"restriction_lip {self.restriction_lip!r} > 2*c_used {2 * self.c_used!r}")
        if self.measured_extension_lip > self.extension_lip_bound + tol:
            out.append(
                f"measured_extension_lip {self.measured_extension_lip!r} > bound {self.extension_lip_bound!r}"
            )
        if self.achieved_sup_error > self.proven_sup_error + tol:
            out.append(f"achieved_sup_error {self.achieved_sup_error!r} > proven {self.proven_sup_error!r}")
        if self.t is not None and not self.covering_radius < self.t:
            out.append(f"covering_radius {self.covering_radius!r} >= t {self.t!r}")
        return out

    @property
    def ok(self) -> bool:
        return not self.failures()

    def to_dict(self) -> dict:
        return asdict(self)


def choose_constant(space: FiniteMetricSpace, f, epsilon: float, margin: float = DEFAULT_MARGIN) -> float:
    """c_star * (1 + margin), pushed above eps / diameter so that the net
    spacing eps / C stays below the diameter."""
    c = star_modulus(space, f, epsilon).c_star * (1.0 + margin)
    floor = epsilon / space.diameter()
    if c <= floor:
        c = floor * (1.0 + margin)
    return c


def lipschitz_approximant(
    space: FiniteMetricSpace,
    f,
    epsilon: float,
    c_override: Optional[float] = None,
    mode: str = "complex",
    margin: float = DEFAULT_MARGIN,
    tol: float = CHECK_TOL,
    seed_index: int = 0,
) -> tuple[SampledFunction, ApproximationCertificate]:
    """Lipschitz F with sup |F - f| below 6*eps (complex) or 4*eps (real).

    With C the star constant at level eps and t = eps / C: take a maximal
    t-separated net S seeded at ``seed_index``; f restricted to S is 2C-Lipschitz,
    so McShane-extending it with its measured constant (each component
    separately in complex mode) gives constant at most 2C, or 4C complex.
    """
    _check_eps(epsilon)
    if mode not in ("real", "complex"):
        raise ValueError(f"mode must be 'real' or 'complex', got {mode!r}")
    v = _values(space, f)
    if mode == "real":
        if np.iscomplexobj(v) and np.any(v.imag):
            raise ValueError("real mode needs real-valued f")
        v = v.real.astype(float)
    if c_override is not None and not (np.isfinite(c_override) and c_override > 0):
        raise NonpositiveInput(f"c_override must be positive, got {c_override!r}")
    lip_factor, err_factor = (2.0, 4.0) if mode == "real" else (4.0, 6.0)

    if space.n == 1:
        c = float(c_override) if c_override is not None else 0.0
        F = SampledFunction(v.copy(), space)
        cert = ApproximationCertificate(
            epsilon=float(epsilon), mode=mode, c_used=c, t=None, net_size=1,
            restriction_lip=0.0, extension_lip_bound=lip_factor * c,
            proven_sup_error=err_factor * epsilon, achieved_sup_error=0.0,
            measured_extension_lip=0.0, net_indices=[0], covering_radius=0.0,
        )
        return F, cert

    if c_override is not None:
        check = check_star(space, v, epsilon, c_override, tol)
        if not check.holds:
            raise StarViolated(epsilon, c_override, check.worst_pair, check.worst_excess)
        c = float(c_override)
    else:
        c = choose_constant(space, v, epsilon, margin)

    t = epsilon / c
    net = greedy_maximal_separated(space, t, seed_indices=(seed_index,))
    S = RestrictedFunction(net.indices, v[net.indices])
    restriction_lip = lipschitz_constant(S, space)
    # restriction_lip <= 2c by separation; extending with it rather than 2c
    # keeps every bound and leaves already-flat data untouched
    if mode == "real":
        F = mcshane_extend_real(space, S, restriction_lip)
    else:
        F = extend_complex(space, S, restriction_lip)
    cert = ApproximationCertificate(
        epsilon=float(epsilon),
        mode=mode,
        c_used=c,
        t=t,
        net_size=len(net),
        restriction_lip=restriction_lip,
        extension_lip_bound=lip_factor * c,
        proven_sup_error=err_factor * epsilon,
        achieved_sup_error=float(np.max(np.abs(F.values - v))),
        measured_extension_lip=pairwise_lipschitz(F.values, space.dist),
        net_indices=list(net.indices),
        covering_radius=net.covering_radius,
    )
    return F, cert


@dataclass(frozen=True)
class GrowthReport:
    holds: bool
    worst_index: int
    worst_slack: float  # min over x of eps + C d(a,x) - |f(x) - f(a)|
    violations: list[int]


def growth_bound_check(space: FiniteMetricSpace, f, base_index: int, epsilon: float, C: float,
                       tol: float = CHECK_TOL) -> GrowthReport:
    """Check |f(x) - f(a)| <= eps + C d(a, x) for every x."""
    _check_eps(epsilon)
    if not 0 <= base_index < space.n:
        raise IndexError(f"base index {base_index} outside 0..{space.n - 1}")
    v = _values(space, f)
    slack = epsilon + C * space.dist[base_index] - np.abs(v - v[base_index])
    k = int(np.argmin(slack))
    bad = [int(i) for i in np.flatnonzero(slack < -tol)]
    return GrowthReport(not bad, k, float(slack[k]), bad)


def verify_certificate_net(space: FiniteMetricSpace, cert: ApproximationCertificate) -> bool:
    """Re-check separation and covering of the net recorded in a certificate."""
    if cert.t is None:
        return True
    return verify_net(space, SeparatedNet(cert.t, cert.net_indices, cert.covering_radius)).ok
