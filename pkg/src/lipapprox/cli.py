"""Command-line driver.

Exit codes: 0 when every check passed, 1 on a mathematical violation
(non-metric input, C too small, star condition failing, broken certificate),
2 on usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from . import approx, extension, files, metric, nets
from .errors import LipApproxError, MathematicalViolation, StarViolated

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

GEN_KINDS = ("euclidean-random", "grid-1d", "graph-random", "poincare-random")
SAMPLE_FUNCTIONS = ("sqrt", "dist0", "square", "sin")


class UsageError(Exception):
    pass


@dataclass
class ExperimentConfig:
    space_path: str
    function_path: str
    epsilons: list[float]
    mode: str = "complex"
    seed: int = 0
    output_path: str = "certificates.json"
    emit_csv: bool = False
    c_override: Optional[float] = None
    include_values: bool = False

    def __post_init__(self):
        if not self.space_path or not self.function_path or not self.output_path:
            raise UsageError("space, function and output paths must be non-empty")
        if not self.epsilons:
            raise UsageError("at least one --epsilon is required")
        if any(not (np.isfinite(e) and e > 0) for e in self.epsilons):
            raise UsageError(f"epsilons must be positive, got {self.epsilons}")
        self.epsilons = sorted(float(e) for e in self.epsilons)
        if self.mode not in ("real", "complex"):
            raise UsageError(f"mode must be real or complex, got {self.mode!r}")


# -- generation ---------------------------------------------------------------

def random_connected_graph(n: int, avg_degree: float, rng: np.random.Generator) -> list[tuple[int, int, float]]:
    """Random spanning tree plus uniformly chosen extra edges up to the
    requested average degree; weights uniform in [0.5, 1.5)."""
    if n < 1:
        raise UsageError("graph needs n >= 1")
    edges = {}
    order = rng.permutation(n)
    for k in range(1, n):
        u, v = int(order[k]), int(order[rng.integers(k)])
        edges[(min(u, v), max(u, v))] = None
    target = min(int(round(n * avg_degree / 2)), n * (n - 1) // 2)
    while len(edges) < target:
        u, v = (int(x) for x in rng.integers(n, size=2))
        if u != v:
            edges[(min(u, v), max(u, v))] = None
    return [(u, v, float(w)) for (u, v), w in zip(sorted(edges), rng.uniform(0.5, 1.5, size=len(edges)))]


def generate_space(kind: str, n: int, seed: int, dim: int = 2, avg_degree: float = 4.0,
                   scale: float = 1.0, radius: float = 0.95) -> metric.FiniteMetricSpace:
    rng = np.random.default_rng(seed)
    if n < 1:
        raise UsageError("n must be at least 1")
    if kind == "grid-1d":
        return metric.euclidean_space((np.arange(n) / (n - 1))[:, None] if n > 1 else [[0.0]])
    if kind == "euclidean-random":
        return metric.euclidean_space(rng.random((n, dim)))
    if kind == "graph-random":
        return metric.graph_space(n, random_connected_graph(n, avg_degree, rng))
    if kind == "poincare-random":
        if not 0 < radius < 1:
            raise UsageError("radius must lie in (0, 1)")
        return metric.poincare_disk_space(radius * metric.sample_unit_disk(n, rng), scale=scale)
    raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(GEN_KINDS)}")


def sample_function(name: str, space: metric.FiniteMetricSpace) -> np.ndarray:
    """Simple test functions: sqrt and sin of the first coordinate (Euclidean
    spaces only), distance to point 0 and its square."""
    d0 = space.dist[0]
    if name == "dist0":
        return d0.copy()
    if name == "square":
        return d0**2
    if space.coords is None:
        raise UsageError(f"sample function {name!r} needs a Euclidean space")
    x = space.coords[:, 0]
    if name == "sqrt":
        if np.any(x < 0):
            raise UsageError("sqrt needs non-negative coordinates")
        return np.sqrt(x)
    if name == "sin":
        return np.sin(x)
    raise UsageError(f"unknown sample function {name!r}")


# -- subcommands --------------------------------------------------------------

def cmd_gen(args) -> int:
    space = generate_space(args.kind, args.n, args.seed, dim=args.dim, avg_degree=args.avg_degree,
                           scale=args.scale, radius=args.radius)
    files.write_space(args.out, space)
    print(f"wrote {args.kind} space with {space.n} points to {args.out}")
    if args.sample_fn:
        if not args.sample_out:
            raise UsageError("--sample-fn needs --sample-out")
        files.write_function(args.sample_out, sample_function(args.sample_fn, space))
        print(f"wrote {args.sample_fn} samples to {args.sample_out}")
    return EXIT_OK


def cmd_extend(args) -> int:
    space = files.read_space(args.space)
    S = files.read_restricted(args.function)
    if args.mode == "real":
        F = extension.mcshane_extend_real(space, S, args.C)
        bound = args.C
    else:
        F = extension.extend_complex(space, S, args.C)
        bound = 2 * args.C
    lip = extension.lipschitz_constant(F)
    agreement = float(np.max(np.abs(F.values[S.indices] - S.values)))
    files.write_function(args.out, F.values)
    print(f"restriction_lip={extension.lipschitz_constant(S, space)!r}")
    print(f"measured_lip={lip!r} bound={bound!r}")
    print(f"agreement_error={agreement!r}")
    return EXIT_OK if lip <= bound + approx.CHECK_TOL else EXIT_VIOLATION


def cmd_net(args) -> int:
    space = files.read_space(args.space)
    net = nets.greedy_maximal_separated(space, args.t, args.seeds or (0,))
    report = nets.verify_net(space, net)
    if args.out:
        files.write_json(args.out, files.net_to_dict(net))
    print(f"t={net.t!r} size={len(net)} covering_radius={net.covering_radius!r} "
          f"separation_ok={report.separation_ok} covering_ok={report.covering_ok}")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _load_full_function(space, path):
    values, indices = files.read_function(path)
    if indices is not None:
        raise UsageError(f"{path}: expected a function on the whole space, got a restricted one")
    return extension.SampledFunction(values, space)


def cmd_approx(config: ExperimentConfig) -> int:
    space = files.read_space(config.space_path)
    f = _load_full_function(space, config.function_path)
    certs, docs = [], []
    status = EXIT_OK
    for eps in config.epsilons:
        try:
            F, cert = approx.lipschitz_approximant(space, f, eps, c_override=config.c_override, mode=config.mode)
        except StarViolated as exc:
            print(f"epsilon={eps!r}: star condition violated at pair {list(exc.witness)} "
                  f"(excess {exc.excess!r})")
            status = EXIT_VIOLATION
            continue
        certs.append(cert)
        docs.append(files.certificate_to_dict(cert, F.values if config.include_values else None))
        verdict = "ok" if cert.ok else "FAILED: " + "; ".join(cert.failures())
        print(f"epsilon={eps!r} c_used={cert.c_used!r} net_size={cert.net_size} "
              f"achieved={cert.achieved_sup_error!r} proven={cert.proven_sup_error!r} {verdict}")
        if not cert.ok:
            status = EXIT_VIOLATION
    files.write_json(config.output_path, {"mode": config.mode, "certificates": docs})
    if config.emit_csv:
        files.atomic_write_text(Path(config.output_path).with_suffix(".csv"), files.certificates_csv(certs))
    return status


def cmd_modulus(args) -> int:
    if not args.epsilon:
        raise UsageError("at least one --epsilon is required")
    space = files.read_space(args.space)
    f = _load_full_function(space, args.function)
    table = approx.star_modulus_table(space, f, sorted(args.epsilon))
    rows = files.modulus_table_to_list(table)
    files.write_json(args.out, rows)
    if args.csv:
        files.atomic_write_text(Path(args.out).with_suffix(".csv"), files.modulus_csv(rows))
    for r in rows:
        print(f"epsilon={r['epsilon']!r} c_star={r['c_star']!r} delta={r['delta']!r}")
    return EXIT_OK if table.is_monotone() else EXIT_VIOLATION


def disk_report(p_list, n_samples: int, n_pairs: int, seed: int) -> tuple[str, bool]:
    lines = []
    for k, p in enumerate(p_list):
        mean, se = metric.disk_moment_with_error(p, n_samples, seed + k)
        lines.append(f"p={p!r} n={n_samples} mean={mean:.6f} stderr={se:.6f}")
    ratios = metric.disk_comparison_ratios(n_pairs, seed + len(p_list))
    top = float(ratios.max()) if ratios.size else 0.0
    ok = top <= 2.0
    lines.append(f"pairs={ratios.size} max |z-w|/beta(z,w)={top:.6f} bound=2 {'ok' if ok else 'VIOLATED'}")
    return "\n".join(lines) + "\n", ok


def cmd_disk_demo(args) -> int:
    p_list = args.p or [1.0]
    report, ok = disk_report(p_list, args.n_samples, args.pairs, args.seed)
    sys.stdout.write(report)
    if args.out:
        files.atomic_write_text(args.out, report)
    return EXIT_OK if ok else EXIT_VIOLATION


# -- argument parsing -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lipapprox", description="Lipschitz extension and approximation on finite metric spaces")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, space=True, function=True, eps=False, mode=False, csv=False):
        if space:
            p.add_argument("--space", required=True, help="space JSON file")
        if function:
            p.add_argument("--function", required=True, help="function JSON file")
        if eps:
            p.add_argument("--epsilon", type=float, action="append", default=[], help="repeatable")
        if mode:
            p.add_argument("--mode", choices=("real", "complex"), default="complex")
        if csv:
            p.add_argument("--csv", action="store_true", help="also write a CSV next to --out")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", help="generate a space file")
    common(p, space=False, function=False)
    p.add_argument("--kind", required=True, choices=GEN_KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--avg-degree", type=float, default=4.0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--radius", type=float, default=0.95, help="poincare-random: max |z|")
    p.add_argument("--sample-fn", choices=SAMPLE_FUNCTIONS)
    p.add_argument("--sample-out")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("extend", help="McShane-extend a restricted function")
    common(p, mode=True)
    p.add_argument("--C", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_extend)

    p = sub.add_parser("net", help="greedy maximal t-separated net")
    common(p, function=False)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--seeds", type=int, nargs="*")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_net)

    p = sub.add_parser("approx", help="Lipschitz approximant with certificate, per epsilon")
    common(p, eps=True, mode=True, csv=True)
    p.add_argument("--c-override", type=float)
    p.add_argument("--include-values", action="store_true", help="store F in the certificate file")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=lambda a: cmd_approx(ExperimentConfig(
        a.space, a.function, a.epsilon, a.mode, a.seed, a.out, a.csv, a.c_override, a.include_values)))

    p = sub.add_parser("modulus", help="star and uniform-continuity moduli table")
    common(p, eps=True, csv=True)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_modulus)

    p = sub.add_parser("disk-demo", help="moments of the disk distance and Euclidean comparison")
    common(p, space=False, function=False)
    p.add_argument("--p", type=float, action="append", default=[])
    p.add_argument("--n-samples", type=int, default=1_000_000)
    p.add_argument("--pairs", type=int, default=100_000)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_disk_demo)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MathematicalViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (LipApproxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
