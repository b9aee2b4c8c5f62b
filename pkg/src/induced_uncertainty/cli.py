"""Command-line interface.

Subcommands::

    measure          evaluate one measure on a distribution or density matrix
    sweep-classical  CSV of measures on {p, 1-p}
    sweep-quantum    CSV of mixedness measures on p|psi><psi| + (1-p) I/2
    verify           run property suites

Exit codes: 0 success, 1 property failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import sys

from . import quantum as q
from . import verify as v
from .distributions import parse_distribution, read_distribution
from .errata import collect_errata
from .exceptions import UncertaintyError
from .sweep import CLASSICAL_DEFAULT, NORMALIZE_MODES, QUANTUM_DEFAULT, classical_sweep, quantum_sweep
from .uncertainty import MeasureKind, closed_form, generic, measure_from_name

QUANTUM_IDS = {
    "bures": q.QFamily.BURES,
    "qhellinger": q.QFamily.QHELLINGER,
    "schatten": q.QFamily.SCHATTEN,
    "lp": q.QFamily.ENTRYWISE_LP,
    "hs": q.QFamily.HILBERT_SCHMIDT,
    "gen-renyi": q.QFamily.GEN_RENYI,
    "gen-tsallis": q.QFamily.GEN_TSALLIS,
    "von-neumann": None,
}


class UsageError(Exception):
    pass


def _param_for(kind: MeasureKind, args) -> float | None:
    if kind is MeasureKind.RENYI:
        return args.alpha
    if kind is MeasureKind.DOWN_RENYI:
        return args.gamma
    if kind in (MeasureKind.TSALLIS, MeasureKind.DOWN_TSALLIS):
        return args.beta
    return None


def _quantum_measure(args) -> float:
    if not args.dm_file:
        raise UsageError(f"measure {args.id!r} needs --dm-file")
    rho = q.read_density_matrix(args.dm_file)
    fam = QUANTUM_IDS[args.id]
    if fam is None:
        return q.von_neumann_entropy(rho)
    param = {q.QFamily.SCHATTEN: args.p, q.QFamily.ENTRYWISE_LP: args.p,
             q.QFamily.GEN_RENYI: args.alpha, q.QFamily.GEN_TSALLIS: args.beta}.get(fam)
    spec = q.QDistanceSpec(fam, param)
    if args.generic:
        return q.induced_quantum_uncertainty(spec, rho)
    return q.quantum_closed_form(spec, rho)


def cmd_measure(args) -> int:
    if args.id in QUANTUM_IDS:
        value = _quantum_measure(args)
    else:
        if (args.dist is None) == (args.dist_file is None):
            raise UsageError("give exactly one of --dist or --dist-file")
        p = parse_distribution(args.dist) if args.dist is not None else read_distribution(args.dist_file)
        kind = measure_from_name(args.id, 0.5).kind
        m = measure_from_name(args.id, _param_for(kind, args))
        value = generic(m, p) if args.generic else closed_form(m, p)
    print("%.12g" % (value + 0.0))
    return 0


def _sweep_params(args) -> dict:
    return {"renyi": args.alpha, "gen-renyi": args.alpha, "tsallis": args.beta,
            "down-tsallis": args.beta, "gen-tsallis": args.beta, "down-renyi": args.gamma}


def _names(text: str | None, default) -> list[str]:
    if text is None:
        return list(default)
    return [s.strip() for s in text.split(",") if s.strip()]


def cmd_sweep_classical(args) -> int:
    result = classical_sweep(args.grid_step, _names(args.measures, CLASSICAL_DEFAULT),
                             args.normalize, _sweep_params(args))
    sys.stdout.write(result.to_csv())
    return 0


def cmd_sweep_quantum(args) -> int:
    result = quantum_sweep(args.grid_step, _names(args.measures, QUANTUM_DEFAULT),
                           args.normalize, _sweep_params(args), seed=args.seed)
    sys.stdout.write(result.to_csv())
    return 0


def cmd_verify(args) -> int:
    seed = 0 if args.seed is None else args.seed
    reports = []
    if args.suite in ("classical", "all"):
        kw = {}
        if args.trials is not None:
            kw = {"schur_trials": args.trials, "oracle_trials": args.trials}
        reports += v.classical_suite(seed, **kw)
    if args.suite in ("quantum", "all"):
        kw = {}
        if args.trials is not None:
            kw = {"reduction_trials": args.trials, "state_trials": args.trials,
                  "eigen_trials": args.trials}
        reports += v.quantum_suite(seed, **kw)
    if args.suite in ("errata", "all"):
        for e in collect_errata():
            print(("REPRODUCED " if e.reproduced else "NOT REPRODUCED ") + e.describe())
        reports += v.errata_suite()
    for r in reports:
        print(r.to_text(max_failures=args.max_failures))
    failed = sum(not r.passed for r in reports)
    print(f"SUMMARY properties={len(reports)} failed={failed}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="induced-uncertainty",
        description="Uncertainty measures induced by statistical divergences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def orders(p):
        p.add_argument("--alpha", type=float, help="Renyi order")
        p.add_argument("--beta", type=float, help="Tsallis order")
        p.add_argument("--gamma", type=float, help="order of the down-Renyi measure")

    m = sub.add_parser("measure", help="evaluate a measure")
    m.add_argument("--id", required=True, help="measure name, e.g. shannon, renyi, js, bures")
    orders(m)
    m.add_argument("--p", type=float, help="norm order for schatten / lp")
    m.add_argument("--dist", help="comma-separated probabilities")
    m.add_argument("--dist-file", help="file with one probability per line")
    m.add_argument("--dm-file", help="density-matrix file")
    m.add_argument("--generic", action="store_true",
                   help="evaluate via the divergence construction instead of the closed form")
    m.set_defaults(func=cmd_measure)

    for name, func, default, help_ in (
            ("sweep-classical", cmd_sweep_classical, CLASSICAL_DEFAULT, "two-outcome sweep"),
            ("sweep-quantum", cmd_sweep_quantum, QUANTUM_DEFAULT, "qubit mixedness sweep")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--grid-step", type=float, default=0.01)
        s.add_argument("--normalize", choices=NORMALIZE_MODES, default="none")
        s.add_argument("--measures", help=f"comma-separated columns (default {','.join(default)})")
        s.add_argument("--seed", type=int, help="random pure state for the quantum family")
        orders(s)
        s.set_defaults(func=func)

    vp = sub.add_parser("verify", help="run property suites")
    vp.add_argument("--suite", choices=("classical", "quantum", "errata", "all"), default="all")
    vp.add_argument("--seed", type=int)
    vp.add_argument("--trials", type=int, help="override every trial count")
    vp.add_argument("--max-failures", type=int, default=5,
                    help="failure lines printed per property")
    vp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UncertaintyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
