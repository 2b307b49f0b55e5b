"""Command-line front end.

Three subcommands:

``list-problems``
    The benchmark catalog, one row per problem.

``run``
    One experiment (multi-run protocol) on one problem, with every
    algorithm parameter exposed as a flag.  Results go to stdout as a
    summary, and optionally to ``--out`` as CSV/JSON, ``--trace`` as a
    per-generation CSV, and ``--plot`` as a rendered convergence figure.

``reproduce``
    The full unconstrained (table 3) or constrained (table 4) suite,
    printing +/-/~ comparison marks against the published reference rows.

Exit codes: 0 success, 1 runtime failure, 2 usage error.  The default seed
comes from the SBPPA_SEED environment variable when set, else 0.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .core import (
    MODE_AGENT_INDEX,
    MODE_SAMPLED_K,
    SbppaConfig,
    run_experiment,
)
from .problems import PROBLEM_NAMES, get_problem
from .reference import (
    ALGO_SBPPA,
    TABLE3_PROBLEMS,
    TABLE4_PROBLEMS,
    get_reference,
)
from .reporting import FORMAT_CSV, FORMAT_JSON, export_results, export_trace
from .stats import MARK_APPROX, MARK_PLUS, compare_to_reference, compute_stats

_MARK_SYMBOLS = {MARK_PLUS: "+", MARK_APPROX: "≈"}


class _UsageError(Exception):
    """Bad invocation detected after argparse (e.g. env var garbage)."""


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _resolve_seed(cli_value: Optional[int]) -> int:
    if cli_value is not None:
        return cli_value
    raw = os.environ.get("SBPPA_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"SBPPA_SEED must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbppa",
        description="Seed-based plant propagation optimizer and benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    list_p = sub.add_parser("list-problems", help="print the benchmark catalog")
    list_p.add_argument("--json", action="store_true",
                        help="emit the catalog as a JSON document instead of a table")

    run_p = sub.add_parser("run", help="run one experiment on one problem")
    run_p.add_argument("--problem", required=True, choices=PROBLEM_NAMES,
                       help="benchmark problem name")
    run_p.add_argument("--runs", type=int, default=30,
                       help="trial runs, archive-building runs included (default 30)")
    run_p.add_argument("--np", dest="pop_size", type=int, default=10,
                       help="population size (default 10)")
    run_p.add_argument("--pr", dest="perturb_rate", type=float, default=0.8,
                       help="per-dimension perturbation rate (default 0.8)")
    run_p.add_argument("--lambda", dest="arrival_rate", type=float, default=1.1,
                       help="Poisson arrival rate of the dispersion gate (default 1.1)")
    run_p.add_argument("--beta", dest="levy_beta", type=float, default=1.5,
                       help="Levy flight stability index (default 1.5)")
    run_p.add_argument("--gmax", dest="max_generations", type=int, default=None,
                       help="generations per run (default: stock budget for the problem)")
    run_p.add_argument("--max-eval", dest="max_evaluations", type=int, default=None,
                       help="cap on objective evaluations per run (default: none)")
    run_p.add_argument("--mode", dest="mode_policy", default=MODE_AGENT_INDEX,
                       choices=[MODE_SAMPLED_K, MODE_AGENT_INDEX],
                       help="dispersion gate policy (default agent-index)")
    run_p.add_argument("--seed", type=int, default=None,
                       help="experiment seed (default: $SBPPA_SEED or 0)")
    run_p.add_argument("--scale", default="full", choices=["full", "desk"],
                       help="stock budget scale when --gmax is not given (default full)")
    run_p.add_argument("--out", default=None, help="write results to this file")
    run_p.add_argument("--format", dest="fmt", default=FORMAT_CSV,
                       choices=[FORMAT_CSV, FORMAT_JSON],
                       help="--out format (default csv)")
    run_p.add_argument("--trace", default=None,
                       help="write per-generation convergence CSV to this file")
    run_p.add_argument("--plot", default=None,
                       help="render the convergence figure to this image file")
    run_p.add_argument("--jobs", type=int, default=_default_jobs(),
                       help="worker processes (default: machine parallelism)")

    rep_p = sub.add_parser("reproduce", help="re-run a published results table")
    rep_p.add_argument("--table", type=int, required=True, choices=[3, 4],
                       help="3 = unconstrained suite, 4 = constrained suite")
    rep_p.add_argument("--scale", default="desk", choices=["desk", "full"],
                       help="desk trims 30-dim budgets for interactive use (default desk)")
    rep_p.add_argument("--problems", nargs="+", default=None, metavar="NAME",
                       help="restrict to these problems from the table")
    rep_p.add_argument("--runs", type=int, default=30,
                       help="trial runs per problem (default 30)")
    rep_p.add_argument("--seed", type=int, default=None,
                       help="experiment seed (default: $SBPPA_SEED or 0)")
    rep_p.add_argument("--plot-dir", default=None,
                       help="render one convergence figure per problem into this directory")
    rep_p.add_argument("--jobs", type=int, default=_default_jobs(),
                       help="worker processes (default: machine parallelism)")
    return parser


def cmd_list_problems(as_json: bool = False) -> int:
    if as_json:
        import json

        from .problems import catalog_document

        print(json.dumps(catalog_document(), indent=2))
        return 0
    header = f"{'name':<14} {'dim':>3}  {'kind':<20} {'target':<12}"
    print(header)
    print("-" * len(header))
    for name in PROBLEM_NAMES:
        p = get_problem(name)
        if p.is_constrained:
            kind = f"constrained {len(p.inequality_constraints)}g/{len(p.equality_constraints)}h"
        else:
            kind = "unconstrained"
        if p.known_optimum is not None:
            target = f"{p.known_optimum:g}"
        elif p.reference_value is not None:
            target = f"~{p.reference_value:g}"
        else:
            target = "-"
        print(f"{p.name:<14} {p.dimension:>3}  {kind:<20} {target:<12}")
    return 0


def _fnum(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{value:.6g}"


def cmd_run(args: argparse.Namespace) -> int:
    problem = get_problem(args.problem)
    seed = _resolve_seed(args.seed)
    overrides = {
        "pop_size": args.pop_size,
        "perturb_rate": args.perturb_rate,
        "arrival_rate": args.arrival_rate,
        "levy_beta": args.levy_beta,
        "max_evaluations": args.max_evaluations,
        "trial_runs": args.runs,
        "mode_policy": args.mode_policy,
        "rng_seed": seed,
    }
    if args.max_generations is not None:
        overrides["max_generations"] = args.max_generations
    config = SbppaConfig.for_problem(problem, scale=args.scale, **overrides)

    records, stats = run_experiment(problem, config, jobs=args.jobs)

    print(f"problem        {problem.name} (n={problem.dimension})")
    print(f"runs           {stats.feasible_runs} feasible of {stats.total_runs}")
    print(f"best           {_fnum(stats.best)}")
    print(f"worst          {_fnum(stats.worst)}")
    print(f"mean           {_fnum(stats.mean)}")
    print(f"sd             {_fnum(stats.sd)}")
    print(f"evals          {sum(rec.evals_used for rec in records)} total")

    if args.out:
        export_results(records, stats, args.out, fmt=args.fmt, config=config)
        print(f"results        {args.out}")
    if args.trace:
        export_trace(records, args.trace)
        print(f"trace          {args.trace}")
    if args.plot:
        from .plotting import plot_convergence

        plot_convergence(records, args.plot, title=problem.name)
        print(f"figure         {args.plot}")
    return 0


def cmd_reproduce(args: argparse.Namespace) -> int:
    suite = TABLE3_PROBLEMS if args.table == 3 else TABLE4_PROBLEMS
    if args.problems:
        unknown = [p for p in args.problems if p not in suite]
        if unknown:
            raise _UsageError(
                f"not in table {args.table}: {', '.join(unknown)} "
                f"(choose from {', '.join(suite)})"
            )
        suite = tuple(p for p in suite if p in args.problems)
    seed = _resolve_seed(args.seed)
    if args.plot_dir:
        os.makedirs(args.plot_dir, exist_ok=True)

    print(
        f"{'problem':<14} {'mark':<4} {'best':>12} {'mean':>12} {'worst':>12} "
        f"{'sd':>10} {'archive_mean':>13} {'ref_mean':>12} {'feas':>6}"
    )
    for name in suite:
        problem = get_problem(name)
        config = SbppaConfig.for_problem(
            problem, scale=args.scale, trial_runs=args.runs, rng_seed=seed
        )
        records, stats = run_experiment(problem, config, jobs=args.jobs)
        ref = get_reference(name, ALGO_SBPPA)
        mark = _MARK_SYMBOLS.get(compare_to_reference(stats, ref), "-")
        archive = compute_stats(records[: config.pop_size], problem=name)
        print(
            f"{name:<14} {mark:<4} {_fnum(stats.best):>12} {_fnum(stats.mean):>12} "
            f"{_fnum(stats.worst):>12} {_fnum(stats.sd):>10} "
            f"{_fnum(archive.mean):>13} {ref.mean:>12.6g} "
            f"{stats.feasible_runs:>3}/{stats.total_runs}"
        )
        if args.plot_dir:
            from .plotting import plot_convergence

            plot_convergence(
                records, os.path.join(args.plot_dir, f"{name}.png"), title=name
            )
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "list-problems":
            return cmd_list_problems(as_json=args.json)
        if args.command == "run":
            return cmd_run(args)
        return cmd_reproduce(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
