"""Command-line surface: list, eval, grid, verify, run, suite, export-metadata.

Exit codes: 0 success (refuted claims are findings, not errors), 2 usage or
parse errors, 3 domain errors, 4 unwritable output, 5 tier-3 targets.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import sys

import numpy as np

from . import catalog
from .core import evaluate, make_problem
from .errors import (
    DimensionMismatch,
    DomainError,
    MissingSeed,
    NonFiniteInput,
    OptbenchError,
    SpecError,
    Tier3Unimplementable,
    UnknownFunction,
)
from .optimize import OptimizerConfig, run_optimizer, run_suite, summarize_suite
from .runspec import parse_runspec, resolve_function_set, resolve_optimizer_kind
from .serialize import dump_json, format_float
from .verify import full_report

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_UNWRITABLE = 4
EXIT_TIER3 = 5


def _write_output(text, out_path):
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    try:
        with open(out_path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNWRITABLE)


def _default_out(filename):
    data_dir = os.environ.get("OPTBENCH_DATA_DIR")
    if data_dir:
        os.makedirs(data_dir, exist_ok=True)
        return os.path.join(data_dir, filename)
    return None


def _parse_vector(raw):
    try:
        return np.array([float(tok) for tok in raw.split(",") if tok.strip() != ""])
    except ValueError as exc:
        raise SpecError(f"cannot parse vector {raw!r}: {exc}") from exc


def _meta_dict(entry):
    meta = entry.meta
    d = {
        "name": meta.name,
        "aliases": list(meta.id.aliases),
        "tier": meta.tier,
        "properties": {
            "continuous": meta.properties.continuous,
            "differentiable": meta.properties.differentiable,
            "separable": meta.properties.separable,
            "scalable": meta.properties.scalable,
            "modality": meta.properties.modality,
            "stochastic": meta.properties.stochastic,
            "dynamic": meta.properties.dynamic,
        },
        "default_bounds": meta.default_bounds.describe(),
        "dim_class": meta.dim_class.describe(),
        "optima": [
            {
                "value": rec.value,
                "location": (
                    list(rec.location)
                    if isinstance(rec.location, tuple) and rec.location and rec.location[0] == "all-equal"
                    else ([float(v) for v in rec.location] if rec.location is not None else None)
                ),
                "provenance": rec.provenance,
                "dimension": rec.dimension,
                "tol": rec.tol,
                "note": rec.note,
            }
            for rec in meta.optima
        ],
        "constants": meta.constants,
        "params": {k: v for k, v in sorted(entry.params.items())},
        "discrepancy_notes": list(meta.discrepancy_notes),
    }
    if meta.tier == 3:
        d["tier3_reason"] = meta.tier3_reason
    return d


def cmd_list(args):
    filters = {}
    if args.tier is not None:
        filters["tier"] = args.tier
    if args.modality is not None:
        filters["modality"] = args.modality
    for flag in ("separable", "continuous", "differentiable", "scalable", "stochastic", "dynamic"):
        val = getattr(args, flag)
        if val is not None:
            filters[flag] = val
    names = catalog.list_entries(**filters)
    if args.format == "json":
        payload = [_meta_dict(catalog.lookup(n)) for n in names]
        _write_output(dump_json(payload), args.out)
    else:
        lines = []
        for n in names:
            meta = catalog.lookup(n).meta
            p = meta.properties
            tags = [
                f"tier{meta.tier}",
                p.modality,
                "separable" if p.separable else "non-separable",
            ]
            if p.stochastic:
                tags.append("stochastic")
            if p.dynamic:
                tags.append("dynamic")
            lines.append(f"{n:38s} {' '.join(tags)}")
        _write_output("\n".join(lines) if lines else "(no matches)", args.out)
    return 0


def cmd_eval(args):
    x = _parse_vector(args.x)
    problem = make_problem(args.function, x.size, seed=args.seed)
    value = evaluate(problem, x)
    print(format_float(value))
    return 0


def cmd_grid(args):
    if args.resolution < 2:
        raise SpecError("grid resolution must be at least 2")
    entry = catalog.lookup(args.function)
    meta = entry.meta
    if meta.tier == 3:
        raise Tier3Unimplementable(meta.name, meta.tier3_reason)
    dc = meta.dim_class
    two_d_capable = (dc.kind == "fixed" and dc.n == 2) or (
        dc.kind == "scalable" and dc.min_dim <= 2 and 2 % dc.multiple == 0
    )
    if not two_d_capable:
        raise SpecError(f"{meta.name} cannot be instantiated in two dimensions")
    problem = make_problem(meta.name, 2, seed=args.seed)
    xs = np.linspace(problem.bounds.lower[0], problem.bounds.upper[0], args.resolution)
    ys = np.linspace(problem.bounds.lower[1], problem.bounds.upper[1], args.resolution)
    rows = ["x0,x1,f"]
    for xv in xs:
        for yv in ys:
            try:
                f = evaluate(problem, np.array([xv, yv]))
            except DomainError:
                f = float("nan")
            rows.append(f"{format_float(xv)},{format_float(yv)},{format_float(f)}")
    _write_output("\n".join(rows), args.out)
    return 0


def _verify_one(name, dim, seed, budget, grid_resolution):
    return full_report(name, dim, seed=seed, budget=budget, grid_resolution=grid_resolution).as_dict()


def cmd_verify(args):
    if args.all:
        names = [
            n
            for t in (1, 2)
            for n in catalog.list_entries(tier=t)
        ]
        names.sort()
        tier3 = [
            {"name": n, "reason": catalog.lookup(n).meta.tier3_reason}
            for n in catalog.list_entries(tier=3)
        ]
        worker = lambda n: _verify_one(n, args.dim, args.seed, args.budget, args.grid_resolution)
        if args.jobs > 1:
            with concurrent.futures.ThreadPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(worker, names))
        else:
            reports = [worker(n) for n in names]
        payload = {"reports": reports, "tier3": tier3, "seed": args.seed}
        out = args.out or _default_out("verification.json")
        _write_output(dump_json(payload), out)
        return 0
    if args.function is None:
        raise SpecError("name a function or pass --all")
    entry = catalog.lookup(args.function)
    if entry.meta.tier == 3:
        raise Tier3Unimplementable(entry.meta.name, entry.meta.tier3_reason)
    report = _verify_one(entry.meta.name, args.dim, args.seed, args.budget, args.grid_resolution)
    out = args.out or _default_out(f"verify-{entry.meta.name}.json")
    _write_output(dump_json(report), out)
    return 0


def cmd_run(args):
    kind = resolve_optimizer_kind(args.optimizer)
    entry = catalog.lookup(args.function)
    dim = args.dim if args.dim is not None else entry.meta.dim_class.default_dimension()
    if args.seed is None:
        raise SpecError("an explicit --seed is required")
    config = OptimizerConfig(
        kind=kind,
        budget=args.budget,
        seed=args.seed,
        population=args.population,
        F=args.F,
        CR=args.CR,
    )
    problem = make_problem(
        entry.meta.name, dim, seed=args.seed if entry.meta.properties.stochastic else None
    )
    x0 = _parse_vector(args.x0) if args.x0 else None
    result = run_optimizer(problem, config, x0=x0)
    payload = {"function": entry.meta.name, "dim": dim, **result.as_dict(include_history=args.history)}
    _write_output(dump_json(payload), args.out)
    return 0


def cmd_suite(args):
    if args.spec:
        suite, config = parse_runspec(args.spec)
    else:
        if not args.functions or args.seeds is None:
            raise SpecError("either --spec or --functions plus explicit --seeds are required")
        seeds = [int(s) for s in args.seeds.split(",") if s.strip()]
        trials = args.trials if args.trials is not None else len(seeds)
        if trials > len(seeds):
            raise SpecError("one explicit seed per trial is required")
        suite = {
            "functions": resolve_function_set(args.functions.split(",")),
            "dims": [int(d) for d in args.dims.split(",")],
            "trials": trials,
            "seeds": seeds,
            "output": None,
            "history": args.history,
        }
        config = OptimizerConfig(
            kind=resolve_optimizer_kind(args.optimizer),
            budget=args.budget,
            population=args.population,
            F=args.F,
            CR=args.CR,
        )
    rows = run_suite(config, suite["functions"], suite["dims"], suite["trials"], suite["seeds"])
    payload = {
        "optimizer": {
            "kind": config.kind,
            "budget": config.budget,
            "population": config.population,
            "F": config.F,
            "CR": config.CR,
        },
        "dims": suite["dims"],
        "trials": suite["trials"],
        "seeds": suite["seeds"],
        "rows": rows,
        "summary": summarize_suite(rows),
    }
    out = args.out or suite.get("output") or _default_out("suite.json")
    _write_output(dump_json(payload), out)
    return 0


def cmd_export_metadata(args):
    entries = [_meta_dict(e) for e in catalog.all_entries()]
    tables = {
        name: {k: np.asarray(v).tolist() for k, v in sorted(table.items())}
        for name, table in sorted(catalog.CONSTANT_TABLES.items())
    }
    payload = {"entries": entries, "constant_tables": tables, "stats": catalog.catalog_stats()}
    out = args.out or _default_out("metadata.json")
    _write_output(dump_json(payload), out)
    return 0


def _add_bool_filter(parser, name):
    group = parser.add_mutually_exclusive_group()
    group.add_argument(f"--{name}", dest=name, action="store_true", default=None)
    group.add_argument(f"--non-{name}", dest=name, action="store_false")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="optbench",
        description="Benchmark-function suite: evaluate, filter, verify, and run optimizers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registered functions with filters")
    p.add_argument("--tier", type=int, choices=(1, 2, 3))
    p.add_argument("--modality", choices=("unimodal", "multimodal", "unknown"))
    for flag in ("separable", "continuous", "differentiable", "scalable", "stochastic", "dynamic"):
        _add_bool_filter(p, flag)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("eval", help="evaluate a function at a point")
    p.add_argument("function")
    p.add_argument("--x", required=True, help="comma-separated coordinates")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("grid", help="dump a 2-D surface grid as CSV")
    p.add_argument("function")
    p.add_argument("--resolution", type=int, default=101)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("verify", help="audit published claims numerically")
    p.add_argument("function", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-resolution", type=int, default=201)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("run", help="run one optimizer on one function")
    p.add_argument("optimizer", help="rs | nm | de (or full names)")
    p.add_argument("function")
    p.add_argument("--dim", type=int)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--population", type=int, default=50)
    p.add_argument("--F", type=float, default=0.5)
    p.add_argument("--CR", type=float, default=0.9)
    p.add_argument("--x0", help="start point for nelder-mead, comma-separated")
    p.add_argument("--history", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("suite", help="run an optimizer over a function set")
    p.add_argument("--spec", help="run-spec file ([suite]/[optimizer] sections)")
    p.add_argument("--functions", help="comma-separated names, or tier1/top25/tier2")
    p.add_argument("--dims", default="2")
    p.add_argument("--trials", type=int)
    p.add_argument("--seeds", help="comma-separated explicit seeds")
    p.add_argument("--optimizer", default="de")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--population", type=int, default=50)
    p.add_argument("--F", type=float, default=0.5)
    p.add_argument("--CR", type=float, default=0.9)
    p.add_argument("--history", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("export-metadata", help="dump the full catalog metadata as JSON")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_metadata)

    return parser


def _join_vector_flags(argv):
    """Turn ["--x", "-1,1"] into ["--x=-1,1"] so negative coordinates parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--x", "--x0") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_vector_flags(list(argv)))
    try:
        return args.func(args)
    except Tier3Unimplementable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIER3
    except (DomainError, NonFiniteInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (SpecError, UnknownFunction, DimensionMismatch, MissingSeed, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OptbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
