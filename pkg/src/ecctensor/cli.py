"""Command-line front end.

Subcommands: bounds, eval, optimize, energy, series, phase.  JSON is the
default output format (CSV behind --format csv where the report is flat).
Exit codes: 0 success, 2 usage, 3 parse failure, 4 validation failure,
5 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from ecctensor import energy as energy_mod
from ecctensor import optimize as optimize_mod
from ecctensor import series as series_mod
from ecctensor import welch as welch_mod
from ecctensor.collection import load_collection
from ecctensor.errors import (
    EXIT_OK,
    EXIT_PARSE,
    EXIT_RESOURCE,
    EXIT_USAGE,
    EXIT_VALIDATION,
    InvalidInputError,
    ParseError,
    ResourceBudgetError,
    ValidationError,
)
from ecctensor.sphere import RngSeed


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)  # round-trip precision
    return str(value)


def _emit_csv(rows: list[dict]) -> None:
    if not rows:
        return
    keys = list(rows[0].keys())
    sys.stdout.write(",".join(keys) + "\n")
    for row in rows:
        sys.stdout.write(",".join(_csv_cell(row[key]) for key in keys) + "\n")


def _emit(rows: list[dict], fmt: str) -> None:
    if fmt == "csv":
        _emit_csv(rows)
    else:
        _emit_json(rows)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("ECC_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise InvalidInputError(f"ECC_THREADS must be an integer, got {env!r}")
    return 1


def cmd_bounds(args) -> int:
    rows = []
    for k in range(1, args.k_max + 1):
        classical = welch_mod.welch_average_bound(args.m, args.n, k, "complex")
        row = {
            "m": args.m,
            "n": args.n,
            "k": k,
            "field": args.field,
            "classical_bound": classical,
            "scaled_classical_bound": args.m ** 2 * classical,
        }
        if args.field == "real":
            improved = welch_mod.welch_average_bound(args.m, args.n, k, "real")
            row["improved_bound"] = improved
            row["scaled_improved_bound"] = args.m ** 2 * improved
        row["cmax_bound"] = welch_mod.welch_cmax_bound(args.m, args.n, k, args.field)
        row["cmax_root_bound"] = welch_mod.welch_cmax_root_bound(args.m, args.n, k, args.field)
        rows.append(row)
    _emit(rows, args.format)
    return EXIT_OK


def cmd_eval(args) -> int:
    text = _read_input(args.input)
    collection = load_collection(text, renormalize=args.renormalize)
    reports = welch_mod.evaluate(collection, args.k_max)
    rows = []
    for report in reports:
        row = report.to_dict()
        row["scaled_potential"] = report.m ** 2 * report.potential
        rows.append(row)
    _emit(rows, args.format)
    return EXIT_OK


def cmd_optimize(args) -> int:
    config = optimize_mod.OptimizeConfig(
        m=args.m,
        n=args.n,
        k=args.k,
        restarts=args.restarts,
        max_iters=args.max_iters,
        step=args.step,
        tol_grad=args.tol_grad,
        seed=RngSeed(args.seed),
    )
    result = optimize_mod.minimize_potential(config, threads=_threads(args))
    _emit_json(result.to_dict())
    return EXIT_OK


def cmd_energy(args) -> int:
    seed = RngSeed(args.seed)
    if args.measure == "uniform":
        result = energy_mod.uniform_energy(args.n, args.kind, args.delta, args.samples, seed)
    elif args.measure == "antipodal":
        result = energy_mod.antipodal_energy(args.kind, args.delta)
    else:
        text = _read_input(args.measure)
        collection = load_collection(text, renormalize=args.renormalize)
        if not collection.is_real:
            raise ValidationError("energy functionals are defined for real measures")
        mu = energy_mod.DiscreteMeasure(collection.vectors, collection.weights)
        if args.kind == "geodesic":
            result = energy_mod.geodesic_energy(mu, args.delta)
        else:
            result = energy_mod.euclidean_energy(mu, args.delta)
    payload = result.to_dict()
    payload.update(kind=args.kind, delta=args.delta, measure=args.measure)
    _emit_json(payload)
    return EXIT_OK


def cmd_series(args) -> int:
    if args.function == "arccos":
        ps = series_mod.series_arccos(args.order)
    elif args.function == "arccos-pow":
        ps = series_mod.series_compose_pow_arccos(args.delta, args.order)
    else:
        ps = series_mod.series_euclid_pow(args.delta, args.order)
    rows = [{"k": k, "coefficient": float(c)} for k, c in enumerate(ps.coeffs)]
    _emit(rows, args.format)
    return EXIT_OK


def cmd_phase(args) -> int:
    deltas = [float(d) for d in args.deltas.split(",") if d.strip()]
    rows = energy_mod.phase_transition_experiment(
        args.kind,
        args.n,
        deltas,
        RngSeed(args.seed),
        samples=args.samples,
        candidates=args.candidates,
    )
    _emit([row.to_dict() for row in rows], args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecctensor",
        description="Welch-type bounds, frame potential minimization and sphere energies",
    )
    parser.add_argument("--threads", type=int, default=None, help="worker threads (or ECC_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="Welch-type bound tables for given m, n, k")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", type=int, default=1)
    p.add_argument("--field", choices=["real", "complex"], default="real")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("eval", help="evaluate a collection file against the bounds")
    p.add_argument("--input", required=True, help="CSV/JSON collection file, or - for stdin")
    p.add_argument("--k-max", type=int, default=1)
    p.add_argument("--renormalize", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("optimize", help="minimize the 2k-frame potential over m unit vectors")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--tol-grad", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("energy", help="geodesic/Euclidean energy of a measure")
    p.add_argument("--kind", choices=["geodesic", "euclidean"], required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--measure", default="uniform", help="uniform, antipodal, or a collection file")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--renormalize", action="store_true")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("series", help="coefficient tables for the energy integrands")
    p.add_argument("--function", choices=["arccos", "arccos-pow", "euclid-pow"], required=True)
    p.add_argument("--delta", type=float, default=1.0)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("phase", help="phase transition experiment over a delta sweep")
    p.add_argument("--kind", choices=["geodesic", "euclidean"], required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--deltas", required=True, help="comma-separated delta values in (0, 4]")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--candidates", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_phase)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValidationError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
