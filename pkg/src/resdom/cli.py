"""Command-line front end: ``resdom compute | generate | verify | sweep | enumerate``.

Exit codes: 0 success, 1 verification failure or domain error (disconnected
input, size cap, failed certification), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from . import families as fam
from . import verify
from .errors import (
    ConnectivityError,
    DomainError,
    ParameterError,
    ParseError,
    ResdomError,
    SizeGuardError,
)
from .graph import Graph, from_edge_list, to_edge_list
from .solvers import DEFAULT_CAP, INVARIANTS, Predicate, Solver

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_INVARIANT_ALIASES = {
    "dim": "DIM",
    "gammak": "GAMMA_K", "gamma_k": "GAMMA_K",
    "gammark": "GAMMA_RK", "gamma_rk": "GAMMA_RK",
    "ldk": "LD_K", "ld_k": "LD_K", "ld": "LD_K",
}
SWEEP_HEADER = ("family", "k", "n", "m", "l", "r", "solver", "predicted", "match")
_RANGE_PARAMS = ("n", "m", "l", "r", "gamma", "legs", "s", "t")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str) -> Graph:
    if path == "-":
        return from_edge_list(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return from_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_invariants(text: str | None) -> list[str]:
    if not text:
        return list(INVARIANTS)
    names = []
    for token in text.split(","):
        key = token.strip().lower()
        name = _INVARIANT_ALIASES.get(key, key.upper())
        if name not in INVARIANTS:
            raise UsageError(f"unknown invariant {token!r}; choose from dim, gammak, gammark, ldk")
        names.append(name)
    return names


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = range(int(lo), int(hi) + 1)
        else:
            out = range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None
    if len(out) == 0:
        raise UsageError(f"empty range {text!r}")
    return out


# ---------------------------------------------------------------------------
# Subcommands


def cmd_compute(args) -> int:
    g = _read_graph(args.input)
    names = _parse_invariants(args.invariants)
    solver = Solver(g, cap=args.cap)
    results = []
    for name in names:
        pred = next(p for p in Predicate if p.invariant == name)
        results.append(solver.minimum(pred, None if name == "DIM" else args.k))
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("invariant", "k", "value", "witness"))
        for r in results:
            writer.writerow((r.name, "" if r.k is None else r.k, r.value,
                             " ".join(map(str, r.witness))))
        text = buf.getvalue()
    elif args.format == "el":
        raise UsageError("compute supports --format json or csv")
    else:
        text = _dumps({"n": g.n, "m": g.m, "k": args.k,
                       "invariants": [r.to_dict() for r in results]})
    _emit(text, args.out)
    return EXIT_OK


def _family_params(args, **override) -> fam.FamilyParams:
    values = {name: getattr(args, name, None) for name in _RANGE_PARAMS}
    values.update(override)
    return fam.FamilyParams(args.family, k=args.k, **values)


def cmd_generate(args) -> int:
    if args.triple:
        if args.family:
            raise UsageError("use either --family or --triple")
        p = fam.triple_family(fam.TripleTarget(args.k, *args.triple))
    elif args.family:
        for name in _RANGE_PARAMS:
            val = getattr(args, name)
            if val is not None:
                setattr(args, name, int(val))
        p = _family_params(args)
    else:
        raise UsageError("generate needs --family or --triple")
    g = fam.generate_family(p)
    if args.format == "json":
        text = _dumps({"family": p.as_dict(), "n": g.n, "m": g.m,
                       "edges": [list(e) for e in g.sorted_edges()]})
    elif args.format == "csv":
        raise UsageError("generate supports --format el or json")
    else:
        text = to_edge_list(g)
    _emit(text, args.out)
    if args.certify:
        ok, computed, claimed = fam.certify(p, cap=args.cap)
        sys.stderr.write(_dumps({"certified": ok, "computed": computed, "claimed": claimed}))
        if not claimed:
            sys.stderr.write(f"no claimed invariants for family {p.family}\n")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.all and not args.check:
        raise UsageError("verify needs --all or --check ID")
    ids = None if args.all else args.check
    kwargs = {"timing": not args.no_timing}
    if args.kmax is not None:
        if args.kmax < 1:
            raise UsageError("--kmax must be >= 1")
        kwargs["k_range"] = tuple(range(1, args.kmax + 1))
    if args.nmax is not None:
        kwargs["n_max"] = args.nmax
    if args.seed is not None:
        kwargs["seed"] = args.seed
    try:
        report = verify.run_all(args.level, check_ids=ids, parallel=args.parallel, **kwargs)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    _emit(_dumps(report), args.out)
    s = report["summary"]
    sys.stderr.write(f"{report['run_id']}: pass={s['pass']} fail={s['fail']} skipped={s['skipped']}\n")
    return EXIT_FAIL if verify.failed(report) else EXIT_OK


def cmd_sweep(args) -> int:
    swept = [(name, _parse_range(getattr(args, name))) for name in _RANGE_PARAMS
             if getattr(args, name) is not None]
    ranged = [(name, rng) for name, rng in swept if len(rng) > 1]
    if len(ranged) > 1:
        raise UsageError("sweep varies exactly one parameter")
    fixed = {name: rng[0] for name, rng in swept if len(rng) == 1}
    name, values = ranged[0] if ranged else (None, [None])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    failures = 0
    for v in values:
        p = _family_params(args, **fixed, **({name: v} if name else {}))
        p.validate()
        predicted = fam.claimed_invariants(p).get("GAMMA_RK")
        if predicted is None:
            raise UsageError(f"no predicted GAMMA_RK for {p.as_dict()}")
        g = fam.generate_family(p)
        got = Solver(g, cap=args.cap).minimum(Predicate.K_RESOLVING_DOMINATING, p.k).value
        match = got == predicted
        failures += not match
        writer.writerow((p.family, p.k, g.n, _blank(p.m), _blank(p.l), _blank(p.r), got,
                         predicted, "true" if match else "false"))
    _emit(buf.getvalue(), args.out)
    return EXIT_FAIL if failures else EXIT_OK


def _blank(v) -> str:
    return "" if v is None else str(v)


def cmd_enumerate(args) -> int:
    gen = verify.enumerate_graphs if args.all_graphs else verify.enumerate_connected_graphs
    graphs = list(gen(args.n))
    if args.format == "json":
        text = _dumps([{"n": g.n, "edges": [list(e) for e in g.sorted_edges()]} for g in graphs])
    elif args.format == "csv":
        raise UsageError("enumerate supports --format el or json")
    else:
        text = "\n".join(to_edge_list(g) for g in graphs)
    _emit(text, args.out)
    sys.stderr.write(f"{len(graphs)} graphs\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--k", type=int, default=1, help="distance parameter k (default 1)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help=f"solver size cap (default {DEFAULT_CAP}, at most 256)")
    common.add_argument("--seed", type=int, help="seed for random corpora")
    common.add_argument("--parallel", type=int, default=1, help="worker processes for verify")

    parser = argparse.ArgumentParser(prog="resdom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="invariants of an edge-list graph")
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    p.add_argument("--invariants", help="comma list of dim,gammak,gammark,ldk (default all)")
    p.add_argument("--format", choices=("json", "csv", "el"), default="json")
    p.set_defaults(func=cmd_compute)

    fam_args = argparse.ArgumentParser(add_help=False)
    fam_args.add_argument("--family", help="family tag, e.g. path, cycle, t1..t5, spider, "
                                           "t-gamma, extremal-gr")
    for name in _RANGE_PARAMS:
        fam_args.add_argument(f"--{name}")

    p = sub.add_parser("generate", parents=[common, fam_args], help="write a family instance")
    p.add_argument("--triple", type=int, nargs=3, metavar=("BETA", "GAMMA", "ALPHA"),
                   help="tree realizing (dim, gamma_k, gamma_rk) for k >= 2")
    p.add_argument("--certify", action="store_true",
                   help="solve the claimed invariants; exit 1 on mismatch")
    p.add_argument("--format", choices=("json", "csv", "el"), default="el")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("--all", action="store_true", help="run every registered check")
    p.add_argument("--check", action="append", help="check id (repeatable)")
    p.add_argument("--level", type=str.upper, choices=verify.LEVELS, default="SMOKE")
    p.add_argument("--kmax", type=int, help="run k = 1..KMAX")
    p.add_argument("--nmax", type=int, help="largest order in preset corpora and sweeps")
    p.add_argument("--no-timing", action="store_true",
                   help="zero elapsed_ms so reports are byte-identical across runs")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common, fam_args],
                       help="CSV of solver vs predicted gamma_rk over one parameter")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", parents=[common], help="all labeled graphs of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all-graphs", action="store_true", help="include disconnected graphs")
    p.add_argument("--format", choices=("json", "csv", "el"), default="el")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command != "compute" and args.command != "enumerate" and args.k < 1:
            raise UsageError(f"k must be >= 1, got {args.k}")
        return args.func(args)
    except (UsageError, ParseError, ParameterError, ValueError) as exc:
        if isinstance(exc, DomainError):
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_FAIL
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ConnectivityError, SizeGuardError, ResdomError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
