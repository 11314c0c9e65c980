"""Command-line front end: witnesses, operations, measures and bound verification.

Exit codes: 0 ok, 1 a bound was violated, 2 usage, parse or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import harness, ops
from . import witnesses as W
from .automata import AutomatonError, complete, minimize
from .bounds import BoundError
from .measures import measure
from .model_io import ParseError, read_dfa, reports_to_csv, reports_to_markdown, serialize_dfa, write_dfa

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2

_UNARY = {"complement", "star", "reversal"}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    gen, arity = W.WITNESSES[args.op]
    if arity == 2 and args.n is None:
        raise UsageError(f"{args.op} needs both m and n")
    if arity == 1 and args.n is not None:
        raise UsageError(f"{args.op} takes only m")
    result = gen(args.m, args.n) if arity == 2 else (gen(args.m),)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{args.op}-{args.m}" + (f"-{args.n}" if arity == 2 else "")
    names = ["A", "B"] if arity == 2 else ["A"]
    for name, d in zip(names, result):
        path = out_dir / f"{stem}-{name}.dfa"
        write_dfa(path, d)
        print(path)
    return EXIT_OK


def cmd_apply(args) -> int:
    arity = 1 if args.op in _UNARY else 2
    if len(args.inputs) != arity:
        raise UsageError(f"{args.op} takes {arity} input file(s), got {len(args.inputs)}")
    operands = [read_dfa(p) for p in args.inputs]
    if args.complete_inputs:
        operands = [complete(d) for d in operands]
    result = ops.apply(args.op, *operands, minimal=args.minimize)
    if args.complete_inputs and args.minimize:
        # complete operands ask for complete-DFA accounting: keep the sink
        result = complete(result)
    _emit(serialize_dfa(result), args.out)
    return EXIT_OK


def cmd_minimize(args) -> int:
    _emit(serialize_dfa(minimize(read_dfa(args.input))), args.out)
    return EXIT_OK


def _measures_json(path: str) -> dict:
    ms = measure(read_dfa(path))
    return {
        "file": path,
        "isc": ms.m,
        "itc": ms.itc_total,
        "k": ms.k,
        "finite": ms.finite,
        "f": ms.f,
        "f_at": list(ms.f_at),
        "s": ms.s,
        "a": ms.a,
        "levels": list(ms.levels),
        "pre_dead": ms.pre_dead,
        "level": ms.level_of_automaton,
        "per_symbol": {tau: vars(x) for tau, x in ms.per_symbol.items()},
    }


def cmd_measure(args) -> int:
    data = [_measures_json(p) for p in args.inputs]
    _emit(json.dumps(data[0] if len(data) == 1 else data, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.op == "random":
        if args.m_range or args.n_range:
            raise UsageError("random mode takes no ranges; use --seed and --count")
        reports = harness.random_reports(args.seed, args.count, corrected=args.corrected)
    else:
        if not args.m_range:
            raise UsageError(f"{args.op} needs an m range")
        ms = harness.parse_range(args.m_range)
        ns = harness.parse_range(args.n_range) if args.n_range else None
        if args.op not in harness.BINARY_GRID_OPS and ns:
            raise UsageError(f"{args.op} takes only an m range")
        reports = harness.verify_grid(args.op, ms, ns, corrected=args.corrected, jobs=args.jobs)
        if args.op == "star":
            print(f"star transition exponent: {harness.star_rule_description()}", file=sys.stderr)
    if args.no_timing:
        reports = [replace(r, ms=None) for r in reports]
    render = reports_to_markdown if args.format == "md" else reports_to_csv
    _emit(render(reports), args.out)
    violated = sum(r.violated for r in reports)
    if violated:
        print(f"{violated} of {len(reports)} rows VIOLATED a bound", file=sys.stderr)
        return EXIT_VIOLATED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idfa",
        description="Incomplete DFAs for finite languages: operations, measures and bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write witness DFA files")
    p.add_argument("op", choices=sorted(W.WITNESSES))
    p.add_argument("m", type=int)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--out-dir", default=".", help="directory for the generated files")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("apply", help="apply an operation to DFA files")
    p.add_argument("op", choices=ops.OPERATIONS)
    p.add_argument("inputs", nargs="+")
    p.add_argument("--minimize", action="store_true", help="minimize the result")
    p.add_argument("--complete-inputs", action="store_true", help="add explicit sinks to the operands first; with --minimize the result is the minimal complete DFA")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("measure", help="print the measures of DFA files as JSON")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--out")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("minimize", help="minimize a DFA file")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("verify", help="check bounds on witness grids or random automata")
    p.add_argument("op", choices=harness.GRID_OPS + ("random",))
    p.add_argument("m_range", nargs="?", help="e.g. 2..6, 4 or 2,4,7")
    p.add_argument("n_range", nargs="?")
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.add_argument("--seed", type=int, default=0, help="random mode seed")
    p.add_argument("--count", type=int, default=1000, help="random mode instance count")
    p.add_argument("--corrected", action="store_true", help="use the corrected concatenation transition bound")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for grid cells")
    p.add_argument("--no-timing", action="store_true", help="leave the ms column empty")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, AutomatonError, W.WitnessError, harness.ScaleError, BoundError, ValueError, OSError) as exc:
        print(f"idfa: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
