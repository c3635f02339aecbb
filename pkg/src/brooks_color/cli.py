"""Command-line entry point: ``brooks-color color|verify|gen|bench``.

Exit codes for ``color``: 0 coloring, 2 obstruction, 1 usage/parse/contract
error.  ``verify`` exits 0 iff the result checks out.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import certify
from .generate import MODELS, GenSpec, GenSpecError, generate
from .graph import DimacsError, GraphError, parse_dimacs, serialize_dimacs
from .outcome import ContractError
from .report import ResultFormatError, parse_result, render_json, render_text, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OBSTRUCTION = 2

log = logging.getLogger("brooks_color")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 means "obstruction" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read_graph(path: str):
    with open(path, "rb") as fh:
        return parse_dimacs(fh.read())


def cmd_color(args) -> int:
    g = _read_graph(args.file)
    report = solve(g, colors=args.colors, timing=not args.no_timing)
    out = report.outcome
    if args.verify:
        if out.is_coloring:
            ok = certify.verify_coloring(g, out.coloring, report.k)
        else:
            ok = certify.verify_obstruction(g, out.obstruction, report.k)
        if not ok:
            print(f"error: {out.kind} failed verification", file=sys.stderr)
            return EXIT_ERROR
    sys.stdout.write(render_json(report) if args.output == "json" else render_text(report))
    return EXIT_OK if out.is_coloring else EXIT_OBSTRUCTION


def cmd_verify(args) -> int:
    g = _read_graph(args.graph_file)
    with open(args.result_file, encoding="utf-8") as fh:
        outcome, k = parse_result(fh.read(), g.n)
    if outcome.is_coloring:
        ok = certify.verify_coloring(g, outcome.coloring, k)
    else:
        ok = certify.verify_obstruction(g, outcome.obstruction, k)
    print(f"{'OK' if ok else 'FAIL'} {outcome.kind} k={k}")
    return EXIT_OK if ok else EXIT_ERROR


def _spec(args, n: int) -> GenSpec:
    return GenSpec(model=args.model, n=n, p=args.p, d=args.d, seed=args.seed)


def cmd_gen(args) -> int:
    text = serialize_dimacs(generate(_spec(args, args.n)))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    print("size\tm\tmax_degree\toutcome\tcolors\tmillis\tdsatur_colors")
    for n in sizes:
        g = generate(_spec(args, n))
        start = time.perf_counter()
        report = solve(g, timing=False)
        millis = (time.perf_counter() - start) * 1000.0
        colors = report.colors_used if report.colors_used is not None else "-"
        dsatur = certify.colors_used(certify.dsatur_baseline(g)) if g.n else 0
        print(f"{n}\t{g.m}\t{g.max_degree}\t{report.outcome.kind}\t{colors}\t{millis:.1f}\t{dsatur}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brooks-color", description="Certified Brooks coloring of DIMACS graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log warnings and progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("color", help="color a DIMACS .col file or print an obstruction")
    p.add_argument("file")
    p.add_argument("--colors", type=int, metavar="K", help="global color budget (default: per component)")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--verify", action="store_true", help="re-check the result before exiting")
    p.add_argument("--no-timing", action="store_true", help="emit millis as null (byte-stable JSON)")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a result file against a graph")
    p.add_argument("graph_file")
    p.add_argument("result_file")
    p.set_defaults(func=cmd_verify)

    for name, func in (("gen", cmd_gen), ("bench", cmd_bench)):
        p = sub.add_parser(name, help="generate a graph" if name == "gen" else "time the engine on generated graphs")
        p.add_argument("--model", choices=MODELS, required=True)
        if name == "gen":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--out", metavar="FILE")
        else:
            p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
        p.add_argument("--p", type=float)
        p.add_argument("--d", type=int)
        p.add_argument("--seed", type=int, required=True)
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, DimacsError, GraphError, ContractError, GenSpecError, ResultFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
