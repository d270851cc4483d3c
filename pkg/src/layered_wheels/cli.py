"""Command-line front end: ``lw gen | verify | tw | separator | theta``.

Exit codes: 0 success, 1 a check failed or a claim was falsified, 2 a search
budget or solver cap ran out, 3 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .construction import InstanceTooLarge, LayeredWheelParams, build
from .formats import FORMATS, FormatError, dump, labels_of, load
from .report import Check, Report, Status
from .search import BudgetExceeded, default_budget
from .separators import PipelineFalsified, WeightError, build_pipeline, parse_weights, verify_H_separator_bound
from .suites import DEFAULT_SAMPLES, SUITES, run_suite
from .theta import find_long_theta
from .treewidth import CapExceeded, exact_treewidth, minor_min_width, upper_bound

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _params(k: int, g: int) -> LayeredWheelParams:
    try:
        return LayeredWheelParams(g, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args) -> int:
    lw = build(_params(args.k, args.g))
    labels = labels_of(lw) if args.format == "json" else None
    _write(args.out, dump(lw.graph, args.format, labels))
    return EXIT_OK


def cmd_verify(args) -> int:
    lw = build(_params(args.k, args.g))
    report = run_suite(lw, args.suite, args.seed, args.samples)
    for c in report.checks:
        print(f"{c.status.value.upper():16s} {c.name}: {c.claim}")
    if args.report:
        _write(args.report, report.to_json(timing=not args.no_timing))
    return report.exit_code()


def cmd_tw(args) -> int:
    G = load(_read(args.input), args.format).graph
    if args.mode == "lower":
        print(minor_min_width(G))
    elif args.mode == "upper":
        print(upper_bound(G).width)
    else:
        print(exact_treewidth(G, budget=default_budget()).width)
    return EXIT_OK


def cmd_separator(args) -> int:
    loaded = load(_read(args.input), args.format)
    if loaded.classes is None:
        raise UsageError("the separator pipeline needs vertex classes: use a labelled JSON graph (lw gen --format json)")
    H = loaded.graph
    w = parse_weights(_read(args.weights), H.n)
    report = Report({"input": Path(args.input).name, "n": H.n, "m": H.m})
    start = time.perf_counter()
    try:
        state = build_pipeline(H, loaded.classes, w)
    except PipelineFalsified as exc:
        report.checks.append(Check("k-prime", str(exc), Status.FALSIFIED, exc.witness, (time.perf_counter() - start) * 1000))
    else:
        report.extend(verify_H_separator_bound(state))
        print("K:", " ".join(map(str, state.K)))
        for note in state.notes:
            print("note:", note)
    for c in report.checks:
        print(f"{c.status.value.upper():16s} {c.name}: {c.claim}")
    if args.report:
        _write(args.report, report.to_json(timing=not args.no_timing))
    return report.exit_code()


def cmd_theta(args) -> int:
    if args.min_length < 2:
        raise UsageError("--min-length must be at least 2")
    G = load(_read(args.input), args.format).graph
    out = find_long_theta(G, args.min_length, default_budget())
    if out.status == "budget_exceeded":
        print("budget_exceeded", file=sys.stderr)
        return EXIT_BUDGET
    print("none" if out.certificate is None else json.dumps(out.certificate.to_dict()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lw", description="Layered-wheel graphs and certificate checkers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write G_k^g to a file")
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--g", type=int, required=True)
    gen.add_argument("--out", default=None, help="output path (default: standard output)")
    gen.add_argument("--format", choices=FORMATS, default="edgelist")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="run verification suites on G_k^g")
    ver.add_argument("--k", type=int, required=True)
    ver.add_argument("--g", type=int, required=True)
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    ver.add_argument("--report", default=None, help="write the JSON report here")
    ver.add_argument("--no-timing", action="store_true", help="omit wall-clock fields from the report")
    ver.set_defaults(func=cmd_verify)

    tw = sub.add_parser("tw", help="treewidth of a graph file")
    tw.add_argument("--in", dest="input", required=True)
    tw.add_argument("--format", choices=FORMATS, default=None, help="input format (default: sniffed)")
    tw.add_argument("--mode", choices=("exact", "upper", "lower"), default="exact")
    tw.set_defaults(func=cmd_tw)

    sep = sub.add_parser("separator", help="balanced separator pipeline on a labelled graph")
    sep.add_argument("--in", dest="input", required=True)
    sep.add_argument("--format", choices=FORMATS, default=None)
    sep.add_argument("--weights", required=True)
    sep.add_argument("--report", default=None)
    sep.add_argument("--no-timing", action="store_true")
    sep.set_defaults(func=cmd_separator)

    th = sub.add_parser("theta", help="search for a long theta")
    th.add_argument("--in", dest="input", required=True)
    th.add_argument("--format", choices=FORMATS, default=None)
    th.add_argument("--min-length", type=int, required=True)
    th.set_defaults(func=cmd_theta)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        print("lw: error: --samples must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"lw: error: vertex cap exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, FormatError, WeightError) as exc:
        print(f"lw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"lw: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:  # e.g. a malformed LW_BUDGET
        print(f"lw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
