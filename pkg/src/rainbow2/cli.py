"""``rainbow2`` command line: color, verify, rc, gen, bench.

Exit codes: 0 ok, 1 parse/usage error, 2 structure rejected,
3 completion failed, 4 not rainbow connected, 5 instance too large.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import algorithm
from .errors import (CompletionFailed, Disconnected, GenerationExhausted, InstanceTooLarge,
                     PaletteTooLarge, ParseError, RainbowError, StructureError, UnknownName)
from .generators import GeneratorSpec, diam2_p_range, generate
from .io import format_coloring, format_edge_list, parse_coloring, parse_edge_list
from .verify import is_rainbow_connected, rc_exact

OK, USAGE, STRUCTURE, COMPLETION, NOT_RAINBOW, TOO_LARGE = range(6)

_FAMILY_ALIASES = {
    "random-diam2": "random_diam2_bridgeless",
    "random_diam2_bridgeless": "random_diam2_bridgeless",
    "diam2": "random_diam2_bridgeless",
    "radius1-pendant": "radius1_pendant",
    "radius1_pendant": "radius1_pendant",
    "pendant": "radius1_pendant",
    "named": "named",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(USAGE, str(exc)) from exc


def _write(path: str | None, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _graph(path):
    try:
        return parse_edge_list(_read(path))
    except ParseError as exc:
        raise _Fail(USAGE, f"{path}: {exc}") from exc


def cmd_color(args) -> int:
    g = _graph(args.graph)
    run = {
        "auto": algorithm.color_rc2,
        "diam2": algorithm.color_bridgeless_diam2,
        "pendant": algorithm.color_radius1_pendant,
    }[args.mode]
    try:
        result = run(g)
    except (StructureError, Disconnected) as exc:
        raise _Fail(STRUCTURE, f"rejected: {exc}") from exc
    except CompletionFailed as exc:
        if args.trace and exc.trace is not None:
            _write(args.trace, exc.trace.to_json() + "\n")
        raise _Fail(COMPLETION, f"completion failed: {exc}") from exc
    _write(args.output, format_coloring(g, result.coloring))
    if args.trace:
        _write(args.trace, result.trace.to_json() + "\n")
    return OK


def cmd_verify(args) -> int:
    g = _graph(args.graph)
    try:
        n, coloring = parse_coloring(_read(args.coloring))
    except ParseError as exc:
        raise _Fail(USAGE, f"{args.coloring}: {exc}") from exc
    if n != g.n or len(coloring.colors) != g.m or set(coloring.colors) != set(g.edges):
        raise _Fail(USAGE, "colouring does not match the graph")
    try:
        verdict = is_rainbow_connected(g, coloring)
    except PaletteTooLarge as exc:
        raise _Fail(TOO_LARGE, str(exc)) from exc
    if not verdict:
        s, t = verdict.failing_pair
        print(f"NOT-RAINBOW-CONNECTED {s} {t}")
        return NOT_RAINBOW
    cert = verdict.certificate
    print(f"RAINBOW-CONNECTED pairs={len(cert)} colors={len(coloring.used)} "
          f"longest_witness={cert.longest()}")
    return OK


def cmd_rc(args) -> int:
    g = _graph(args.graph)
    try:
        value = rc_exact(g, args.k_max)
    except InstanceTooLarge as exc:
        raise _Fail(TOO_LARGE, str(exc)) from exc
    except Disconnected as exc:
        raise _Fail(STRUCTURE, str(exc)) from exc
    print(value if value is not None else f"> {args.k_max}")
    return OK


def _spec_from_args(args) -> GeneratorSpec:
    if args.spec:
        try:
            return GeneratorSpec.from_json(_read(args.spec))
        except (ValueError, TypeError) as exc:
            raise _Fail(USAGE, f"bad generator spec: {exc}") from exc
    if not args.family:
        raise _Fail(USAGE, "either --spec or --family is required")
    family = _FAMILY_ALIASES.get(args.family)
    if family is None:
        raise _Fail(USAGE, f"unknown family {args.family!r}")
    try:
        return GeneratorSpec(family, args.n or 0, args.p, args.seed, args.name)
    except ValueError as exc:
        raise _Fail(USAGE, str(exc)) from exc


def cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    try:
        g = generate(spec)
    except (UnknownName, GenerationExhausted) as exc:
        raise _Fail(USAGE, str(exc)) from exc
    _write(args.output, format_edge_list(g))
    return OK


BENCH_FIELDS = ["seed", "n", "m", "colors_used", "completion_case", "repair_iterations",
                "wall_time"]


def bench_specs(count: int, n_min: int, n_max: int, seed: int, family: str):
    """Deterministic list of generator specs for a benchmark corpus."""
    rng = np.random.Generator(np.random.PCG64(seed))
    specs = []
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        if family == "random_diam2_bridgeless":
            lo, hi = diam2_p_range(n)
        else:
            lo, hi = 0.2, 0.9
        p = round(float(rng.uniform(lo, hi)), 6)
        specs.append(GeneratorSpec(family, n, p, int(rng.integers(2**32))))
    return specs


def bench_row(spec: GeneratorSpec) -> dict:
    row = {"seed": spec.seed, "n": spec.n, "m": "", "colors_used": "",
           "completion_case": "", "repair_iterations": "", "wall_time": ""}
    try:
        g = generate(spec)
        row["m"] = g.m
        start = time.perf_counter()
        result = algorithm.color_rc2(g)
        row["wall_time"] = f"{time.perf_counter() - start:.6f}"
        row["colors_used"] = result.colors_used
        row["completion_case"] = result.trace.completion_case
        row["repair_iterations"] = result.trace.repair_iterations
    except RainbowError as exc:
        row["completion_case"] = f"error:{type(exc).__name__}"
        if isinstance(exc, CompletionFailed) and exc.trace is not None:
            row["repair_iterations"] = exc.trace.repair_iterations
    return row


def cmd_bench(args) -> int:
    family = _FAMILY_ALIASES.get(args.family)
    if family not in ("random_diam2_bridgeless", "radius1_pendant"):
        raise _Fail(USAGE, f"bench family must be diam2 or pendant, not {args.family!r}")
    if not 1 <= args.n_min <= args.n_max:
        raise _Fail(USAGE, "need 1 <= --n-min <= --n-max")
    specs = bench_specs(args.count, args.n_min, args.n_max, args.seed, family)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(bench_row, specs))
    else:
        rows = [bench_row(s) for s in specs]
    rows.sort(key=lambda r: (r["n"], r["seed"]))
    fields = [f for f in BENCH_FIELDS if not (args.no_timing and f == "wall_time")]
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    done = [r for r in rows if r["colors_used"] != ""]
    repaired = sum(1 for r in done if r["repair_iterations"])
    top = max((r["colors_used"] for r in done), default=0)
    rate = repaired / len(done) if done else 0.0
    out.write(f"# instances={len(rows)} max_colors_used={top} repair_rate={rate:.4f} "
              f"failures={len(rows) - len(done)}\n")
    _write(args.output, out.getvalue())
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbow2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("color", help="rainbow-colour a graph with rc = 2")
    p.add_argument("graph", help="edge-list file, '-' for stdin")
    p.add_argument("--mode", choices=["auto", "diam2", "pendant"], default="auto")
    p.add_argument("--trace", metavar="PATH", help="write the colouring trace as JSON")
    p.add_argument("-o", "--output", help="colouring document (default stdout)")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check that a colouring is rainbow connected")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rc", help="exact rainbow connection number of a small graph")
    p.add_argument("graph")
    p.add_argument("--k-max", type=int, default=5)
    p.set_defaults(func=cmd_rc)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--spec", metavar="JSON", help="generator spec document")
    p.add_argument("--family", help="random-diam2, radius1-pendant or named")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="colour a generated corpus and report CSV")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", default="diam2", help="diam2 or pendant")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true",
                   help="drop the wall_time column for byte-stable output")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"rainbow2: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
