"""Command-line front end: ``ckgraph <verb> <family> <d> <l> [options]``.

Exit status is 0 on success, 1 on a domain error or a verification
mismatch, and 2 on malformed arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import export, formulas
from .digraph import diameter, iterated_line_digraph
from .errors import CKGraphError
from .families import Family, FamilySpec
from .labels import format_label, parse_label
from .reachability import reachable, reachable_bfs
from .verify import SUITES, report_csv, run_suite

SIZE_GUARD = 10**7


class Refused(CKGraphError):
    pass


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", help="K, DB, CK or MCK")
    p.add_argument("d", type=int)
    p.add_argument("l", type=int)


def _output_args(p: argparse.ArgumentParser, formats) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--output", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckgraph",
        description="Kautz, De Bruijn and cyclic Kautz digraphs: build, measure, verify.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("generate", help="write the digraph")
    _family_args(p)
    p.add_argument("--t", type=int, default=0, help="apply the line digraph operator t times")
    _output_args(p, ["dot", "json", "csv"])
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("stats", help="emit the JSON stats record")
    _family_args(p)
    p.add_argument("--t", type=int, default=0)
    _output_args(p, ["json", "csv"])
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("diameter", help="print FINITE(n), INFINITE or NONEXISTENT")
    _family_args(p)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--formula-only", action="store_true", help="skip construction (CK only)")
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("iterate", help="apply L^t and report")
    _family_args(p)
    p.add_argument("--t", type=int, required=True)
    _output_args(p, ["json", "dot", "csv"])
    p.add_argument("--graph", action="store_true", help="emit the digraph instead of its stats")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("oracle", help="imprint reachability in CK(2, l)")
    _family_args(p)
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--check", action="store_true", help="confirm by breadth-first search")
    p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("verify", help="formula-vs-construction sweep as CSV")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--lmax", type=int, default=6)
    p.add_argument("--tmax", type=int, default=None, help="default: l-2 per row")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", metavar="PATH")
    return parser


def _spec(args) -> FamilySpec:
    return FamilySpec(Family.parse(args.family), args.d, args.l)


def _predicted_size(spec: FamilySpec, t: int) -> int:
    n = spec.predicted_order()
    if t == 0:
        return n
    if spec.family is Family.CYCLIC_KAUTZ:
        if spec.l >= 3 and t <= spec.l - 2:
            return formulas.ck_iterated_vertex_count(spec.d, spec.l, t)
        if spec.l == 4:
            return formulas.ck4_count_closed_form(spec.d, t)
    # out-regular families grow by exactly d per iteration; an upper bound for CK
    return n * spec.d**t


def _construct(spec: FamilySpec, t: int, force: bool):
    size = _predicted_size(spec, t)
    if size > SIZE_GUARD and not force:
        raise Refused(f"{spec.descriptor} with t={t} has about {size} vertices; pass --force to build it")
    g = spec.build()
    return iterated_line_digraph(g, t) if t else g


def _emit(text: str, path: str | None) -> None:
    if path:
        export.write_atomic(path, text)
    else:
        sys.stdout.write(text)


def _render_graph(g, fmt: str, spec: FamilySpec, t: int) -> str:
    if fmt == "dot":
        return export.to_dot(g)
    if fmt == "json":
        return export.to_json(g, spec.family.value, spec.d, spec.l, t)
    return export.to_csv(g)


def _stats_text(g, fmt: str, spec: FamilySpec, t: int) -> str:
    record = export.stats_record(g, spec.family.value, spec.d, spec.l, t)
    if fmt == "csv":
        return export.stats_csv(record)
    return json.dumps(record, indent=2) + "\n"


def cmd_generate(args) -> int:
    spec = _spec(args)
    g = _construct(spec, args.t, args.force)
    _emit(_render_graph(g, args.format, spec, args.t), args.output)
    return 0


def cmd_stats(args) -> int:
    spec = _spec(args)
    g = _construct(spec, args.t, args.force)
    _emit(_stats_text(g, args.format, spec, args.t), args.output)
    return 0


def cmd_diameter(args) -> int:
    spec = _spec(args)
    if args.formula_only:
        if spec.family is not Family.CYCLIC_KAUTZ or args.t:
            raise CKGraphError("--formula-only is available for CK with t = 0 only")
        result = formulas.ck_diameter_formula(spec.d, spec.l)
    else:
        result = diameter(_construct(spec, args.t, args.force))
    _emit(f"{result}\n", args.output)
    return 0


def cmd_iterate(args) -> int:
    spec = _spec(args)
    if args.t < 0:
        raise CKGraphError("--t must be nonnegative")
    g = _construct(spec, args.t, args.force)
    if not args.count_only:
        text = _render_graph(g, args.format, spec, args.t) if args.graph else _stats_text(
            g, "csv" if args.format == "csv" else "json", spec, args.t
        )
        _emit(text, args.output)
        return 0
    expected = None
    if spec.family is Family.CYCLIC_KAUTZ and spec.l >= 3:
        if args.t <= spec.l - 2:
            expected = formulas.ck_iterated_vertex_count(spec.d, spec.l, args.t)
        elif spec.l == 4:
            expected = formulas.ck4_count_closed_form(spec.d, args.t)
    if expected is None:
        _emit(f"vertices={g.order} formula=n/a\n", args.output)
        return 0
    ok = expected == g.order
    _emit(f"vertices={g.order} formula={expected} {'MATCH' if ok else 'MISMATCH'}\n", args.output)
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    spec = _spec(args)
    if spec.family is not Family.CYCLIC_KAUTZ or spec.d != 2:
        raise CKGraphError(f"the imprint oracle needs family CK with d = 2, got {spec.descriptor}")
    u = parse_label(args.u, 2)
    v = parse_label(args.v, 2)
    answer = reachable(u, v, d=2, l=spec.l)
    lines = [f"reachable({format_label(u)}, {format_label(v)}) = {str(answer).lower()}"]
    status = 0
    if args.check:
        confirmed = reachable_bfs(u, v)
        ok = confirmed == answer
        lines.append(f"bfs = {str(confirmed).lower()} {'MATCH' if ok else 'MISMATCH'}")
        status = 0 if ok else 1
    _emit("\n".join(lines) + "\n", args.output)
    return status


def cmd_verify(args) -> int:
    rows = run_suite(args.suite, args.dmax, args.lmax, args.tmax, args.jobs)
    _emit(report_csv(rows), args.output)
    return 0 if all(r.match for r in rows) else 1


COMMANDS = {
    "generate": cmd_generate,
    "stats": cmd_stats,
    "diameter": cmd_diameter,
    "iterate": cmd_iterate,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except CKGraphError as exc:
        print(f"ckgraph: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
