"""Command line front end.

Exit status: 0 on success, 1 for a domain error (or a ``false`` answer
from ``equiv``, or a failed ``verify``), 2 for a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import interior
from .errors import DomainError
from .formats import (
    dumps,
    emit_dot,
    format_arc,
    parse_arc,
    quiver_to_json,
    render_text,
    triangulation_from_json,
)
from .interior import RawInteriorArc
from .quiver import Quiver, TranslationQuiver, quiver_from_triangulation
from .surface import PeripheralArc, tau_peripheral
from .tubes import build_gamma, build_t1, verify_t1, verify_theorem


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dtubes", description="Arcs and tubes in the twice-punctured disk.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    notation = dict(choices=["canonical", "gamma"], default="canonical", help="output form for peripheral arcs")

    p = sub.add_parser("normalize", help="print the canonical form of an arc")
    p.add_argument("arc")
    p.add_argument("--m", type=_positive, help="number of boundary points")
    p.add_argument("--notation", **notation)

    p = sub.add_parser("equiv", help="decide whether two arc notations name the same arc")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--m", type=_positive)

    p = sub.add_parser("tau", help="apply the Auslander-Reiten translate to an arc")
    p.add_argument("arc")
    p.add_argument("--m", type=_positive)
    p.add_argument("--notation", **notation)

    def tube_args(p):
        p.add_argument("which", choices=["t1", "gamma0", "gamma1"])
        p.add_argument("--m", type=_positive, help="boundary points (t1 only)")
        p.add_argument("--levels", type=_positive, required=True)
        p.add_argument("--notation", **notation)

    p = sub.add_parser("tube", help="print a finite window of a tube")
    tube_args(p)
    p.add_argument("--format", choices=["text", "dot", "json"], default="text")

    p = sub.add_parser("verify", help="check the tube structure on finite windows")
    p.add_argument("--levels", type=_positive, default=10)
    p.add_argument("--m", type=_positive, action="append", help="rank of T1 to check (repeatable; default 2..10)")

    p = sub.add_parser("quiver-from-triangulation", help="quiver of a triangulation given as JSON")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("render", help="DOT output for a tube, a triangulation quiver or an arc's neighbourhood")
    what = p.add_subparsers(dest="what", required=True, parser_class=_Parser)
    tube_args(what.add_parser("tube"))
    what.add_parser("quiver-from-triangulation").add_argument("file")
    r = what.add_parser("arc")
    r.add_argument("arc")
    r.add_argument("--m", type=_positive)
    r.add_argument("--notation", **notation)
    return parser


def _need_m(args, arc) -> int:
    if args.m is None:
        raise UsageError(f"{arc} is a peripheral arc; --m is required")
    return args.m


def _canonical(args, text: str):
    arc = parse_arc(text, args.m)
    if isinstance(arc, RawInteriorArc):
        return interior.normalize(arc)
    if args.m is not None:
        arc.check(args.m)
    return arc


def _fmt(args, arc) -> str:
    return format_arc(arc, args.m, getattr(args, "notation", "canonical"))


def _window(args):
    if args.which == "t1":
        if args.m is None:
            raise UsageError("tube t1 requires --m")
        if args.m < 2:
            raise DomainError("T1 needs at least 2 boundary points")
        return build_t1(args.m, args.levels)
    if args.m is not None:
        raise UsageError("--m only applies to t1")
    return build_gamma(int(args.which[-1]), args.levels)


def _load_triangulation(path: str):
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from exc
    return quiver_from_triangulation(triangulation_from_json(data))


def _arc_neighbourhood(args) -> TranslationQuiver:
    arc = _canonical(args, args.arc)
    if isinstance(arc, PeripheralArc):
        m = _need_m(args, arc)
        t = tau_peripheral(arc, m)
        succ = [PeripheralArc(arc.s, arc.k + 1)] + ([PeripheralArc(arc.s % m + 1, arc.k - 1)] if arc.k > 2 else [])
        pred = [PeripheralArc(t.s, t.k + 1)] + ([PeripheralArc(arc.s, arc.k - 1)] if arc.k > 2 else [])
    else:
        t = interior.tau(arc)
        succ, pred = interior.successors(arc), interior.predecessors(arc)
    vertices = [arc, t] + succ + pred
    arrows = [(arc, w) for w in succ] + [(w, arc) for w in pred]
    return TranslationQuiver(Quiver(tuple(vertices), tuple(arrows)), {arc: t})


def execute(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "normalize":
        return 0, _fmt(args, _canonical(args, args.arc)) + "\n"
    if cmd == "equiv":
        a, b = _canonical(args, args.a), _canonical(args, args.b)
        if isinstance(a, PeripheralArc) and isinstance(b, PeripheralArc) and args.m is None:
            raise UsageError("comparing peripheral arcs requires --m")
        same = a == b
        return (0 if same else 1), ("true\n" if same else "false\n")
    if cmd == "tau":
        arc = _canonical(args, args.arc)
        if isinstance(arc, PeripheralArc):
            return 0, _fmt(args, tau_peripheral(arc, _need_m(args, arc))) + "\n"
        return 0, _fmt(args, interior.tau(arc)) + "\n"
    if cmd == "tube":
        w = _window(args)
        if args.format == "json":
            return 0, dumps(quiver_to_json(w.tq, lambda v: _fmt(args, v)))
        if args.format == "dot":
            return 0, emit_dot(w, label=lambda v: _fmt(args, v))
        return 0, render_text(w, lambda v: _fmt(args, v))
    if cmd == "verify":
        if args.levels < 2:
            raise UsageError("verify needs --levels of at least 2")
        reports = [verify_theorem(args.levels)]
        reports += [verify_t1(m, args.levels) for m in (args.m or range(2, 11))]
        lines = []
        for report in reports:
            for c in report.checks:
                lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        ok = all(r.ok for r in reports)
        lines.append(f"{'all checks passed' if ok else 'some checks FAILED'} (levels <= {args.levels})")
        return (0 if ok else 1), "\n".join(lines) + "\n"
    if cmd == "quiver-from-triangulation":
        q = _load_triangulation(args.file)
        if args.format == "dot":
            return 0, emit_dot(q, name="triangulation")
        return 0, dumps(quiver_to_json(q, label=lambda v: v))
    if cmd == "render":
        if args.what == "tube":
            return 0, emit_dot(_window(args), label=lambda v: _fmt(args, v))
        if args.what == "quiver-from-triangulation":
            return 0, emit_dot(_load_triangulation(args.file), name="triangulation")
        return 0, emit_dot(_arc_neighbourhood(args), label=lambda v: _fmt(args, v), name="arc")
    raise UsageError(f"unknown command {cmd}")


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one command; return ``(status, stdout, stderr)``."""
    try:
        args = build_parser().parse_args(argv)
        status, out = execute(args)
        return status, out, ""
    except UsageError as exc:
        return 2, "", f"usage error: {exc}\n"
    except DomainError as exc:
        return 1, "", f"error: {exc}\n"


def main(argv: list[str] | None = None) -> int:
    status, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
