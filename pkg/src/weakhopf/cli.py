"""Command line front end.

    weakhopf verify FILE
    weakhopf decompose FILE
    weakhopf enumerate-yd FILE [--modules FILE]
    weakhopf example {group,groupoid,double} TABLE [--field cyclotomic:3] [--emit FILE]

Exit codes: 0 all checks pass, 1 a check failed, 2 unreadable input, 3 I/O trouble.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .checks import Report
from .fileio import ParseError, algebra_to_dict, digest, dumps, read_algebra, read_modules, read_table
from .scalars import FieldSpec

SCHEMA = "weakhopf-report"
SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_IO = 0, 1, 2, 3


class _Run:
    def __init__(self, args, command):
        self.args = args
        self.command = command
        self.sections = []
        self.payload = {}
        self.error = None
        self.field = None
        self.digest = None
        self.timing = {}

    def section(self, rep):
        self.sections.append(rep)
        return rep

    @property
    def passed(self):
        return self.error is None and all(r.passed for r in self.sections)

    def to_dict(self):
        d = {
            "schema": SCHEMA,
            "schema_version": SCHEMA_VERSION,
            "tool_version": __version__,
            "command": self.command,
            "input_sha256": self.digest,
            "field": self.field.to_dict() if self.field else None,
            "seed": self.args.seed,
            "precision": self.args.precision,
            "height_bound": self.args.height_bound,
            "passed": self.passed,
            "sections": [r.to_dict() for r in self.sections],
            "payload": self.payload,
        }
        if self.error is not None:
            d["error"] = self.error
        if self.args.timing:
            d["timing"] = self.timing
        return _jsonable(d, self.field)


def _jsonable(x, field=None):
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: _jsonable(v, field) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v, field) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if field is not None and field.contains(x):
        return field.format(x)
    return str(x)


def _render_text(d):
    out = [f"{d['command']}: {'PASS' if d['passed'] else 'FAIL'}",
           f"input sha256 {d['input_sha256']}"]
    f = d.get("field")
    if f:
        out.append(f"field {f['kind']}" + (f":{f['order']}" if "order" in f else ""))
    if "error" in d:
        out.append(f"error: {d['error']}")
    for s in d["sections"]:
        out.append("")
        out.append(f"{'PASS' if s['passed'] else 'FAIL'}  {s['title']}")
        for c in s["checks"]:
            line = f"  {'ok  ' if c['passed'] else 'FAIL'}  {c['name']}"
            if "witness" in c:
                line += f"  witness={json.dumps(c['witness'])}"
            out.append(line)
    if d["payload"]:
        out.append("")
        for k, v in d["payload"].items():
            out.append(f"{k}: {json.dumps(v)}")
    if "timing" in d:
        out.append("")
        out.extend(f"time {k}: {v}" for k, v in d["timing"].items())
    return "\n".join(out) + "\n"


def _timed(run, name, fn, *a, **kw):
    t = time.perf_counter()
    try:
        return fn(*a, **kw)
    finally:
        run.timing[name] = round(time.perf_counter() - t, 3)


# -- commands ----------------------------------------------------------------------------

def _verify_suites(run, H, R):
    """wha, qt and braided-group suites; returns (rm, BG) or (None, None)."""
    from .braided import IllFormed, braided_group_build, braided_group_verify
    from .wha import qt_check, wha_verify
    run.section(_timed(run, "wha_verify", wha_verify, H))
    rm, qrep = _timed(run, "qt_verify", qt_check, H, R)
    run.section(qrep)
    if rm is None:
        return None, None
    try:
        BG = _timed(run, "braided_group_build", braided_group_build, H, rm)
    except IllFormed as exc:
        run.section(exc.report or Report("braided group"))
        return rm, None
    run.section(_timed(run, "braided_group_verify", braided_group_verify, BG))
    run.payload["dim_H"] = H.dim
    run.payload["dim_Ht"] = H.Ht.dim
    run.payload["dim_B"] = BG.dim
    run.payload["is_hopf"] = H.is_hopf
    return rm, BG


def cmd_verify(run):
    H, R, raw = read_algebra(run.args.file)
    run.digest, run.field = digest(raw), H.field
    _verify_suites(run, H, R)


def _sparse(v, field):
    return [[k, field.format(c)] for k, c in sorted(v.items())]


def _decompose(run, H, R):
    from .braided import components_verify, decompose_braided_group
    from .linalg import NotSemisimple, NotSplit
    from .yd import component_bcomod, hom_yd, to_yd
    rm, BG = _verify_suites(run, H, R)
    if BG is None:
        return None, None
    a = run.args
    try:
        comps = _timed(run, "decompose", decompose_braided_group, BG, a.precision, a.height_bound, a.seed)
    except (NotSplit, NotSemisimple) as exc:
        run.error = f"{type(exc).__name__}: {exc}"
        return BG, None
    run.section(components_verify(BG, comps))
    run.payload["components"] = len(comps)
    run.payload["component_dims"] = [c.dim for c in comps]
    run.payload["component_bases"] = [[_sparse(v, H.field) for v in c.space.rows] for c in comps]
    yds = [to_yd(component_bcomod(BG, c.space, f"D{c.index}"), rm) for c in comps]
    run.payload["hom_yd_dims"] = [[len(hom_yd(x, y)) for y in yds] for x in yds]
    return BG, comps


def cmd_decompose(run):
    H, R, raw = read_algebra(run.args.file)
    run.digest, run.field = digest(raw), H.field
    _decompose(run, H, R)


def cmd_enumerate(run):
    from .comod import ComponentError, enumerate_yd
    from .braided import IllFormed
    from .wha import NoInverse, NotQuasiTriangular
    H, R, raw = read_algebra(run.args.file)
    run.digest, run.field = digest(raw), H.field
    users = None
    if run.args.modules:
        users, mraw = read_modules(run.args.modules, H.field)
        run.digest = digest(raw + b"\0" + mraw)
    a = run.args
    try:
        payload, checks, _, _ = _timed(run, "enumerate", enumerate_yd, H, R, a.precision, a.height_bound,
                                       a.seed, users)
    except (NotQuasiTriangular, NoInverse, IllFormed) as exc:
        run.error = f"{type(exc).__name__}: {exc}"
        if exc.report is not None:
            run.section(exc.report)
        return
    except (ComponentError, ArithmeticError) as exc:
        run.error = f"{type(exc).__name__}: {exc}"
        return
    run.section(checks)
    run.payload.update(payload)


def _parse_field(text):
    if text in (None, "rationals", "Q"):
        return FieldSpec.rationals()
    kind, _, order = text.partition(":")
    if kind != "cyclotomic" or not order.isdigit() or int(order) < 1:
        raise ParseError(f"field must be 'rationals' or 'cyclotomic:N', got {text!r}")
    return FieldSpec.cyclotomic(int(order))


def cmd_example(run):
    from .builders import (GroupTable, GroupoidTable, build_drinfeld_double, build_group_algebra,
                           build_groupoid_algebra, groupoid_from_group)
    table, raw = read_table(run.args.table)
    field = _parse_field(run.args.field)
    run.digest, run.field = digest(raw), field
    kind = run.args.kind
    if kind in ("group", "double") and not isinstance(table, GroupTable):
        raise ParseError(f"'{kind}' needs a group table")
    if kind == "group":
        H, R = build_group_algebra(table, field)
    elif kind == "double":
        H, R = build_drinfeld_double(table, field)
    else:
        gd = table if isinstance(table, GroupoidTable) else groupoid_from_group(table)
        H, R = build_groupoid_algebra(gd, field)
    run.payload["kind"] = kind
    _verify_suites(run, H, R)
    if run.args.emit:
        with open(run.args.emit, "w", encoding="utf-8") as fh:
            fh.write(dumps(algebra_to_dict(H, R)))


COMMANDS = {"verify": cmd_verify, "decompose": cmd_decompose, "enumerate-yd": cmd_enumerate,
            "example": cmd_example}


def build_parser():
    p = argparse.ArgumentParser(prog="weakhopf", description="Exact checks for quasi-triangular weak Hopf algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision", type=int, default=256, help="bits for numeric root isolation")
    common.add_argument("--height-bound", type=int, default=10 ** 6)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings (breaks byte identity)")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("verify", "decompose"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
    s = sub.add_parser("enumerate-yd", parents=[common])
    s.add_argument("file")
    s.add_argument("--modules", help="user-supplied simple right modules for blocks with d > 1")
    s = sub.add_parser("example", parents=[common])
    s.add_argument("kind", choices=("group", "groupoid", "double"))
    s.add_argument("table")
    s.add_argument("--field", default="rationals", help="rationals or cyclotomic:N")
    s.add_argument("--emit", help="write the built algebra file here")
    p.add_argument("--version", action="version", version=f"weakhopf {__version__}")
    return p


def run_command(argv):
    """Returns (exit code, report dict or None)."""
    from .builders import InvalidTable
    from .wha import DimensionMismatch
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_PARSE), None
    if args.seed < 0 or args.precision < 16 or args.height_bound < 1:
        print("weakhopf: seed must be >= 0, precision >= 16, height bound >= 1", file=sys.stderr)
        return EXIT_PARSE, None
    run = _Run(args, args.command)
    try:
        COMMANDS[args.command](run)
    except (ParseError, InvalidTable, DimensionMismatch) as exc:
        print(f"weakhopf: {exc}", file=sys.stderr)
        return EXIT_PARSE, None
    except OSError as exc:
        print(f"weakhopf: {exc}", file=sys.stderr)
        return EXIT_IO, None
    report = run.to_dict()
    text = json.dumps(report, indent=2) + "\n" if args.format == "json" else _render_text(report)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"weakhopf: {exc}", file=sys.stderr)
        return EXIT_IO, report
    return (EXIT_OK if run.passed else EXIT_FAIL), report


def main(argv=None):
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
