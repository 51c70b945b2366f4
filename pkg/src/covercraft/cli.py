"""Command line front end.

Exit codes: 0 success, 1 a verification found a mismatch with the expected
tables (or a violation), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import checks
from .algebra import GaloisGroup, parse_group
from .classifier import (
    check_prime_degree_nonexistence,
    check_simple_cyclic_nonexistence,
    classify_p2,
    classify_scroll,
    classify_veronese,
    diff_against_builtin,
    z4_no_simple_cyclic_property,
)
from .errors import InvalidBase
from .records import render, to_record
from .surfaces import (
    MinimalDegreeSurface,
    cohomology,
    euler_characteristic_rr,
    p2,
    parse_class,
    scroll,
    section_count_oracle,
    veronese,
)
from .tables import load_tables

FORMATS = ("json", "csv", "md")
SURFACES = ("p2", "veronese", "scroll")
KINDS = ("simple-cyclic", "prime-degree", "veronese", "z4-simple-cyclic")


@dataclass(frozen=True)
class Command:
    kind: str
    params: dict = field(default_factory=dict)


@dataclass
class Outcome:
    code: int
    output: str
    diagnostics: list[str] = field(default_factory=list)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covercraft",
        description="Classify quadruple Galois canonical covers of surfaces of minimal degree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def surface_flags(p, required=True):
        p.add_argument("--surface", choices=SURFACES, required=required)
        p.add_argument("--e", type=int, help="scroll: -C0^2")
        p.add_argument("--m", type=int, help="scroll: hyperplane class C0 + m f")

    def tables_flag(p):
        p.add_argument("--tables", help="expected-tables file (overrides COVERCRAFT_TABLES)")

    p = sub.add_parser("classify", help="classify covers of one base surface")
    surface_flags(p)
    p.add_argument("--group", default="all", help="z4, z2z2 or all")
    p.add_argument("--format", choices=FORMATS, default="md")
    tables_flag(p)

    p = sub.add_parser("table", help="classification table over a grid of scrolls")
    p.add_argument("--group", default="all")
    p.add_argument("--e-list", default="0,1,2,3")
    p.add_argument("--m-range", default="1-20", help="inclusive range such as 1-20")
    p.add_argument("--format", choices=FORMATS, default="md")
    tables_flag(p)

    p = sub.add_parser("nonexistence", help="run a non-existence check")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--degree-max", type=int, default=20)
    p.add_argument("--e-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=50)

    p = sub.add_parser("cohomology", help="h^0, h^1, h^2 of a line bundle")
    surface_flags(p)
    p.add_argument("--class", dest="divisor", required=True, help="(a,b) on a scroll, d on P2")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("invariants", help="invariants of one labeled case")
    p.add_argument("--label", required=True)
    p.add_argument("--e", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--format", choices=FORMATS, default="md")
    tables_flag(p)

    p = sub.add_parser("selfcheck", help="run the property suites")
    p.add_argument("--suite", choices=("all",) + tuple(checks.SUITES), default="all")
    return parser


def _surface(parser, args) -> MinimalDegreeSurface:
    if args.surface == "scroll":
        if args.e is None or args.m is None:
            parser.error("--surface scroll needs --e and --m")
        try:
            return scroll(args.e, args.m)
        except InvalidBase as exc:
            parser.error(f"--m: {exc}")
    if args.e is not None or args.m is not None:
        parser.error(f"--e/--m only apply to --surface scroll, not {args.surface}")
    return p2() if args.surface == "p2" else veronese()


def _groups(parser, text: str) -> list[GaloisGroup]:
    if text.strip().lower() == "all":
        return [GaloisGroup.Z2xZ2, GaloisGroup.Z4]
    try:
        return [parse_group(text)]
    except ValueError as exc:
        parser.error(f"--group: {exc}")


def _int_list(parser, flag, text) -> list[int]:
    try:
        values = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        parser.error(f"{flag}: expected comma-separated integers, got {text!r}")
    if not values:
        parser.error(f"{flag}: empty list")
    if values[0] < 0:
        parser.error(f"{flag}: e must be nonnegative")
    return values


def _range(parser, flag, text) -> list[int]:
    sep = ":" if ":" in text else "-"
    try:
        lo, hi = (int(x) for x in text.split(sep))
    except ValueError:
        parser.error(f"{flag}: expected LO-HI, got {text!r}")
    if lo > hi:
        parser.error(f"{flag}: empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_command(argv: Sequence[str]) -> Command:
    """Parse and validate; invalid input exits with status 2 and a usage message."""
    parser = _build_parser()
    args = parser.parse_args(list(argv))
    kind = args.command
    params: dict = {}
    if kind == "classify":
        params = {"surface": _surface(parser, args), "groups": _groups(parser, args.group),
                  "format": args.format, "tables": args.tables}
    elif kind == "table":
        params = {"groups": _groups(parser, args.group),
                  "e_list": _int_list(parser, "--e-list", args.e_list),
                  "m_range": _range(parser, "--m-range", args.m_range),
                  "format": args.format, "tables": args.tables}
        if not any(m >= e + 1 for e in params["e_list"] for m in params["m_range"]):
            parser.error("--m-range: no (e, m) pair satisfies m >= e+1")
    elif kind == "nonexistence":
        if args.kind == "simple-cyclic" and args.degree_max < 4:
            parser.error("--degree-max must be at least 4")
        for flag, value in (("--e-max", args.e_max), ("--m-max", args.m_max)):
            if value < 0:
                parser.error(f"{flag} must be nonnegative")
        params = {"kind": args.kind, "degree_max": args.degree_max,
                  "e_max": args.e_max, "m_max": args.m_max}
    elif kind == "cohomology":
        W = _surface(parser, args)
        try:
            D = parse_class(args.divisor)
        except ValueError as exc:
            parser.error(f"--class: {exc}")
        if not W.owns(D):
            parser.error(f"--class: {args.divisor} is not a class on {W}")
        params = {"surface": W, "divisor": D, "format": args.format}
    elif kind == "invariants":
        params = {"label": args.label, "e": args.e, "m": args.m, "format": args.format,
                  "tables": args.tables}
    elif kind == "selfcheck":
        suites = list(checks.SUITES) if args.suite == "all" else [args.suite]
        params = {"suites": suites}
    return Command(kind, params)


def _classify(W, group, tables):
    if W.is_scroll:
        return classify_scroll(W.e, W.m, group, tables)
    if W.kind == "P2":
        return classify_p2(group, tables)
    return classify_veronese()[0]


def _run_classify(p) -> Outcome:
    tables = load_tables(p["tables"])
    W = p["surface"]
    records, diags, code = [], [], 0
    for group in p["groups"]:
        cases = _classify(W, group, tables)
        records.extend(to_record(c) for c in cases)
        report = diff_against_builtin(cases, W.e, W.m, group, tables, surface=W.kind)
        if not report.empty:
            code = 1
            diags.extend(report.lines())
    if W.kind == "veronese":
        _, witness = classify_veronese()
        diags.append(f"Veronese: need restriction degree {witness.required}, "
                     f"line class restricts with degree {witness.line_degree_on_curve} "
                     f"({witness.parity}); no solutions")
    return Outcome(code, render(records, p["format"]), diags)


def _run_table(p) -> Outcome:
    tables = load_tables(p["tables"])
    records, diags, code = [], [], 0
    for e in p["e_list"]:
        for m in p["m_range"]:
            if m < e + 1:
                continue
            for group in sorted(p["groups"], key=lambda g: g.value):
                cases = classify_scroll(e, m, group, tables)
                records.extend(to_record(c) for c in cases)
                report = diff_against_builtin(cases, e, m, group, tables, surface="scroll")
                if not report.empty:
                    code = 1
                    diags.extend(report.lines())
    return Outcome(code, render(records, p["format"]), diags)


def _run_nonexistence(p) -> Outcome:
    kind = p["kind"]
    if kind == "simple-cyclic":
        hits = check_simple_cyclic_nonexistence(p["degree_max"], p["e_max"], p["m_max"])
        lines = [f"n={h.n} e={h.e} m={h.m} L={h.L}" for h in hits]
    elif kind == "prime-degree":
        hits = check_prime_degree_nonexistence(p["degree_max"], p["e_max"], p["m_max"])
        lines = [f"p={h.n} e={h.e} m={h.m} L={h.L}" for h in hits]
    elif kind == "veronese":
        cases, witness = classify_veronese()
        lines = [f"unexpected case {c.label}" for c in cases]
        lines += [f"restriction degree solution l={s}" for s in witness.solutions]
        header = (f"Veronese: required restriction degree {witness.required}, "
                  f"available degrees {witness.parity} (2*l)")
        body = "\n".join([header] + lines + [f"{len(lines)} violations"]) + "\n"
        return Outcome(1 if lines else 0, body)
    else:
        ok = z4_no_simple_cyclic_property(p["e_max"], p["m_max"])
        lines = [] if ok else ["a Z4 case has D1 = 0"]
    body = "\n".join(lines + [f"{len(lines)} violations"]) + "\n"
    return Outcome(1 if lines else 0, body)


def _run_cohomology(p) -> Outcome:
    W, D = p["surface"], p["divisor"]
    dims = cohomology(W, D)
    rec = {"surface": str(W), "class": str(D), "h0": dims.h0, "h1": dims.h1, "h2": dims.h2,
           "chi": euler_characteristic_rr(W, D), "h0_oracle": section_count_oracle(W, D)}
    if p["format"] == "json":
        return Outcome(0, json.dumps(rec, indent=2) + "\n")
    text = f"{W} O({D}): h0={dims.h0} h1={dims.h1} h2={dims.h2} chi={rec['chi']}\n"
    return Outcome(0, text)


def _run_invariants(p) -> Outcome:
    tables = load_tables(p["tables"])
    matches = [r for r in tables.cases if r["label"] == p["label"]]
    if not matches:
        known = ", ".join(sorted(r["label"] for r in tables.cases))
        return Outcome(2, "", [f"--label: unknown label {p['label']!r}; known: {known}"])
    rec = matches[0]
    group = GaloisGroup(rec["group"])
    if rec["surface"] == "P2":
        cases = classify_p2(group, tables)
    else:
        e, m = p["e"], p["m"]
        e_lo, e_hi = rec.get("e", [None, None])
        m_lo, m_hi = rec.get("m", [None, None])
        if e is None and e_lo == e_hi:
            e = e_lo
        if m is None and m_lo is not None and m_lo == m_hi:
            m = m_lo
        if e is None or m is None:
            return Outcome(2, "", [f"--e/--m required for label {p['label']}"])
        try:
            scroll(e, m)
        except InvalidBase as exc:
            return Outcome(2, "", [f"--m: {exc}"])
        cases = classify_scroll(e, m, group, tables)
    found = [c for c in cases if c.label == p["label"]]
    if not found:
        return Outcome(1, render([], p["format"]),
                       [f"{p['label']} does not occur at e={p['e']} m={p['m']}"])
    return Outcome(0, render([to_record(c) for c in found], p["format"]))


def _run_selfcheck(p) -> Outcome:
    results = checks.run_suites(p["suites"])
    lines, code = [], 0
    for name, fails in results.items():
        lines.append(f"{name}: {'PASS' if not fails else 'FAIL'} ({len(fails)} failures)")
        lines.extend(f"  {f}" for f in fails[:20])
        if fails:
            code = 1
    return Outcome(code, "\n".join(lines) + "\n")


_DISPATCH = {
    "classify": _run_classify,
    "table": _run_table,
    "nonexistence": _run_nonexistence,
    "cohomology": _run_cohomology,
    "invariants": _run_invariants,
    "selfcheck": _run_selfcheck,
}


def execute(cmd: Command) -> Outcome:
    return _DISPATCH[cmd.kind](cmd.params)


def main(argv: Optional[Sequence[str]] = None) -> int:
    cmd = parse_command(sys.argv[1:] if argv is None else argv)
    outcome = execute(cmd)
    sys.stdout.write(outcome.output)
    for line in outcome.diagnostics:
        print(line, file=sys.stderr)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
