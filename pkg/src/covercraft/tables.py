"""Loading and expanding the built-in expected classification tables.

The tables live in ``data/expected_tables.json``.  Class coefficients are
linear expressions in e and m such as ``"2m-e+1"``.  The path can be
overridden with the ``COVERCRAFT_TABLES`` environment variable or an explicit
argument (used for mutation testing).
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .algebra import GaloisGroup
from .surfaces import DivisorClass

ENV_VAR = "COVERCRAFT_TABLES"
FORMAT = "covercraft-expected-tables"

_TERM_RE = re.compile(r"([+-]?)(\d*)([em]?)")


def eval_linear(expr: Union[str, int], e: Optional[int], m: Optional[int]) -> int:
    """Evaluate an integer linear form in e and m, e.g. ``"2m-e+1"``."""
    if isinstance(expr, int):
        return expr
    text = expr.replace(" ", "").replace("*", "")
    if not text:
        raise ValueError("empty expression")
    total, pos = 0, 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"bad linear expression {expr!r}")
        sign, digits, var = match.groups()
        if not digits and not var:
            raise ValueError(f"bad linear expression {expr!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if var == "e":
            if e is None:
                raise ValueError(f"{expr!r} needs e")
            coeff *= e
        elif var == "m":
            if m is None:
                raise ValueError(f"{expr!r} needs m")
            coeff *= m
        total += coeff
        pos = match.end()
    return total


def eval_class(entry, e: Optional[int], m: Optional[int]) -> DivisorClass:
    if isinstance(entry, list):
        return DivisorClass(eval_linear(entry[0], e, m), eval_linear(entry[1], e, m))
    return DivisorClass(eval_linear(entry, e, m))


@dataclass(frozen=True)
class ExpectedCase:
    label: str
    group: GaloisGroup
    surface: str
    L1: DivisorClass
    L2: DivisorClass
    D1: DivisorClass
    D2: DivisorClass
    q: int
    source: str
    paper_ref: str
    swap_duplicate_of: Optional[str] = None


@dataclass(frozen=True)
class Tables:
    cases: tuple[dict, ...]
    shapes: tuple[dict, ...]
    origin: str = "builtin"

    def without(self, label: str) -> "Tables":
        """Copy with every record of ``label`` dropped (mutation testing)."""
        kept = tuple(r for r in self.cases if r["label"] != label)
        return Tables(kept, self.shapes, f"{self.origin} minus {label}")

    def to_json(self) -> str:
        doc = {"format": FORMAT, "version": 1, "cases": list(self.cases),
               "pushforward_shapes": list(self.shapes)}
        return json.dumps(doc, indent=2)


def _in_range(bounds, value: Optional[int]) -> bool:
    if bounds is None:
        return True
    lo, hi = bounds
    return (lo is None or value >= lo) and (hi is None or value <= hi)


def _applies(record: dict, surface: str, e, m) -> bool:
    if record["surface"] != surface:
        return False
    if surface != "scroll":
        return True
    return _in_range(record.get("e"), e) and _in_range(record.get("m"), m) and m >= e + 1


def expected_cases(tables: "Tables", surface: str, group: GaloisGroup,
                   e: Optional[int] = None, m: Optional[int] = None) -> list[ExpectedCase]:
    out = []
    for rec in tables.cases:
        if GaloisGroup(rec["group"]) is not group or not _applies(rec, surface, e, m):
            continue
        swap = rec.get("swap_duplicate_of")
        swap_label = None
        if swap and swap.get("e") == e and swap.get("m") == m:
            swap_label = swap["label"]
        out.append(ExpectedCase(
            label=rec["label"],
            group=group,
            surface=surface,
            L1=eval_class(rec["L1"], e, m),
            L2=eval_class(rec["L2"], e, m),
            D1=eval_class(rec["D1"], e, m),
            D2=eval_class(rec["D2"], e, m),
            q=eval_linear(rec["q"], e, m),
            source=rec["source"],
            paper_ref=rec["paper_ref"],
            swap_duplicate_of=swap_label,
        ))
    return out


def expected_shapes(tables: "Tables", surface: str, group: GaloisGroup,
                    e: Optional[int] = None, m: Optional[int] = None):
    """(name, regular, sorted summand classes) for the applicable shapes."""
    out = []
    for rec in tables.shapes:
        if group.value not in rec["groups"] or not _applies(rec, surface, e, m):
            continue
        summands = sorted(
            (eval_class(s, e, m) for s in rec["summands"]),
            key=lambda D: (D.a, D.b or 0),
        )
        out.append((rec["name"], rec["regular"], summands))
    return out


def load_tables(path: Union[str, Path, None] = None) -> Tables:
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is None:
        text = resources.files("covercraft").joinpath("data/expected_tables.json").read_text()
        origin = "builtin"
    else:
        text = Path(path).read_text()
        origin = str(path)
    doc = json.loads(text)
    if doc.get("format") != FORMAT:
        raise ValueError(f"{origin}: not a covercraft expected-tables file")
    return Tables(tuple(doc["cases"]), tuple(doc.get("pushforward_shapes", ())), origin)
