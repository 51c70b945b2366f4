"""Flat output records for classification cases and their renderings."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Optional

from .classifier import ClassificationCase

CSV_FIELDS = ["label", "surface", "e", "m", "D1", "D2", "p_g", "q", "chi", "K2",
              "generic_A1", "source"]
JSON_FIELDS = CSV_FIELDS + ["swap_duplicate_of", "paper_ref"]
_INT_FIELDS = {"e", "m", "p_g", "q", "chi", "K2", "generic_A1"}


def to_record(case: ClassificationCase) -> dict:
    W, inv = case.W, case.invariants
    rec = {
        "label": case.label,
        "surface": W.kind,
        "e": W.e,
        "m": W.m,
        "D1": str(case.D1),
        "D2": str(case.D2),
        "p_g": inv.p_g,
        "q": inv.q,
        "chi": inv.chi,
        "K2": inv.K2,
        "generic_A1": inv.generic_A1,
        "source": case.source,
        "swap_duplicate_of": case.swap_duplicate_of,
        "paper_ref": case.paper_ref,
    }
    return {k: rec[k] for k in JSON_FIELDS}


def render_json(records: list[dict]) -> str:
    if not records:
        return "[]\n"
    return json.dumps(records, indent=2) + "\n"


def render_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: "" if rec[k] is None else rec[k] for k in CSV_FIELDS})
    return buf.getvalue()


def _md_value(value) -> str:
    return "-" if value is None else str(value)


def render_md(records: list[dict]) -> str:
    lines = ["# Galois quadruple canonical covers", ""]
    lines.append("columns: " + ", ".join(
        ["label", "e", "m", "D1", "D2", "p_g", "q", "chi", "K2", "A1", "source"]))
    lines.append("")
    if not records:
        lines.append("(no cases)")
    for rec in records:
        cells = [f"e={_md_value(rec['e'])}", f"m={_md_value(rec['m'])}",
                 f"D1={rec['D1']}", f"D2={rec['D2']}", f"p_g={rec['p_g']}", f"q={rec['q']}",
                 f"chi={rec['chi']}", f"K2={rec['K2']}", f"A1={rec['generic_A1']}",
                 f"source={rec['source'] or '-'}"]
        line = f"- **{rec['label']}** ({rec['surface']}): " + ", ".join(cells)
        if rec.get("swap_duplicate_of"):
            line += f"; ruling swap of {rec['swap_duplicate_of']}"
        lines.append(line)
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "md": render_md}


def render(records: Iterable[dict], fmt: str) -> str:
    return RENDERERS[fmt](list(records))


def parse_json_records(text: str) -> list[dict]:
    return json.loads(text)


def parse_csv_records(text: str) -> list[dict]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rec: dict[str, Optional[object]] = {}
        for key in CSV_FIELDS:
            value = row[key]
            if key in _INT_FIELDS:
                rec[key] = int(value) if value != "" else None
            else:
                rec[key] = value
        out.append(rec)
    return out
