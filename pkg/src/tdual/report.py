"""Report documents: canonical JSON and text renderings of engine output.

Groups serialize as {"rank": r, "torsion": [d1, ...]} plus a display
string like "Z^2 + Z/4"; maps serialize as row-major integer matrices.
JSON output is schema-versioned, key-sorted and newline-terminated, so
identical jobs yield byte-identical documents and parse/re-emit round
trips are stable.
"""

from __future__ import annotations

import json

from .abelian import FgGroup, GroupElement, Hom, IntMatrix

SCHEMA_VERSION = 1


def group_json(g: FgGroup) -> dict:
    return {"rank": g.free_rank, "torsion": list(g.torsion),
            "display": g.describe()}


def group_from_json(d: dict) -> FgGroup:
    return FgGroup(d["rank"], tuple(d["torsion"]))


def matrix_json(m: IntMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [list(r) for r in m.entries]}


def element_json(x: GroupElement) -> dict:
    return {"coords": list(x.coords), "group": group_json(x.group)}


def hom_json(h: Hom) -> dict:
    return {"domain": group_json(h.domain), "codomain": group_json(h.codomain),
            "matrix": matrix_json(h.matrix)}


def graded_json(groups, names) -> dict:
    out = {}
    for k, (g, ns) in enumerate(zip(groups, names)):
        out[str(k)] = {"group": group_json(g), "generators": list(ns)}
    return out


def total_space_json(tsc) -> dict:
    groups = [tsc.group(k) for k in range(tsc.top + 1)]
    names = [tsc.names(k) for k in range(tsc.top + 1)]
    doc = graded_json(groups, names)
    for k in tsc.ambiguous_degrees():
        doc[str(k)]["ambiguous_extension"] = True
    return doc


def emit_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _inline(value) -> bool:
    if not isinstance(value, (dict, list)):
        return True
    if isinstance(value, list):
        return all(not isinstance(x, (dict, list)) for x in value)
    return not value


def _text_lines(doc, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for key in sorted(doc):
            value = doc[key]
            if _inline(value):
                lines.append(f"{pad}{key}: {json.dumps(value)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, indent + 1))
    elif isinstance(doc, list):
        for value in doc:
            if _inline(value):
                lines.append(f"{pad}- {json.dumps(value)}")
            else:
                lines.extend(_text_lines(value, indent))
    return lines


def emit_text(doc: dict) -> str:
    return "\n".join(_text_lines(doc)) + "\n"


def emit(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return emit_json(doc)
    if fmt == "text":
        return emit_text(doc)
    raise ValueError(f"unknown format {fmt!r}")
