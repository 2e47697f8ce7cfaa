"""Rendering of cocycle tables: Markdown (published layout), CSV, JSON.

Rows and columns run over the eleven positive-degree basis words in the
fixed published order, with each table split into the same two halves as
the published layout.  Entries are canonical polynomial strings, so a
rendering is reproducible byte for byte.
"""

import json

from .scalars import Poly, poly_from_string, rational_from_string
from .words import WORD_INDEX
from . import fk3 as core
from .cocycle import BiFunctional

#: the eleven positive-degree words in table order
TABLE_ORDER = [WORD_INDEX[w] for w in (
    (0,), (1,), (2,), (2, 0), (0, 2), (1, 0), (0, 1),
    (2, 0, 2), (0, 1, 0), (2, 0, 1), (2, 0, 1, 0))]

#: column split per realization, matching the published halves
COLUMN_SPLIT = {"pointed": 6, "copointed": 5}


def entry_strings(bi):
    """11x11 nested list of canonical entry strings, in table order."""
    return [[str_of(bi(a, b)) for b in TABLE_ORDER] for a in TABLE_ORDER]


def str_of(v):
    return str(v) if isinstance(v, Poly) else str(v)


def emit(bi, fmt="md", split=None):
    if fmt == "md":
        return emit_markdown(bi, split)
    if fmt == "csv":
        return emit_csv(bi)
    if fmt == "json":
        return emit_json(bi)
    raise ValueError(f"unknown table format {fmt!r}")


def emit_markdown(bi, split=None):
    names = [core.WORD_NAMES[i] for i in TABLE_ORDER]
    rows = entry_strings(bi)
    split = COLUMN_SPLIT[bi.kind] if split is None else split
    halves = [(0, split), (split, len(TABLE_ORDER))]
    out = []
    for n, (lo, hi) in enumerate(halves, start=1):
        out.append(f"### sigma table, part {n}")
        header = ["sigma"] + names[lo:hi]
        out.append("| " + " | ".join(header) + " |")
        out.append("|" + "---|" * len(header))
        for rname, row in zip(names, rows):
            out.append("| " + " | ".join([rname] + row[lo:hi]) + " |")
        out.append("")
    return "\n".join(out)


def emit_csv(bi):
    names = [core.WORD_NAMES[i] for i in TABLE_ORDER]
    lines = ["sigma," + ",".join(names)]
    for rname, row in zip(names, entry_strings(bi)):
        lines.append(rname + "," + ",".join(row))
    return "\n".join(lines) + "\n"


def emit_json(bi):
    names = [core.WORD_NAMES[i] for i in TABLE_ORDER]
    entries = {}
    for a, rname in zip(TABLE_ORDER, names):
        for b, cname in zip(TABLE_ORDER, names):
            v = bi(a, b)
            if v:
                entries[f"{rname}|{cname}"] = str_of(v)
    doc = {"kind": bi.kind, "vars": list(bi.vars), "order": names,
           "entries": entries}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse_json(text):
    """Round-trip a JSON table back into a BiFunctional."""
    doc = json.loads(text)
    vars = tuple(doc["vars"])
    vals = {}
    for key, s in doc["entries"].items():
        rname, cname = key.split("|")
        a = core.NAME_INDEX[rname]
        b = core.NAME_INDEX[cname]
        vals[(a, b)] = poly_from_string(s, vars) if vars \
            else rational_from_string(s)
    bi = BiFunctional(doc["kind"], vals, vars)
    bi.values[(core.UNIT, core.UNIT)] = 1  # normalization not tabulated
    return bi
