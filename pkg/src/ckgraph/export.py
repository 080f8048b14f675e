"""DOT, JSON and CSV renderings of digraphs and their statistics."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile

from .digraph import Diameter, Digraph, diameter as compute_diameter


def to_dot(g: Digraph) -> str:
    lines = [f'digraph "{g.name}" {{']
    for v in g.vertices:
        lines.append(f'  "{g.render(v)}";')
    for u, v in g.arcs():
        lines.append(f'  "{g.render(u)}" -> "{g.render(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Digraph, family: str | None = None, d=None, l=None, t: int = 0) -> str:
    doc = {
        "name": g.name,
        "family": family,
        "d": d,
        "l": l,
        "t": t,
        "vertices": [g.render(v) for v in g.vertices],
        "arcs": [[g.render(u), g.render(v)] for u, v in g.arcs()],
    }
    return json.dumps(doc, indent=2) + "\n"


def to_csv(g: Digraph) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target"])
    for u, v in g.arcs():
        writer.writerow([g.render(u), g.render(v)])
    return buf.getvalue()


def stats_record(
    g: Digraph,
    family: str | None = None,
    d: int | None = None,
    l: int | None = None,
    t: int = 0,
    diameter: Diameter | None = None,
) -> dict:
    """The JSON stats record: sizes, degree extremes and diameter."""
    prof = g.degree_profile()
    if diameter is None:
        diameter = compute_diameter(g)
    return {
        "family": family,
        "d": d,
        "l": l,
        "t": t,
        "vertices": g.order,
        "arcs": g.size,
        "min_out": prof.min_out,
        "max_out": prof.max_out,
        "min_in": prof.min_in,
        "max_in": prof.max_in,
        "diameter": diameter.as_dict(),
    }


STATS_COLUMNS = [
    "family", "d", "l", "t", "vertices", "arcs",
    "min_out", "max_out", "min_in", "max_in", "diameter_kind", "diameter_value",
]


def stats_csv(record: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(STATS_COLUMNS)
    row = {k: record[k] for k in STATS_COLUMNS[:-2]}
    row["diameter_kind"] = record["diameter"]["kind"]
    row["diameter_value"] = record["diameter"].get("value", "")
    writer.writerow([row[k] for k in STATS_COLUMNS])
    return buf.getvalue()


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to a temp file next to ``path`` and rename it into place."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ckgraph-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
