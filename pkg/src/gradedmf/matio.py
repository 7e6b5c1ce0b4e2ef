"""File formats: ring specs, matrix text/JSON, and family references.

Matrix text format: optional header lines (``ring:``, ``rows:``, ``cols:``),
then entries with rows separated by semicolons and entries by commas.  The
JSON shape carries the same data as ``entries``/``rowTwists``/``colTwists``.
Twist headers may be omitted when the entries determine them.
"""

from __future__ import annotations

import json
import re

from .matfac import GradedMatrix
from .polyring import Ring
from .rings import ambient_ring, extension_ring, nodal_ring, parametric_ring


def _expand_names(text):
    """Comma list with d1..d9 range sugar."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        m = re.fullmatch(r"([A-Za-z_]+)(\d+)\.\.(\d+)", chunk)
        if m:
            stem, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
            out.extend(f"{stem}{i}" for i in range(lo, hi + 1))
        elif chunk:
            out.append(chunk)
    return out


def parse_ring_spec(spec):
    """Ring from a spec string.

    Named rings: ``nodal``, ``nodal-params``, ``ambient``, ``ext:N``.
    General form: ``vars=...;blocks=...;params=...;mod=p1|p2`` where params
    lists the grading-weight-0 variables.
    """
    spec = spec.strip()
    if spec == "nodal":
        return nodal_ring()
    if spec in ("nodal-params", "parametric"):
        return parametric_ring()
    if spec == "ambient":
        return ambient_ring()
    if spec.startswith("ext:"):
        return extension_ring(int(spec.split(":", 1)[1]))
    fields = {}
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    if "vars" not in fields:
        raise ValueError(f"ring spec needs vars=...: {spec!r}")
    names = _expand_names(fields["vars"])
    blocks = None
    if "blocks" in fields:
        blocks = tuple(int(b) for b in fields["blocks"].split(",") if b.strip())
    params = set(_expand_names(fields.get("params", "")))
    weights = tuple(0 if nm in params else 1 for nm in names)
    ring = Ring(names, blocks, weights)
    if fields.get("mod"):
        ring = ring.with_relations([p for p in fields["mod"].split("|") if p.strip()])
    return ring


def parse_matrix_text(text, ring=None, check=True):
    """GradedMatrix from the text format."""
    row_twists = col_twists = None
    body_lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lowered = stripped.lower()
        if lowered.startswith("ring:"):
            ring = parse_ring_spec(stripped.split(":", 1)[1])
        elif lowered.startswith("rows:"):
            row_twists = tuple(int(x) for x in stripped.split(":", 1)[1].split(","))
        elif lowered.startswith("cols:"):
            col_twists = tuple(int(x) for x in stripped.split(":", 1)[1].split(","))
        else:
            body_lines.append(stripped)
    if ring is None:
        ring = nodal_ring()
    body = " ".join(body_lines)
    if not body:
        raise ValueError("matrix text has no entries")
    rows = [[ring.parse(e) for e in row.split(",")]
            for row in body.split(";") if row.strip()]
    return GradedMatrix(ring, rows, row_twists, col_twists, check=check)


def parse_matrix_json(data, ring=None, check=True):
    if isinstance(data, str):
        data = json.loads(data)
    if ring is None:
        ring = parse_ring_spec(data["ring"]) if "ring" in data else nodal_ring()
    rows = [[ring.parse(e) for e in row] for row in data["entries"]]
    return GradedMatrix(ring, rows,
                        tuple(data["rowTwists"]) if "rowTwists" in data else None,
                        tuple(data["colTwists"]) if "colTwists" in data else None,
                        check=check)


def load_matrix(path, ring=None, check=True):
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{") or str(path).endswith(".json"):
        return parse_matrix_json(text, ring, check)
    return parse_matrix_text(text, ring, check)


def matrix_to_text(m, header=True):
    lines = []
    if header:
        lines.append("rows: " + ",".join(str(t) for t in m.row_twists))
        lines.append("cols: " + ",".join(str(t) for t in m.col_twists))
    for row in m.entries:
        lines.append(", ".join(str(e) for e in row) + " ;")
    if m.nrows:
        lines[-1] = lines[-1][:-2]
    return "\n".join(lines)


def matrix_to_json(m):
    return {"rowTwists": list(m.row_twists),
            "colTwists": list(m.col_twists),
            "entries": [[str(e) for e in row] for row in m.entries]}
