"""JSON and DOT serialization.

The JSON document is the single interchange format: version string, part
count, partite sets and arc list, with dense 0-based vertex ids.  Human
readable output (DOT labels, CLI prose) uses 1-based part labels instead.
Serialization is deterministic, so fixed inputs give byte-identical
documents.
"""

from __future__ import annotations

import json
from typing import Optional

from .cycles import CycleWitness
from .digraph import MultipartiteTournament, build
from .errors import ParseError

FORMAT_VERSION = "1"


def to_json(D: MultipartiteTournament) -> str:
    doc = {
        "version": FORMAT_VERSION,
        "c": D.c,
        "parts": [list(p) for p in D.parts],
        "arcs": [[u, v] for u, v in D.arcs()],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> MultipartiteTournament:
    """Parse a document; full structural validation applies."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    for key in ("version", "c", "parts", "arcs"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    if doc["version"] != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {doc['version']!r}")
    parts, arcs = doc["parts"], doc["arcs"]
    if not isinstance(parts, list) or not all(
        isinstance(p, list) and all(isinstance(v, int) for v in p) for p in parts
    ):
        raise ParseError("parts must be a list of lists of integers")
    if len(parts) != doc["c"]:
        raise ParseError("c does not match the number of parts")
    if not isinstance(arcs, list) or not all(
        isinstance(a, list) and len(a) == 2 and all(isinstance(v, int) for v in a)
        for a in arcs
    ):
        raise ParseError("arcs must be a list of [from, to] pairs")
    return build(parts, [(u, v) for u, v in arcs])


def to_dot(D: MultipartiteTournament, highlight: Optional[CycleWitness] = None) -> str:
    """DOT rendering with one cluster per partite set; an optional cycle is
    drawn bold red."""
    hot: set[tuple[int, int]] = set()
    if highlight is not None:
        vs = highlight.vertices
        hot = {(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))}
    lines = ["digraph D {"]
    for idx, p in enumerate(D.parts):
        lines.append(f"  subgraph cluster_{idx} {{")
        lines.append(f'    label="V_{idx + 1}";')
        for v in p:
            lines.append(f"    {v};")
        lines.append("  }")
    for u, v in D.arcs():
        style = ' [color=red, penwidth=2]' if (u, v) in hot else ""
        lines.append(f"  {u} -> {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
