"""State file parsing and writing.

Two equivalent formats, auto-detected on read:

* line-oriented text (diff-friendly fixtures)::

      twograph-state v1
      n 5
      edge 0 2
      edge 1 1        # i == j encodes a loop
      r 2 3 4
      q 2 3

* JSON: {"format": "twograph-state", "version": 1, "n": 5,
  "edges": [[0, 2], [1, 1]], "r": [2, 3, 4], "q": [2, 3]}

Duplicate edges and q not contained in r are parse-time errors.
"""

from __future__ import annotations

import json

from .gf2graph import Gf2Graph, GraphError, mask_of, vertices_of
from .state import GeneralisedTwoGraphState, StateInvariantError

FORMAT_NAME = "twograph-state"
FORMAT_VERSION = 1


class ParseError(ValueError):
    """Ill-formed state document."""


def parse_state(text: str) -> GeneralisedTwoGraphState:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _from_doc(_parse_json(stripped))
    return _from_doc(_parse_lines(text))


def _parse_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise ParseError(f"missing format marker {FORMAT_NAME!r}")
    if doc.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}")
    return doc


def _parse_lines(text: str) -> dict:
    doc: dict = {"edges": [], "r": None, "q": []}
    lines = [
        ln.split("#", 1)[0].strip()
        for ln in text.splitlines()
    ]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != f"{FORMAT_NAME} v{FORMAT_VERSION}":
        raise ParseError(f"first line must be {FORMAT_NAME!r} v{FORMAT_VERSION}")
    for ln in lines[1:]:
        key, *rest = ln.split()
        try:
            vals = [int(t) for t in rest]
        except ValueError:
            raise ParseError(f"non-integer token in line {ln!r}") from None
        if key == "n" and len(vals) == 1:
            doc["n"] = vals[0]
        elif key == "edge" and len(vals) == 2:
            doc["edges"].append(vals)
        elif key == "r":
            doc["r"] = vals
        elif key == "q":
            doc["q"] = vals
        else:
            raise ParseError(f"unrecognised line {ln!r}")
    return doc


def _from_doc(doc: dict) -> GeneralisedTwoGraphState:
    if "n" not in doc:
        raise ParseError("missing qubit count n")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"bad qubit count {n!r}")
    if doc.get("r") is None:
        raise ParseError("missing r line")
    seen = set()
    for e in doc.get("edges", []):
        key = tuple(sorted(e))
        if key in seen:
            raise ParseError(f"duplicate edge {e}")
        seen.add(key)
    try:
        g = Gf2Graph.from_edges(n, [tuple(e) for e in doc.get("edges", [])])
        return GeneralisedTwoGraphState(g, mask_of(doc["r"]), mask_of(doc.get("q", [])))
    except (GraphError, StateInvariantError, TypeError, ValueError) as e:
        raise ParseError(str(e)) from None


def serialize_state(s: GeneralisedTwoGraphState, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(
            {
                "format": FORMAT_NAME,
                "version": FORMAT_VERSION,
                "n": s.n,
                "edges": [list(e) for e in s.g.edges()],
                "r": vertices_of(s.r),
                "q": vertices_of(s.q),
            },
            indent=2,
        )
    if fmt != "text":
        raise ParseError(f"unknown format {fmt!r}")
    lines = [f"{FORMAT_NAME} v{FORMAT_VERSION}", f"n {s.n}"]
    lines += [f"edge {i} {j}" for i, j in s.g.edges()]
    lines.append("r " + " ".join(str(v) for v in vertices_of(s.r)))
    lines.append("q " + " ".join(str(v) for v in vertices_of(s.q)))
    return "\n".join(lines) + "\n"
