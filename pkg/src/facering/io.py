"""Canonical JSON documents for complexes and graphs.

Complex document: {"n": int, "facets": [[v, ...], ...]} with each inner list
strictly increasing; "facets": [] encodes the irrelevant complex {emptyset}
unless "void": true is present. Graph document: {"n": int, "edges": [[u, v],
...]} with u < v. Writers emit facets sorted by (size, lexicographic) and
edges sorted, so output is bit-stable.
"""

import json

from .complexes import SimplicialComplex, build_complex
from .errors import DocumentError
from .graphs import Graph


def parse_document(text):
    """Parse a JSON document into a SimplicialComplex or a Graph.

    The type is detected by field name: "facets" versus "edges".
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise DocumentError("field 'n' must be a positive integer")
    if "facets" in doc and "edges" in doc:
        raise DocumentError("document has both 'facets' and 'edges'")
    if "facets" in doc:
        return _parse_complex(n, doc)
    if "edges" in doc:
        return _parse_graph(n, doc)
    raise DocumentError("document needs a 'facets' or 'edges' field")


def _parse_complex(n, doc):
    facets = doc["facets"]
    if not isinstance(facets, list):
        raise DocumentError("'facets' must be an array")
    if not facets:
        if doc.get("void"):
            return SimplicialComplex(n, (), void=True)
        return SimplicialComplex(n, ())
    if doc.get("void"):
        raise DocumentError("'void': true requires an empty facet list")
    parsed = []
    for row in facets:
        if (
            not isinstance(row, list)
            or not row
            or any(not isinstance(v, int) for v in row)
            or any(b <= a for a, b in zip(row, row[1:]))
        ):
            raise DocumentError(f"facet {row!r} must be a nonempty strictly increasing array")
        parsed.append(row)
    try:
        return build_complex(n, parsed)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def _parse_graph(n, doc):
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise DocumentError("'edges' must be an array")
    for row in edges:
        if (
            not isinstance(row, list)
            or len(row) != 2
            or any(not isinstance(v, int) for v in row)
            or row[0] >= row[1]
        ):
            raise DocumentError(f"edge {row!r} must be a 2-element increasing array")
    try:
        return Graph(n, frozenset(tuple(e) for e in edges))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def complex_document(sc):
    doc = {"n": sc.n, "facets": [list(vs) for vs in sc.facet_vertex_sets()]}
    if sc.void:
        doc["void"] = True
    return doc


def graph_document(g):
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def document_text(doc):
    return json.dumps(doc, separators=(", ", ": ")) + "\n"


def load_path(path):
    import sys

    if path == "-":
        return parse_document(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_document(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
