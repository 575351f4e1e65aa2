"""JSON graph formats and divisor literals for the command line."""

import json

from .arithmetical import validate_arithmetical
from .errors import InvalidGraph
from .graph_core import build_digraph


def parse_graph(data):
    """Build a graph from the JSON object format.

    {"type":"digraph","vertices":N,"arcs":[[tail,head,mult],...]} or
    {"type":"arithmetical","vertices":N,"edges":[[i,j,mult],...],
     "multiplicities":[r0,...,rn]}.
    """
    if not isinstance(data, dict) or "type" not in data:
        raise InvalidGraph("graph JSON must be an object with a 'type' field")
    kind = data["type"]
    if kind == "digraph":
        n = data.get("vertices")
        arcs = data.get("arcs")
        if not isinstance(n, int) or not isinstance(arcs, list):
            raise InvalidGraph("digraph needs integer 'vertices' and list 'arcs'")
        return build_digraph([tuple(a) for a in arcs], n_vertices=n)
    if kind == "arithmetical":
        n = data.get("vertices")
        edges = data.get("edges")
        mults = data.get("multiplicities")
        if not isinstance(n, int) or not isinstance(edges, list) or not isinstance(mults, list):
            raise InvalidGraph(
                "arithmetical graph needs 'vertices', 'edges', 'multiplicities'"
            )
        adjacency = [[0] * n for _ in range(n)]
        for i, j, mult in edges:
            if not (0 <= i < n and 0 <= j < n) or i == j or mult < 1:
                raise InvalidGraph(f"bad edge ({i},{j},{mult})")
            adjacency[i][j] += mult
            adjacency[j][i] += mult
        return validate_arithmetical(adjacency, tuple(mults))
    raise InvalidGraph(f"unknown graph type {kind!r}")


def load_graph(path):
    with open(path) as handle:
        return parse_graph(json.load(handle))


def parse_divisor(text, n_vertices):
    """Comma-separated integer literal, e.g. '-1,0,1,1,1,0'."""
    parts = [p.strip() for p in text.split(",")]
    try:
        entries = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InvalidGraph(f"bad divisor literal {text!r}") from exc
    if len(entries) != n_vertices:
        raise InvalidGraph(
            f"divisor has {len(entries)} entries, graph has {n_vertices} vertices"
        )
    return entries
