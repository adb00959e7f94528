"""JSON interchange and DOT export for graphs and partitions.

Graph schema: {"n": int, "family": str, "vertices": [label…], "edges": [[i,j]…]}
with i < j and edges sorted lexicographically. Partition schema:
{"R": [label…], "B": [label…]} where every vertex appears exactly once.
Labels render as decimal residues or "(a,b)" pairs; the family decides how
a string parses back.
"""
from __future__ import annotations

import json
import re

import numpy as np

from .errors import FormatError
from .graphs import (
    EdgePair,
    GraphFamily,
    LabeledGraph,
    Residue,
    TotalEdge,
    TotalOriginal,
    VertexLabel,
)
from .vce import Bipartition

_PAIR_RE = re.compile(r"^\((\d+),(\d+)\)$")

_RESIDUE_FAMILIES = (GraphFamily.GAMMA, GraphFamily.NILRADICAL, GraphFamily.OMEGA)


def render_label(lab: VertexLabel) -> str:
    return lab.render()


def parse_label(text, family: GraphFamily) -> VertexLabel:
    """Inverse of render_label for the given family; accepts bare ints too."""
    s = text if isinstance(text, str) else str(text)
    m = _PAIR_RE.match(s)
    if family in _RESIDUE_FAMILIES:
        if m:
            raise FormatError(f"family {family.value} has residue labels, got {s!r}")
        return Residue(_parse_residue(s))
    if family is GraphFamily.LINE_OF_GAMMA:
        if not m:
            raise FormatError(f"family {family.value} has pair labels, got {s!r}")
        return EdgePair(int(m.group(1)), int(m.group(2)))
    if m:
        return TotalEdge(int(m.group(1)), int(m.group(2)))
    return TotalOriginal(_parse_residue(s))


def _parse_residue(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise FormatError(f"cannot parse vertex label {s!r}") from None


def graph_to_json_obj(g: LabeledGraph, family: GraphFamily) -> dict:
    return {
        "n": g.modulus,
        "family": GraphFamily(family).value,
        "vertices": [lab.render() for lab in g.labels],
        "edges": [[i, j] for i, j in g.edges()],
    }


def graph_to_json(g: LabeledGraph, family: GraphFamily) -> str:
    return json.dumps(graph_to_json_obj(g, family))


def graph_from_json(text: str) -> tuple[LabeledGraph, GraphFamily]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"graph file is not valid JSON: {exc}") from None
    return graph_from_json_obj(obj)


def graph_from_json_obj(obj) -> tuple[LabeledGraph, GraphFamily]:
    if not isinstance(obj, dict):
        raise FormatError("graph JSON must be an object")
    for key in ("family", "vertices", "edges"):
        if key not in obj:
            raise FormatError(f"graph JSON is missing the {key!r} key")
    try:
        family = GraphFamily(obj["family"])
    except ValueError:
        raise FormatError(f"unknown graph family {obj['family']!r}") from None
    labels = [parse_label(s, family) for s in obj["vertices"]]
    nv = len(labels)
    adj = np.zeros((nv, nv), dtype=bool)
    for e in obj["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise FormatError(f"malformed edge entry {e!r}")
        i, j = e
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < nv):
            raise FormatError(f"edge {e!r} is out of range or not ascending")
        adj[i, j] = adj[j, i] = True
    try:
        g = LabeledGraph(labels, adj, modulus=obj.get("n"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return g, family


def _dot_name(lab: VertexLabel) -> str:
    s = lab.render()
    return s if s.isdigit() else f'"{s}"'


def graph_to_dot(g: LabeledGraph, family: GraphFamily) -> str:
    """Undirected DOT; residue names bare, pair names quoted."""
    name = f"{GraphFamily(family).value}_{g.modulus}".replace("-", "_")
    lines = [f"graph {name} {{"]
    for lab in g.labels:
        lines.append(f"  {_dot_name(lab)};")
    for i, j in g.edges():
        lines.append(f"  {_dot_name(g.labels[i])} -- {_dot_name(g.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def partition_to_json_obj(g: LabeledGraph, part: Bipartition) -> dict:
    return {
        "R": [g.labels[int(i)].render() for i in part.r_ids],
        "B": [g.labels[int(i)].render() for i in part.b_ids],
    }


def partition_to_json(g: LabeledGraph, part: Bipartition) -> str:
    return json.dumps(partition_to_json_obj(g, part))


def partition_from_json(text: str, g: LabeledGraph, family: GraphFamily) -> Bipartition:
    """Parse {"R": […], "B": […]} against a known graph.

    Raises FormatError for unparseable input, unknown labels, or a vertex
    listed twice or missing; PartitionError (from Bipartition) for empty sides.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"partition file is not valid JSON: {exc}") from None
    if not isinstance(obj, dict) or "R" not in obj or "B" not in obj:
        raise FormatError('partition JSON must be an object with "R" and "B" lists')
    seen: set[int] = set()
    sides: dict[str, list[int]] = {"R": [], "B": []}
    for side in ("R", "B"):
        for entry in obj[side]:
            lab = parse_label(entry, family)
            try:
                v = g.id_of(lab)
            except KeyError:
                raise FormatError(f"unknown vertex label {lab.render()!r}") from None
            if v in seen:
                raise FormatError(f"vertex {lab.render()} is listed twice")
            seen.add(v)
            sides[side].append(v)
    if len(seen) != g.n_vertices:
        raise FormatError(
            f"partition covers {len(seen)} of {g.n_vertices} vertices; "
            "every vertex must appear exactly once")
    return Bipartition.from_sides(g.n_vertices, sides["R"], sides["B"])
