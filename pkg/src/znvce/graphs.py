"""Labeled simple graphs over Z_n and the line/total transforms."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

import numpy as np

from .errors import DomainError
from .rings import factorize, nilpotents, zero_divisors


@dataclass(frozen=True, order=True)
class Residue:
    k: int

    def render(self) -> str:
        return str(self.k)


@dataclass(frozen=True, order=True)
class EdgePair:
    a: int
    b: int

    def __post_init__(self):
        # endpoints stored ascending so labels are canonical
        if not self.a < self.b:
            raise ValueError(f"edge endpoints must satisfy a < b, got ({self.a},{self.b})")

    def render(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True, order=True)
class TotalOriginal:
    k: int

    def render(self) -> str:
        return str(self.k)


@dataclass(frozen=True, order=True)
class TotalEdge:
    a: int
    b: int

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"edge endpoints must satisfy a < b, got ({self.a},{self.b})")

    def render(self) -> str:
        return f"({self.a},{self.b})"


VertexLabel = Union[Residue, EdgePair, TotalOriginal, TotalEdge]


class LabeledGraph:
    """Simple undirected graph; vertex ids are 0..|V|-1 fixed by label order.

    Adjacency is a dense boolean matrix, frozen after construction. `modulus`
    records the n the graph derives from and survives the line/total transforms.
    """

    __slots__ = ("labels", "adj", "modulus", "_deg", "_id_of")

    def __init__(self, labels: Iterable[VertexLabel], adj, modulus: int | None = None):
        self.labels: tuple[VertexLabel, ...] = tuple(labels)
        nv = len(self.labels)
        a = np.array(adj, dtype=bool)
        if a.shape != (nv, nv):
            raise ValueError(f"adjacency shape {a.shape} does not match {nv} labels")
        if nv:
            if (a != a.T).any():
                raise ValueError("adjacency must be symmetric")
            if a.diagonal().any():
                raise ValueError("self-loops are not allowed")
        if len(set(self.labels)) != nv:
            raise ValueError("labels must be pairwise distinct")
        a.setflags(write=False)
        self.adj = a
        self.modulus = modulus
        deg = a.sum(axis=1, dtype=np.int64)
        deg.setflags(write=False)
        self._deg = deg
        self._id_of = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def degrees(self) -> np.ndarray:
        return self._deg

    def degree(self, v: int) -> int:
        return int(self._deg[v])

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) with i < j, sorted lexicographically."""
        iu, iv = np.nonzero(np.triu(self.adj))
        return list(zip(iu.tolist(), iv.tolist()))

    def n_edges(self) -> int:
        return int(self._deg.sum()) // 2

    def id_of(self, label: VertexLabel) -> int:
        return self._id_of[label]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.labels == other.labels and bool((self.adj == other.adj).all())

    __hash__ = None

    def __repr__(self) -> str:
        return f"LabeledGraph(|V|={self.n_vertices}, |E|={self.n_edges()}, modulus={self.modulus})"


def _residue_graph(n: int, residues: np.ndarray) -> LabeledGraph:
    vs = np.asarray(residues, dtype=np.int64)
    adj = (vs[:, None] * vs[None, :]) % n == 0
    np.fill_diagonal(adj, False)
    return LabeledGraph([Residue(int(k)) for k in vs], adj, modulus=n)


def gamma(n: int) -> LabeledGraph:
    """Zero-divisor graph: vertices gcd(k,n) > 1, edge iff u*v = 0 mod n."""
    return _residue_graph(n, zero_divisors(n))


def nilradical_graph(n: int) -> LabeledGraph:
    """Induced on the nonzero nilpotents (multiples of rad(n))."""
    return _residue_graph(n, nilpotents(n))


def non_nilradical_graph(n: int) -> LabeledGraph:
    """Induced on the zero divisors that are not nilpotent."""
    zs = zero_divisors(n)
    rad = factorize(n).radical
    return _residue_graph(n, zs[zs % rad != 0])


def _require_residue_labels(g: LabeledGraph, op: str) -> None:
    for lab in g.labels:
        if not isinstance(lab, Residue):
            raise DomainError(f"{op} expects a residue-labeled graph, found {type(lab).__name__}")


def _shared_endpoint_adj(inc: np.ndarray) -> np.ndarray:
    # inc is the |V| x |E| incidence matrix; distinct edges share at most one endpoint
    shared = inc.T.astype(np.float32) @ inc.astype(np.float32)
    adj = shared > 0.5
    np.fill_diagonal(adj, False)
    return adj


def line_graph(g: LabeledGraph) -> LabeledGraph:
    """One vertex per edge of g; adjacency iff the edges share an endpoint."""
    _require_residue_labels(g, "line_graph")
    es = g.edges()
    m = len(es)
    inc = np.zeros((g.n_vertices, m), dtype=bool)
    labels = []
    for k, (i, j) in enumerate(es):
        inc[i, k] = inc[j, k] = True
        lo, hi = sorted((g.labels[i].k, g.labels[j].k))
        labels.append(EdgePair(lo, hi))
    return LabeledGraph(labels, _shared_endpoint_adj(inc), modulus=g.modulus)


def total_graph(g: LabeledGraph) -> LabeledGraph:
    """Vertices of g plus edges of g; all vertex-vertex, edge-edge, vertex-edge adjacencies."""
    _require_residue_labels(g, "total_graph")
    es = g.edges()
    m = len(es)
    inc = np.zeros((g.n_vertices, m), dtype=bool)
    edge_labels = []
    for k, (i, j) in enumerate(es):
        inc[i, k] = inc[j, k] = True
        lo, hi = sorted((g.labels[i].k, g.labels[j].k))
        edge_labels.append(TotalEdge(lo, hi))
    adj = np.block([[g.adj, inc], [inc.T, _shared_endpoint_adj(inc)]])
    labels = [TotalOriginal(lab.k) for lab in g.labels] + edge_labels
    return LabeledGraph(labels, adj, modulus=g.modulus)


def isolated_vertices(g: LabeledGraph) -> list[VertexLabel]:
    """Labels of all degree-0 vertices, in vertex-id order."""
    return [g.labels[i] for i in np.flatnonzero(g.degrees() == 0)]


class GraphFamily(Enum):
    GAMMA = "gamma"
    NILRADICAL = "nilradical"
    OMEGA = "omega"
    LINE_OF_GAMMA = "line-of-gamma"
    TOTAL_OF_GAMMA = "total-of-gamma"


def build_family(n: int, family: GraphFamily) -> LabeledGraph:
    family = GraphFamily(family)
    if family is GraphFamily.GAMMA:
        return gamma(n)
    if family is GraphFamily.NILRADICAL:
        return nilradical_graph(n)
    if family is GraphFamily.OMEGA:
        return non_nilradical_graph(n)
    if family is GraphFamily.LINE_OF_GAMMA:
        return line_graph(gamma(n))
    return total_graph(gamma(n))
