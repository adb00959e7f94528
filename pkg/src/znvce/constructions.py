"""Explicit very-cost-effective bipartitions, one per modulus shape, plus a
dispatcher that picks the applicable construction (or falls back to search).

Every builder verifies its own output through the checker before returning;
a verification failure is a ConstructionError, never a silently wrong result.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Union

import numpy as np

from .errors import ConstructionError, DomainError, ShapeError
from .graphs import (
    EdgePair,
    GraphFamily,
    LabeledGraph,
    Residue,
    TotalEdge,
    TotalOriginal,
    VertexLabel,
    build_family,
    gamma,
    line_graph,
    nilradical_graph,
    non_nilradical_graph,
    total_graph,
)
from .rings import ModulusShape, ShapeKind, classify, factorize, is_prime
from .search import DEFAULT_VERTEX_CAP, SearchStatus, brute_force, isolated_obstruction
from .vce import Bipartition, is_vce


class ConstructionId(Enum):
    THM2_1_SQUAREFREE = "Thm2_1_Squarefree"
    COR2_2_PQ = "Cor2_2_PQ"
    THM2_3I_P2Q = "Thm2_3i_P2Q"
    THM2_3II_P2Q2 = "Thm2_3ii_P2Q2"
    THM2_4_LINE_PQ = "Thm2_4_LinePQ"
    THM3_3I_P2 = "Thm3_3i_P2"
    THM3_3II_P2Q2_NIL = "Thm3_3ii_P2Q2_Nil"
    THM3_3III_P3 = "Thm3_3iii_P3"
    THM3_3IV_P2Q_NIL = "Thm3_3iv_P2Q_Nil"
    THM3_5_OMEGA_SQUAREFREE = "Thm3_5_OmegaSquarefree"
    THM4_2_TOTAL_PQ = "Thm4_2_TotalPQ"


@dataclass(frozen=True)
class IsolatedVertex:
    vertex: int
    label: VertexLabel


@dataclass(frozen=True)
class ExhaustedSearch:
    partitions_examined: int


@dataclass(frozen=True, eq=False)
class Exists:
    """A verified very-cost-effective bipartition. source None means search."""

    graph: LabeledGraph
    partition: Bipartition
    source: ConstructionId | None = None

    def __post_init__(self):
        if not is_vce(self.graph, self.partition):
            raise ConstructionError("certificate partition failed verification")

    @property
    def source_tag(self) -> str:
        return self.source.value if self.source is not None else "Search"


@dataclass(frozen=True, eq=False)
class NotVce:
    """Proof that no very-cost-effective bipartition exists."""

    graph: LabeledGraph
    witness: Union[IsolatedVertex, ExhaustedSearch]

    def __post_init__(self):
        w = self.witness
        if isinstance(w, IsolatedVertex):
            if self.graph.degree(w.vertex) != 0:
                raise ConstructionError(
                    f"claimed isolated vertex {w.label.render()} has neighbors")
            if self.graph.labels[w.vertex] != w.label:
                raise ConstructionError("witness label does not match its vertex id")


Certificate = Union[Exists, NotVce]


def _verified(g: LabeledGraph, in_b: np.ndarray) -> Bipartition:
    part = Bipartition(in_b)
    if not is_vce(g, part):
        raise ConstructionError("constructed partition failed the checker")
    return part


def _residues(g: LabeledGraph) -> np.ndarray:
    return np.array([lab.k for lab in g.labels], dtype=np.int64)


def _squarefree_split(g: LabeledGraph) -> Bipartition:
    # R = the multiples of the largest prime factor; they form an independent
    # set whose neighbors all sit in B, and B-side products cannot reach 0
    # often enough to tip any tally
    f = factorize(g.modulus)
    pm = f.primes[-1]
    return _verified(g, _residues(g) % pm != 0)


def _p2q_split(g: LabeledGraph, p: int, q: int) -> Bipartition:
    ks = _residues(g)
    # R = multiples of q; B = multiples of p not q; together all zero divisors
    return _verified(g, ks % q != 0)


def _p2q2_split(g: LabeledGraph, p: int, q: int) -> Bipartition:
    ks = _residues(g)
    pure = (ks % (p * q) == 0) & (ks % (p * p) != 0) & (ks % (q * q) != 0)
    n_pure = int(pure.sum())
    if n_pure != (p - 1) * (q - 1):
        raise ConstructionError(
            f"expected {(p - 1) * (q - 1)} pure pq-multiples, found {n_pure}")
    in_r = (ks % (p * p) == 0) | ((ks % p == 0) & (ks % q != 0))
    # the pure pq-multiples share one common neighborhood, so only the split
    # sizes matter; take the smallest (q(p-2)+1)/2 of them for R
    r3 = np.flatnonzero(pure)[: (q * (p - 2) + 1) // 2]
    in_r[r3] = True
    return _verified(g, ~in_r)


def _line_side_in_r(a: int, b: int, p: int, q: int) -> bool:
    u, v = (a, b) if a % p == 0 else (b, a)
    i, j = u // p, v // q
    low_half = 1 <= j <= (p - 1) // 2
    return (i % 2 == 1) == low_half


def _line_split(g: LabeledGraph, p: int, q: int) -> Bipartition:
    if p == 2:
        # the line graph of the star on q vertices is K_{q-1}, even order;
        # any balanced split works, ascending label order keeps it canonical
        return _balanced_split(g)
    in_r = np.fromiter(
        (_line_side_in_r(lab.a, lab.b, p, q) for lab in g.labels), bool, g.n_vertices)
    return _verified(g, ~in_r)


def _balanced_split(g: LabeledGraph) -> Bipartition:
    nv = g.n_vertices
    return _verified(g, np.arange(nv) >= nv // 2)


def _p3_split(g: LabeledGraph, p: int) -> Bipartition:
    # B = multiples of p^2 (p-1 of them), R = the rest (p(p-1) of them)
    return _verified(g, _residues(g) % (p * p) == 0)


def _total_split(g: LabeledGraph, p: int, q: int) -> Bipartition:
    in_r = np.zeros(g.n_vertices, dtype=bool)
    for v, lab in enumerate(g.labels):
        if isinstance(lab, TotalOriginal):
            in_r[v] = lab.k % p == 0
        else:
            in_r[v] = _line_side_in_r(lab.a, lab.b, p, q)
    return _verified(g, ~in_r)


def vce_squarefree(n: int) -> Bipartition:
    """R = zero divisors divisible by the largest prime factor, B = the rest."""
    f = factorize(n)
    if not (f.is_squarefree and len(f.factors) >= 2):
        raise ShapeError(f"n = {n} is not squarefree with at least two prime factors")
    return _squarefree_split(gamma(n))


def vce_p2q(n: int) -> Bipartition:
    """R = multiples of q, B = multiples of p not q, over the zero-divisor graph."""
    shape = classify(factorize(n))
    if shape.kind is not ShapeKind.P_SQUARED_Q:
        raise ShapeError(f"n = {n} is not of the form p^2 q")
    return _p2q_split(gamma(n), shape.p, shape.q)


def vce_p2q2(n: int) -> Bipartition:
    """Six-block split of the zero-divisor graph of p^2 q^2, odd p < q."""
    shape = classify(factorize(n))
    if shape.kind is not ShapeKind.P_SQUARED_Q_SQUARED:
        raise ShapeError(f"n = {n} is not of the form p^2 q^2")
    if shape.p == 2:
        raise ShapeError("p = 2 is not covered; both primes must be odd")
    return _p2q2_split(gamma(n), shape.p, shape.q)


def _require_prime_pair(p: int, q: int) -> None:
    if not (is_prime(p) and is_prime(q) and p != q):
        raise ShapeError(f"({p}, {q}) is not a pair of distinct primes")
    if not p < q:
        raise ShapeError(f"expected p < q, got p = {p}, q = {q}")


def vce_line_pq(p: int, q: int) -> Bipartition:
    """Half-split of the line graph of the complete bipartite zero-divisor
    graph of pq; for p = 2 a balanced split of the complete line graph."""
    _require_prime_pair(p, q)
    return _line_split(line_graph(gamma(p * q)), p, q)


def vce_nilradical(n: int) -> Bipartition:
    """Balanced or layered split of the graph on nonzero nilpotents."""
    shape = classify(factorize(n))
    g = nilradical_graph(n)
    if shape.kind is ShapeKind.P_SQUARED:
        if shape.p == 2:
            raise ShapeError("the nilpotent graph of 4 is a single vertex; no bipartition")
        return _balanced_split(g)
    if shape.kind is ShapeKind.P_SQUARED_Q_SQUARED:
        if shape.p == 2:
            raise ShapeError(
                "p = 2 gives the complete graph on 2q - 1 vertices, odd order, "
                "which has no very-cost-effective split (n = 36 checked exhaustively)")
        return _balanced_split(g)
    if shape.kind is ShapeKind.P_CUBED:
        return _p3_split(g, shape.p)
    if shape.kind is ShapeKind.P_SQUARED_Q:
        if shape.p == 2:
            raise ShapeError("the squared prime must be odd; 4q leaves a single vertex")
        return _balanced_split(g)
    raise ShapeError(f"no nilpotent-graph construction applies to n = {n}")


def vce_omega_squarefree(n: int) -> Bipartition:
    """For squarefree n the non-nilpotent graph coincides with the whole
    zero-divisor graph, so the same split applies vertex for vertex."""
    f = factorize(n)
    if not (f.is_squarefree and len(f.factors) >= 2):
        raise ShapeError(f"n = {n} is not squarefree with at least two prime factors")
    return _squarefree_split(non_nilradical_graph(n))


def vce_total_pq(p: int, q: int) -> Bipartition:
    """Original vertices split by p- versus q-multiples; edge vertices reuse
    the line-graph half-split. Requires odd p < q."""
    _require_prime_pair(p, q)
    if p == 2:
        raise ShapeError("p = 2 total graphs are never very cost effective; no construction")
    return _total_split(total_graph(gamma(p * q)), p, q)


_Route = tuple[Callable[[LabeledGraph, ModulusShape], Bipartition], ConstructionId]


def _route(shape: ModulusShape, family: GraphFamily) -> _Route | None:
    kind = shape.kind
    if family is GraphFamily.GAMMA:
        if kind is ShapeKind.SQUAREFREE_COMPOSITE:
            cid = (ConstructionId.COR2_2_PQ if len(shape.primes) == 2
                   else ConstructionId.THM2_1_SQUAREFREE)
            return (lambda g, s: _squarefree_split(g)), cid
        if kind is ShapeKind.P_SQUARED_Q:
            return (lambda g, s: _p2q_split(g, s.p, s.q)), ConstructionId.THM2_3I_P2Q
        if kind is ShapeKind.P_SQUARED_Q_SQUARED and shape.p > 2:
            return (lambda g, s: _p2q2_split(g, s.p, s.q)), ConstructionId.THM2_3II_P2Q2
    elif family is GraphFamily.NILRADICAL:
        if kind is ShapeKind.P_SQUARED and shape.p > 2:
            return (lambda g, s: _balanced_split(g)), ConstructionId.THM3_3I_P2
        if kind is ShapeKind.P_SQUARED_Q_SQUARED and shape.p > 2:
            return (lambda g, s: _balanced_split(g)), ConstructionId.THM3_3II_P2Q2_NIL
        if kind is ShapeKind.P_CUBED:
            return (lambda g, s: _p3_split(g, s.p)), ConstructionId.THM3_3III_P3
        if kind is ShapeKind.P_SQUARED_Q and shape.p > 2:
            return (lambda g, s: _balanced_split(g)), ConstructionId.THM3_3IV_P2Q_NIL
    elif family is GraphFamily.OMEGA:
        if kind is ShapeKind.SQUAREFREE_COMPOSITE:
            return (lambda g, s: _squarefree_split(g)), ConstructionId.THM3_5_OMEGA_SQUAREFREE
    elif family is GraphFamily.LINE_OF_GAMMA:
        if kind is ShapeKind.SQUAREFREE_COMPOSITE and len(shape.primes) == 2:
            return (lambda g, s: _line_split(g, s.p, s.q)), ConstructionId.THM2_4_LINE_PQ
    elif family is GraphFamily.TOTAL_OF_GAMMA:
        if (kind is ShapeKind.SQUAREFREE_COMPOSITE and len(shape.primes) == 2
                and shape.p > 2):
            return (lambda g, s: _total_split(g, s.p, s.q)), ConstructionId.THM4_2_TOTAL_PQ
    return None


def dispatch(n: int, family: GraphFamily, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Certificate | None:
    """Certificate for (n, family): a construction when one applies, otherwise
    the isolated-vertex obstruction or exhaustive search. None means the shape
    is unhandled and the graph is too large to settle exhaustively."""
    family = GraphFamily(family)
    g = build_family(n, family)
    if g.n_vertices == 0:
        raise DomainError(f"the {family.value} graph of {n} is empty; no bipartition possible")
    shape = classify(factorize(n))
    route = _route(shape, family)
    if route is not None:
        split, cid = route
        return Exists(g, split(g, shape), source=cid)
    v = isolated_obstruction(g)
    if v is not None:
        return NotVce(g, IsolatedVertex(v, g.labels[v]))
    out = brute_force(g, vertex_cap, isolated_shortcut=False)
    if out.status is SearchStatus.FOUND:
        return Exists(g, out.partition, source=None)
    if out.status is SearchStatus.NONE_EXISTS:
        return NotVce(g, ExhaustedSearch(out.partitions_examined))
    return None
