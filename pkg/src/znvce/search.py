"""Ground truth for very-cost-effective existence: exhaustive enumeration,
the isolated-vertex obstruction, and a greedy local-search heuristic."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from time import perf_counter

import numpy as np

from .errors import DomainError
from .graphs import LabeledGraph
from .vce import Bipartition

DEFAULT_VERTEX_CAP = 26

# masks are evaluated in vectorized blocks of this many candidates
_BLOCK = 1 << 16


class SearchStatus(Enum):
    FOUND = "Found"
    NONE_EXISTS = "NoneExists"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True, eq=False)
class SearchOutcome:
    status: SearchStatus
    partition: Bipartition | None
    partitions_examined: int
    elapsed: float
    reason: str = ""


def isolated_obstruction(g: LabeledGraph) -> int | None:
    """Smallest isolated vertex id, or None. Its presence rules out any
    very-cost-effective bipartition without enumerating."""
    deg0 = np.flatnonzero(g.degrees() == 0)
    return int(deg0[0]) if deg0.size else None


def _evaluate_block(side: np.ndarray, adjf: np.ndarray, deg: np.ndarray) -> np.ndarray:
    # side is (candidates, |V|) bool; counts fit float32 exactly at this scale
    nb_b = (side.astype(np.float32) @ adjf).astype(np.int64)
    inside = np.where(side, nb_b, deg[None, :] - nb_b)
    return (2 * inside < deg[None, :]).all(axis=1)


def brute_force(
    g: LabeledGraph,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    *,
    symmetry_reduction: bool = True,
    isolated_shortcut: bool = True,
) -> SearchOutcome:
    """Enumerate bipartitions in binary-counting order over vertex ids.

    With symmetry_reduction, vertex 0 is pinned to side R and the remaining
    2^(|V|-1) - 1 nontrivial assignments are scanned; without it, all
    2^|V| - 2 assignments are. Found partitions are the first in canonical
    order, so runs are deterministic either way.
    """
    t0 = perf_counter()
    nv = g.n_vertices
    if nv < 2:
        return SearchOutcome(SearchStatus.NONE_EXISTS, None, 0, perf_counter() - t0,
                             reason="no valid bipartition on fewer than two vertices")
    if isolated_shortcut:
        v = isolated_obstruction(g)
        if v is not None:
            return SearchOutcome(SearchStatus.NONE_EXISTS, None, 0, perf_counter() - t0,
                                 reason=f"isolated vertex {g.labels[v].render()}")
    if nv > vertex_cap:
        return SearchOutcome(SearchStatus.INCONCLUSIVE, None, 0, perf_counter() - t0,
                             reason=f"{nv} vertices exceeds the exhaustive cap {vertex_cap}")

    free = nv - 1 if symmetry_reduction else nv
    last = (1 << free) - 1 if symmetry_reduction else (1 << free) - 2
    adjf = g.adj.astype(np.float32)
    deg = g.degrees()
    shifts = np.arange(free, dtype=np.uint64)
    examined = 0
    for start in range(1, last + 1, _BLOCK):
        stop = min(start + _BLOCK, last + 1)
        masks = np.arange(start, stop, dtype=np.uint64)
        bits = ((masks[:, None] >> shifts[None, :]) & 1).astype(bool)
        if symmetry_reduction:
            side = np.zeros((masks.size, nv), dtype=bool)
            side[:, 1:] = bits
        else:
            side = bits
        ok = _evaluate_block(side, adjf, deg)
        hit = np.flatnonzero(ok)
        if hit.size:
            examined += int(hit[0]) + 1
            part = Bipartition(side[hit[0]])
            return SearchOutcome(SearchStatus.FOUND, part, examined, perf_counter() - t0)
        examined += masks.size
    return SearchOutcome(SearchStatus.NONE_EXISTS, None, examined, perf_counter() - t0,
                         reason="enumeration exhausted")


def local_search(
    g: LabeledGraph,
    max_restarts: int = 32,
    max_steps: int = 1024,
    rng_seed: int = 0,
) -> SearchOutcome:
    """Hill climbing from random balanced starts.

    Each step flips the vertex with the worst inside-minus-outside margin
    (ties to the smallest id), skipping flips that would empty a side. Never
    claims NoneExists; deterministic for a fixed seed.
    """
    t0 = perf_counter()
    nv = g.n_vertices
    if nv < 2:
        raise DomainError("local_search needs at least two vertices")
    rng = np.random.default_rng(rng_seed)
    adjf = g.adj.astype(np.float32)
    deg = g.degrees()
    examined = 0
    for _ in range(max_restarts):
        in_b = np.zeros(nv, dtype=bool)
        in_b[rng.permutation(nv)[: nv // 2]] = True
        n_b = nv // 2
        for _ in range(max_steps):
            nb_b = (adjf @ in_b.astype(np.float32)).astype(np.int64)
            inside = np.where(in_b, nb_b, deg - nb_b)
            margin = 2 * inside - deg
            examined += 1
            if (margin < 0).all():
                return SearchOutcome(SearchStatus.FOUND, Bipartition(in_b), examined,
                                     perf_counter() - t0)
            flipped = False
            for v in np.argsort(-margin, kind="stable"):
                side_count = n_b if in_b[v] else nv - n_b
                if side_count > 1:
                    n_b += -1 if in_b[v] else 1
                    in_b[v] = not in_b[v]
                    flipped = True
                    break
            if not flipped:
                break
    return SearchOutcome(SearchStatus.INCONCLUSIVE, None, examined, perf_counter() - t0,
                         reason="restart and step budget exhausted")
