"""Comparison decompositions that run on unipartite projections.

Three peeling baselines: classic k-core on the unweighted projection,
fractional k-core on the weighted projection (peel by incident weight
sum), and the triangle nucleus decomposition that strengthens k-truss
with triangle connectivity. Their subgraphs are mapped back to bipartite
profiles for apples-to-apples comparison with tips and wings.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from ._bucket import BucketQueue
from .graph import BipartiteGraph, SubgraphProfile, induced_profile
from .hierarchy import NucleusTree, _assemble_tree, _level_sweep, _vertex_profile
from .projection import ProjectedGraph
from .validation import check_projected_graph

__all__ = [
    "CoreResult",
    "NucleusEdgeResult",
    "core_decompose",
    "fractional_core_decompose",
    "nucleus23_decompose",
    "triangle_supports",
    "induced_bipartite_profile",
    "core_hierarchy",
    "fractional_core_hierarchy",
    "nucleus23_hierarchy",
]


@dataclass(frozen=True)
class CoreResult:
    """Core numbers (integers) or fractional core values (reals) per
    vertex, plus the removal order."""

    core_numbers: tuple
    peel_order: tuple[int, ...]

    @property
    def max_core(self):
        return max(self.core_numbers, default=0)


@dataclass(frozen=True)
class NucleusEdgeResult:
    """Triangle-peeling values per projected edge (edge ids follow
    ``ProjectedGraph.edge_list``), with the starting triangle counts."""

    nucleus_numbers: tuple[int, ...]
    triangle_counts: tuple[int, ...]
    peel_order: tuple[int, ...]

    @property
    def max_nucleus(self) -> int:
        return max(self.nucleus_numbers, default=0)


def core_decompose(gp: ProjectedGraph) -> CoreResult:
    """Degree peeling core numbers, linear-time bucket implementation."""
    check_projected_graph(gp, weighted=False)
    queue = BucketQueue([gp.degree(u) for u in range(gp.vertex_count)])
    core = [0] * gp.vertex_count
    order = []
    done = queue.done
    key = queue.key
    while (popped := queue.pop()) is not None:
        u, level = popped
        core[u] = level
        order.append(u)
        for x in gp.neighbors(u):
            if not done[x] and key[x] > level:
                queue.decrease(x, key[x] - 1)
    return CoreResult(tuple(core), tuple(order))


def fractional_core_decompose(gwp: ProjectedGraph) -> CoreResult:
    """Peel by minimum weighted degree over the weighted projection.

    A vertex's value is the running maximum of the minimum weighted
    degree seen up to its removal, the real-valued analogue of a
    degeneracy ordering; for every threshold k the vertices valued >= k
    form the maximal subgraph where everyone keeps incident weight >= k.
    Ties break by smallest vertex id.
    """
    check_projected_graph(gwp, weighted=True)
    n = gwp.vertex_count
    wdeg = [sum(gwp.weights[u]) for u in range(n)]
    token = [0] * n
    heap = [(wdeg[u], u, 0) for u in range(n)]
    heapq.heapify(heap)
    values: list[float] = [0.0] * n
    order: list[int] = []
    done = [False] * n
    level = 0.0
    while heap:
        w, u, t = heapq.heappop(heap)
        if done[u] or t != token[u]:
            continue
        done[u] = True
        level = max(level, w)
        values[u] = level
        order.append(u)
        for x, wx in zip(gwp.adjacency[u], gwp.weights[u]):
            if done[x]:
                continue
            wdeg[x] -= wx
            token[x] += 1
            heapq.heappush(heap, (wdeg[x], x, token[x]))
    return CoreResult(tuple(values), tuple(order))


def triangle_supports(gp: ProjectedGraph) -> tuple[int, ...]:
    """Number of triangles through each projected edge.

    Triangles are enumerated once each with id-ordered adjacency
    intersection (a < b < w), incrementing all three member edges.
    """
    check_projected_graph(gp, weighted=False)
    supports = [0] * len(gp.edge_list)
    adjacency = gp.adjacency
    for eid, (a, b) in enumerate(gp.edge_list):
        na, nb = adjacency[a], adjacency[b]
        i = j = 0
        while i < len(na) and j < len(nb):
            xa, xb = na[i], nb[j]
            if xa == xb:
                if xa > b:
                    supports[eid] += 1
                    supports[gp.edge_id(a, xa)] += 1
                    supports[gp.edge_id(b, xa)] += 1
                i += 1
                j += 1
            elif xa < xb:
                i += 1
            else:
                j += 1
    return tuple(supports)


def nucleus23_decompose(
    gp: ProjectedGraph, supports: tuple[int, ...] | None = None
) -> NucleusEdgeResult:
    """Triangle peeling of projected edges.

    The per-edge values coincide with k-truss support numbers; the
    stronger triangle-connectivity requirement only matters when the
    subgraphs are extracted (see :func:`nucleus23_hierarchy`).
    """
    if supports is None:
        supports = triangle_supports(gp)
    queue = BucketQueue(list(supports))
    kappa = [0] * len(supports)
    order = []
    done = queue.done
    key = queue.key
    adjacency = gp.adjacency
    while (popped := queue.pop()) is not None:
        eid, level = popped
        kappa[eid] = level
        order.append(eid)
        a, b = gp.edge_list[eid]
        for w in _sorted_intersection(adjacency[a], adjacency[b]):
            f1 = gp.edge_id(a, w)
            f2 = gp.edge_id(b, w)
            if done[f1] or done[f2]:
                continue
            if key[f1] > level:
                queue.decrease(f1, key[f1] - 1)
            if key[f2] > level:
                queue.decrease(f2, key[f2] - 1)
    return NucleusEdgeResult(tuple(kappa), supports, tuple(order))


def _sorted_intersection(
    a: tuple[int, ...], b: tuple[int, ...]
) -> Iterable[int]:
    i = j = 0
    while i < len(a) and j < len(b):
        xa, xb = a[i], b[j]
        if xa == xb:
            yield xa
            i += 1
            j += 1
        elif xa < xb:
            i += 1
        else:
            j += 1


def induced_bipartite_profile(
    graph: BipartiteGraph, u_set: Iterable[int]
) -> SubgraphProfile:
    """Map a projection-side vertex set back to its induced bipartite
    subgraph and report |U|, |V|, |E|, density."""
    return induced_profile(graph, u_set)


# -- hierarchies over the baselines -------------------------------------


def core_hierarchy(
    graph: BipartiteGraph, gp: ProjectedGraph, result: CoreResult
) -> NucleusTree:
    """Connected components of the k-cores per level, profiled as induced
    bipartite subgraphs of ``graph``."""

    def groups(u: int, active: list[bool]):
        nbrs = [x for x in gp.neighbors(u) if active[x]]
        if nbrs:
            yield nbrs

    raw = _level_sweep(result.core_numbers, groups)
    return _assemble_tree("core", raw, _vertex_profile(graph))


def fractional_core_hierarchy(
    graph: BipartiteGraph, gwp: ProjectedGraph, result: CoreResult
) -> NucleusTree:
    """Connected components of the fractional cores per distinct value."""

    def groups(u: int, active: list[bool]):
        nbrs = [x for x in gwp.adjacency[u] if active[x]]
        if nbrs:
            yield nbrs

    raw = _level_sweep(result.core_numbers, groups)
    return _assemble_tree("frac-core", raw, _vertex_profile(graph))


def nucleus23_hierarchy(
    graph: BipartiteGraph, gp: ProjectedGraph, result: NucleusEdgeResult
) -> NucleusTree:
    """Maximal triangle-connected subgraphs per level.

    Reuses the same union-find sweep as tips and wings, with triangle
    adjacency over projected edges; node members are projected edge ids
    and profiles come from the induced bipartite subgraph on their
    endpoints.
    """

    def groups(eid: int, active: list[bool]):
        a, b = gp.edge_list[eid]
        for w in _sorted_intersection(gp.adjacency[a], gp.adjacency[b]):
            f1 = gp.edge_id(a, w)
            f2 = gp.edge_id(b, w)
            if active[f1] and active[f2]:
                yield (f1, f2)

    def profile(members: tuple[int, ...]):
        vertices: set[int] = set()
        for eid in members:
            a, b = gp.edge_list[eid]
            vertices.add(a)
            vertices.add(b)
        p = induced_profile(graph, vertices)
        return p.u_size, p.v_size, p.edge_count, p.density

    raw = _level_sweep(result.nucleus_numbers, groups)
    return _assemble_tree("nucleus23", raw, profile)
