"""One-mode projections of bipartite graphs.

The unweighted projection connects two primary vertices whenever they
share at least one secondary neighbor. The weighted variant additionally
assigns each pair the sum of ``1 / degree(v)`` over every shared secondary
vertex ``v``, so large affiliations contribute weaker ties.
"""

from __future__ import annotations

from typing import Iterator

from .errors import ProjectionSizeError
from .graph import BipartiteGraph

__all__ = ["ProjectedGraph", "project_unweighted", "project_weighted"]


class ProjectedGraph:
    """Simple undirected unipartite graph, optionally edge weighted.

    Vertices reuse the primary-side ids (and labels) of the source
    bipartite graph. ``weights`` is ``None`` for the unweighted projection,
    otherwise aligned entry-by-entry with ``adjacency``.
    """

    __slots__ = ("_adjacency", "_weights", "_labels", "_edge_list", "_edge_index")

    def __init__(
        self,
        adjacency: list[list[int]],
        weights: list[list[float]] | None = None,
        labels: tuple[str, ...] | None = None,
    ):
        self._adjacency = tuple(tuple(nbrs) for nbrs in adjacency)
        self._weights = (
            None if weights is None else tuple(tuple(row) for row in weights)
        )
        if self._weights is not None:
            for nbrs, row in zip(self._adjacency, self._weights):
                if len(nbrs) != len(row):
                    raise ValueError("weights not aligned with adjacency")
                if any(w <= 0 for w in row):
                    raise ValueError("projection weights must be positive")
        self._labels = (
            tuple(str(x) for x in labels)
            if labels is not None
            else tuple(str(i) for i in range(len(self._adjacency)))
        )
        self._edge_list: tuple[tuple[int, int], ...] | None = None
        self._edge_index: dict[tuple[int, int], int] | None = None

    @property
    def vertex_count(self) -> int:
        return len(self._adjacency)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adjacency

    @property
    def weights(self) -> tuple[tuple[float, ...], ...] | None:
        return self._weights

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adjacency) // 2

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adjacency[u]

    def degree(self, u: int) -> int:
        return len(self._adjacency[u])

    def weighted_degree(self, u: int) -> float:
        if self._weights is None:
            raise ValueError("graph carries no weights")
        return sum(self._weights[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected edge once, as (u, x) with u < x, in id order."""
        for u, nbrs in enumerate(self._adjacency):
            for x in nbrs:
                if x > u:
                    yield u, x

    @property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        if self._edge_list is None:
            self._edge_list = tuple(self.edges())
        return self._edge_list

    def edge_id(self, u: int, x: int) -> int:
        """Dense id of the undirected edge {u, x} in ``edge_list`` order."""
        if self._edge_index is None:
            self._edge_index = {pair: i for i, pair in enumerate(self.edge_list)}
        key = (u, x) if u < x else (x, u)
        return self._edge_index[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectedGraph):
            return NotImplemented
        return (
            self._adjacency == other._adjacency and self._weights == other._weights
        )

    def __hash__(self) -> int:
        return hash(self._adjacency)

    def __repr__(self) -> str:
        kind = "weighted" if self._weights is not None else "unweighted"
        return (
            f"ProjectedGraph({kind}, |V|={self.vertex_count}, "
            f"|E|={self.edge_count})"
        )


def project_unweighted(graph: BipartiteGraph) -> ProjectedGraph:
    """Connect primary vertices that share at least one secondary neighbor."""
    try:
        partner_sets: list[set[int]] = [set() for _ in range(graph.u_count)]
        for v in range(graph.v_count):
            nbrs = graph.neighbors_v(v)
            if len(nbrs) < 2:
                continue
            for i, u1 in enumerate(nbrs):
                bucket = partner_sets[u1]
                for u2 in nbrs[:i]:
                    bucket.add(u2)
                for u2 in nbrs[i + 1 :]:
                    bucket.add(u2)
        adjacency = [sorted(s) for s in partner_sets]
    except MemoryError as exc:
        raise ProjectionSizeError(
            "unweighted projection exceeded available memory; the "
            "clique expansion of large affiliations is quadratic"
        ) from exc
    return ProjectedGraph(adjacency, labels=graph.labels_u)


def project_weighted(graph: BipartiteGraph) -> ProjectedGraph:
    """Unweighted projection edge set plus reciprocal-degree weights.

    The weight of (u1, u2) is the sum of ``1 / degree(v)`` over shared
    secondary neighbors ``v``, accumulated in double precision.
    """
    try:
        partner_maps: list[dict[int, float]] = [{} for _ in range(graph.u_count)]
        for v in range(graph.v_count):
            nbrs = graph.neighbors_v(v)
            if len(nbrs) < 2:
                continue
            share = 1.0 / len(nbrs)
            for i, u1 in enumerate(nbrs):
                bucket = partner_maps[u1]
                for u2 in nbrs[:i]:
                    bucket[u2] = bucket.get(u2, 0.0) + share
                for u2 in nbrs[i + 1 :]:
                    bucket[u2] = bucket.get(u2, 0.0) + share
        adjacency = [sorted(m) for m in partner_maps]
        weights = [
            [partner_maps[u][x] for x in nbrs] for u, nbrs in enumerate(adjacency)
        ]
    except MemoryError as exc:
        raise ProjectionSizeError(
            "weighted projection exceeded available memory"
        ) from exc
    return ProjectedGraph(adjacency, weights, labels=graph.labels_u)
