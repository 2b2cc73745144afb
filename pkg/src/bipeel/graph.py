"""Bipartite graph container, edge-list ingestion, and induced subgraphs.

The two vertex sides live in separate dense 0-based id spaces: "primary"
vertices (side U, the side that drives the connections) and "secondary"
vertices (side V, the affiliations). Edges only cross sides, so the
structure is simple by construction. Adjacency lists are kept sorted and
the graph is immutable once built.

Edges carry dense ids as well: edge id of (u, v) is the CSR position of v
inside u's adjacency list, i.e. ids are ordered by (u, v).
"""

from __future__ import annotations

import io
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import EdgeListParseError, EmptyGraphError

__all__ = [
    "BipartiteGraph",
    "LoadStats",
    "SubgraphProfile",
    "load_bipartite",
    "write_edge_list",
    "write_label_map",
    "induced_subgraph",
    "induced_profile",
]


@dataclass(frozen=True)
class LoadStats:
    """Bookkeeping from one edge-list ingestion."""

    edge_lines: int
    comment_lines: int
    duplicate_edges: int


@dataclass(frozen=True)
class SubgraphProfile:
    """Size and density summary of a bipartite subgraph."""

    u_size: int
    v_size: int
    edge_count: int
    density: float


class BipartiteGraph:
    """Immutable two-sided adjacency structure with per-side string labels.

    Parameters
    ----------
    adjacency_u, adjacency_v:
        Per-vertex neighbor id lists. Lists must be sorted ascending,
        duplicate free, and mutually symmetric.
    labels_u, labels_v:
        Original string label per internal id. Default to the decimal ids.
    """

    __slots__ = (
        "_adj_u",
        "_adj_v",
        "_labels_u",
        "_labels_v",
        "_offsets",
        "_edge_count",
        "_edge_order",
        "load_stats",
    )

    def __init__(
        self,
        adjacency_u: Iterable[Iterable[int]],
        adjacency_v: Iterable[Iterable[int]],
        labels_u: Iterable[str] | None = None,
        labels_v: Iterable[str] | None = None,
        *,
        _edge_order: tuple[int, ...] | None = None,
        load_stats: LoadStats | None = None,
    ):
        adj_u = tuple(tuple(nbrs) for nbrs in adjacency_u)
        adj_v = tuple(tuple(nbrs) for nbrs in adjacency_v)
        _validate_adjacency(adj_u, adj_v)
        self._adj_u = adj_u
        self._adj_v = adj_v
        self._labels_u = _resolve_labels(labels_u, len(adj_u), "u")
        self._labels_v = _resolve_labels(labels_v, len(adj_v), "v")
        offsets = [0]
        for nbrs in adj_u:
            offsets.append(offsets[-1] + len(nbrs))
        self._offsets = tuple(offsets)
        self._edge_count = offsets[-1]
        self._edge_order = _edge_order
        self.load_stats = load_stats

    # -- basic shape ---------------------------------------------------

    @property
    def u_count(self) -> int:
        return len(self._adj_u)

    @property
    def v_count(self) -> int:
        return len(self._adj_v)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def adjacency_u(self) -> tuple[tuple[int, ...], ...]:
        return self._adj_u

    @property
    def adjacency_v(self) -> tuple[tuple[int, ...], ...]:
        return self._adj_v

    @property
    def labels_u(self) -> tuple[str, ...]:
        return self._labels_u

    @property
    def labels_v(self) -> tuple[str, ...]:
        return self._labels_v

    def neighbors_u(self, u: int) -> tuple[int, ...]:
        """Secondary neighbors of primary vertex ``u``."""
        return self._adj_u[u]

    def neighbors_v(self, v: int) -> tuple[int, ...]:
        """Primary neighbors of secondary vertex ``v``."""
        return self._adj_v[v]

    def degree_u(self, u: int) -> int:
        return len(self._adj_u[u])

    def degree_v(self, v: int) -> int:
        return len(self._adj_v[v])

    # -- edge ids ------------------------------------------------------

    def edge_id(self, u: int, v: int) -> int:
        """Dense id of edge (u, v); raises ``KeyError`` if absent."""
        nbrs = self._adj_u[u]
        pos = bisect_left(nbrs, v)
        if pos == len(nbrs) or nbrs[pos] != v:
            raise KeyError(f"no edge ({u}, {v})")
        return self._offsets[u] + pos

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj_u[u]
        pos = bisect_left(nbrs, v)
        return pos < len(nbrs) and nbrs[pos] == v

    def edge_endpoints(self, edge: int) -> tuple[int, int]:
        """Endpoints (u, v) of a dense edge id."""
        if not 0 <= edge < self._edge_count:
            raise KeyError(f"edge id {edge} out of range")
        u = bisect_right(self._offsets, edge) - 1
        return u, self._adj_u[u][edge - self._offsets[u]]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) pairs in edge-id order."""
        for u, nbrs in enumerate(self._adj_u):
            for v in nbrs:
                yield u, v

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self._adj_u == other._adj_u
            and self._adj_v == other._adj_v
            and self._labels_u == other._labels_u
            and self._labels_v == other._labels_v
        )

    def __hash__(self) -> int:
        return hash((self._adj_u, self._adj_v))

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph(|U|={self.u_count}, |V|={self.v_count}, "
            f"|E|={self._edge_count})"
        )

    # -- construction --------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        pairs: Iterable[tuple[object, object]],
        load_stats: bool = False,
    ) -> "BipartiteGraph":
        """Build a graph from (primary token, secondary token) pairs.

        Tokens become labels via ``str``. Internal ids are assigned in
        first-appearance order per side; duplicate pairs collapse.
        """
        u_ids: dict[str, int] = {}
        v_ids: dict[str, int] = {}
        seen: set[tuple[int, int]] = set()
        ordered: list[tuple[int, int]] = []
        duplicates = 0
        for a, b in pairs:
            ua, vb = str(a), str(b)
            ui = u_ids.setdefault(ua, len(u_ids))
            vi = v_ids.setdefault(vb, len(v_ids))
            key = (ui, vi)
            if key in seen:
                duplicates += 1
                continue
            seen.add(key)
            ordered.append(key)
        adj_u: list[list[int]] = [[] for _ in range(len(u_ids))]
        adj_v: list[list[int]] = [[] for _ in range(len(v_ids))]
        for ui, vi in ordered:
            adj_u[ui].append(vi)
            adj_v[vi].append(ui)
        for nbrs in adj_u:
            nbrs.sort()
        for nbrs in adj_v:
            nbrs.sort()
        graph = cls(
            adj_u,
            adj_v,
            labels_u=list(u_ids),
            labels_v=list(v_ids),
            load_stats=(
                LoadStats(len(ordered) + duplicates, 0, duplicates)
                if load_stats
                else None
            ),
        )
        # First-seen order lets serialization replay the input stream, so a
        # reload reassigns identical ids (id-sorted emission can permute the
        # secondary side).
        graph._edge_order = tuple(graph.edge_id(ui, vi) for ui, vi in ordered)
        return graph


def _resolve_labels(
    labels: Iterable[str] | None, count: int, side: str
) -> tuple[str, ...]:
    if labels is None:
        return tuple(str(i) for i in range(count))
    out = tuple(str(x) for x in labels)
    if len(out) != count:
        raise ValueError(f"{side}-side labels: expected {count}, got {len(out)}")
    return out


def _validate_adjacency(
    adj_u: tuple[tuple[int, ...], ...], adj_v: tuple[tuple[int, ...], ...]
) -> None:
    v_count = len(adj_v)
    degree_from_u = [0] * v_count
    for u, nbrs in enumerate(adj_u):
        for prev, cur in zip(nbrs, nbrs[1:]):
            if cur <= prev:
                raise ValueError(f"adjacency_u[{u}] not strictly ascending")
        for v in nbrs:
            if not 0 <= v < v_count:
                raise ValueError(f"adjacency_u[{u}] refers to unknown vertex {v}")
            degree_from_u[v] += 1
    u_count = len(adj_u)
    total_v = 0
    for v, nbrs in enumerate(adj_v):
        if len(nbrs) != degree_from_u[v]:
            raise ValueError(f"adjacency_v[{v}] is not symmetric with adjacency_u")
        total_v += len(nbrs)
        for prev, cur in zip(nbrs, nbrs[1:]):
            if cur <= prev:
                raise ValueError(f"adjacency_v[{v}] not strictly ascending")
        for u in nbrs:
            if not 0 <= u < u_count:
                raise ValueError(f"adjacency_v[{v}] refers to unknown vertex {u}")
            if not _contains(adj_u[u], v):
                raise ValueError(f"edge ({u}, {v}) present only on one side")


def _contains(sorted_seq: tuple[int, ...], x: int) -> bool:
    pos = bisect_left(sorted_seq, x)
    return pos < len(sorted_seq) and sorted_seq[pos] == x


# -- edge-list I/O -----------------------------------------------------


def load_bipartite(
    source: str | Path | IO[str], primary_side: str = "left"
) -> BipartiteGraph:
    """Load a graph from a whitespace-separated two-column edge list.

    Lines starting with ``#`` are comments. ``primary_side`` selects which
    column becomes the primary side U. Duplicate edges collapse silently
    but are counted in ``graph.load_stats``.

    Raises
    ------
    EdgeListParseError
        On any non-comment line without exactly two tokens.
    EmptyGraphError
        When no edges survive parsing.
    """
    if primary_side not in ("left", "right"):
        raise ValueError(f"primary_side must be 'left' or 'right', got {primary_side!r}")
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as handle:
            return load_bipartite(handle, primary_side)

    swap = primary_side == "right"
    pairs: list[tuple[str, str]] = []
    comments = 0
    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments += 1
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected 2 tokens, got {len(tokens)}", line_number
            )
        a, b = tokens
        pairs.append((b, a) if swap else (a, b))
    if not pairs:
        raise EmptyGraphError("edge list contains no edges")
    graph = BipartiteGraph.from_edges(pairs, load_stats=True)
    stats = graph.load_stats
    graph.load_stats = LoadStats(stats.edge_lines, comments, stats.duplicate_edges)
    return graph


def write_edge_list(graph: BipartiteGraph, target: str | Path | IO[str]) -> None:
    """Serialize as label pairs, one edge per line.

    Edges are written in the graph's first-seen order when known (so that
    reloading assigns identical internal ids), else in edge-id order.
    """
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8") as handle:
            write_edge_list(graph, handle)
            return
    order = graph._edge_order
    if order is None:
        order = range(graph.edge_count)
    for edge in order:
        u, v = graph.edge_endpoints(edge)
        target.write(f"{graph.labels_u[u]}\t{graph.labels_v[v]}\n")


def write_label_map(
    graph: BipartiteGraph, side: str, target: str | Path | IO[str]
) -> None:
    """Emit the ``internal_id<TAB>label`` sidecar for one side."""
    if side not in ("u", "v"):
        raise ValueError(f"side must be 'u' or 'v', got {side!r}")
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8") as handle:
            write_label_map(graph, side, handle)
            return
    labels = graph.labels_u if side == "u" else graph.labels_v
    for i, label in enumerate(labels):
        target.write(f"{i}\t{label}\n")


def edge_list_text(graph: BipartiteGraph) -> str:
    """Serialization of :func:`write_edge_list` as a string."""
    buf = io.StringIO()
    write_edge_list(graph, buf)
    return buf.getvalue()


# -- induced subgraphs -------------------------------------------------


def induced_subgraph(graph: BipartiteGraph, u_set: Iterable[int]) -> BipartiteGraph:
    """Subgraph induced by a set of primary vertices.

    The secondary side is the union of the kept vertices' neighborhoods
    and the edge set is every edge incident to a kept primary vertex.
    An empty ``u_set`` yields the empty graph.
    """
    kept = sorted(set(u_set))
    if kept and not (0 <= kept[0] and kept[-1] < graph.u_count):
        raise ValueError("u_set contains ids outside the primary side")
    v_map: dict[int, int] = {}
    adj_u: list[list[int]] = []
    ordered: list[tuple[int, int]] = []
    for new_u, u in enumerate(kept):
        row = []
        for v in graph.neighbors_u(u):
            new_v = v_map.setdefault(v, len(v_map))
            row.append(new_v)
            ordered.append((new_u, new_v))
        row.sort()
        adj_u.append(row)
    adj_v: list[list[int]] = [[] for _ in range(len(v_map))]
    for new_u, row in enumerate(adj_u):
        for new_v in row:
            adj_v[new_v].append(new_u)
    sub = BipartiteGraph(
        adj_u,
        adj_v,
        labels_u=[graph.labels_u[u] for u in kept],
        labels_v=[graph.labels_v[v] for v in sorted(v_map, key=v_map.get)],
    )
    sub._edge_order = tuple(sub.edge_id(a, b) for a, b in ordered)
    return sub


def induced_profile(graph: BipartiteGraph, u_set: Iterable[int]) -> SubgraphProfile:
    """Profile (|U|, |V|, |E|, density) of the induced subgraph, without
    materializing it."""
    kept = set(u_set)
    if not kept:
        return SubgraphProfile(0, 0, 0, 0.0)
    secondary: set[int] = set()
    edge_count = 0
    for u in kept:
        nbrs = graph.neighbors_u(u)
        secondary.update(nbrs)
        edge_count += len(nbrs)
    v_size = len(secondary)
    density = edge_count / (len(kept) * v_size) if v_size else 0.0
    return SubgraphProfile(len(kept), v_size, edge_count, density)
