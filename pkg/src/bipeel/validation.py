"""Input validation helpers shared by functions and estimators."""

from __future__ import annotations

from .graph import BipartiteGraph

__all__ = ["check_bipartite_graph", "check_projected_graph", "check_counts"]


def check_bipartite_graph(x) -> BipartiteGraph:
    """Require a :class:`BipartiteGraph`; returns it for chaining."""
    if not isinstance(x, BipartiteGraph):
        raise TypeError(
            f"expected a BipartiteGraph, got {type(x).__name__}; load one "
            "with load_bipartite() or BipartiteGraph.from_edges()"
        )
    return x


def check_projected_graph(x, weighted: bool | None = None):
    """Require a :class:`ProjectedGraph`, optionally of one weight flavor."""
    from .projection import ProjectedGraph

    if not isinstance(x, ProjectedGraph):
        raise TypeError(f"expected a ProjectedGraph, got {type(x).__name__}")
    if weighted is True and x.weights is None:
        raise ValueError("expected a weighted projection; build with project_weighted()")
    if weighted is False and x.weights is not None:
        raise ValueError("expected an unweighted projection")
    return x


def check_counts(counts, graph: BipartiteGraph, kind: str) -> None:
    """Cheap consistency checks tying butterfly counts to a graph.

    Catches passing the wrong flavor or counts from another graph: the
    kind must match, the length must match the indexed entity set, and
    the values must sum to 2x (vertex) or 4x (edge) the stored total.
    """
    if counts.kind != kind:
        raise ValueError(f"expected {kind!r} counts, got {counts.kind!r}")
    expected_len = graph.u_count if kind == "vertex" else graph.edge_count
    if len(counts.values) != expected_len:
        raise ValueError(
            f"counts cover {len(counts.values)} entities, graph has {expected_len}"
        )
    multiplier = 2 if kind == "vertex" else 4
    if sum(counts.values) != multiplier * counts.total:
        raise ValueError(
            f"inconsistent counts: values sum to {sum(counts.values)}, "
            f"expected {multiplier} x total ({counts.total})"
        )
