"""Wing decomposition: butterfly-based peeling of the edge set.

The wing number of an edge is the largest ``k`` such that the edge
belongs to a subgraph in which every edge takes part in at least ``k``
butterflies (connectivity applied at extraction). Peeling removes the
minimum-count edge and discounts each of its butterflies once: companions
are decremented only while all three are still unassigned, so a butterfly
is spent exactly when its first edge leaves.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bucket import BucketQueue
from .butterflies import ButterflyCounts, butterflies_of_edge, count_per_edge
from .graph import BipartiteGraph
from .validation import check_counts

__all__ = ["WingResult", "wing_decompose", "k_wing_edge_sets"]


@dataclass(frozen=True)
class WingResult:
    """Outcome of one wing decomposition.

    ``wing_numbers`` follow dense edge ids; ``decrement_events`` counts
    butterflies that triggered a discount, which the skip rule makes
    exactly one per butterfly in the graph.
    """

    wing_numbers: tuple[int, ...]
    peel_order: tuple[int, ...]
    initial_counts: tuple[int, ...]
    decrement_events: int

    @property
    def max_wing(self) -> int:
        return max(self.wing_numbers, default=0)


def wing_decompose(
    graph: BipartiteGraph, counts: ButterflyCounts | None = None
) -> WingResult:
    """Wing numbers of all edges by bucket peeling.

    ``counts`` must be the per-edge butterfly counts of ``graph``
    (recomputed when omitted); inconsistent counts raise ``ValueError``.
    Edges leave in nondecreasing count order, smallest edge id first
    within a bucket.
    """
    if counts is None:
        counts = count_per_edge(graph)
    check_counts(counts, graph, "edge")

    queue = BucketQueue(list(counts.values))
    wing_numbers = [0] * graph.edge_count
    peel_order = []
    events = 0
    done = queue.done
    key = queue.key
    while (popped := queue.pop()) is not None:
        edge, level = popped
        wing_numbers[edge] = level
        peel_order.append(edge)
        if counts.values[edge] == 0:
            continue
        # Enumeration already applies the all-companions-unassigned rule.
        for trio in butterflies_of_edge(graph, edge, active=lambda f: not done[f]):
            events += 1
            for companion in trio:
                if key[companion] > level:
                    queue.decrease(companion, key[companion] - 1)
    return WingResult(
        tuple(wing_numbers), tuple(peel_order), counts.values, events
    )


def k_wing_edge_sets(result: WingResult) -> dict[int, frozenset[int]]:
    """Nested edge sets ``{k: {e : wing_number(e) >= k}}`` for every level
    from 0 (all edges) up to the maximum wing number."""
    top = result.max_wing
    by_level: dict[int, frozenset[int]] = {}
    members: list[int] = list(range(len(result.wing_numbers)))
    for k in range(top + 1):
        members = [e for e in members if result.wing_numbers[e] >= k]
        by_level[k] = frozenset(members)
    return by_level
