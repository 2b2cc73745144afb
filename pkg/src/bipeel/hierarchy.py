"""Extraction of maximal butterfly-connected subgraphs and their forest.

Entities (primary vertices for tips, edges for wings) are swept in
decreasing decomposition value with a disjoint-set forest. At each level
``k`` the newly activated entities are unioned with the butterfly-adjacent
entities already active; every component that changed at the level is
recorded as a tree node, and later merges become parent links. Unary
chains where nothing changes emit no duplicate node, so every node is a
distinct subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .butterflies import butterflies_of_edge, butterflies_of_vertex
from .graph import BipartiteGraph, induced_profile
from .tip import TipResult
from .wing import WingResult

__all__ = [
    "NucleusNode",
    "NucleusTree",
    "UnionFind",
    "extract_k_tips",
    "extract_k_wings",
    "build_hierarchy",
    "subgraph_profiles",
]


class UnionFind:
    """Disjoint-set forest with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        """Merge the two sets; returns the surviving root."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


@dataclass(frozen=True)
class NucleusNode:
    """One maximal subgraph in the forest.

    ``members`` are primary-vertex ids for tip/core nodes and dense edge
    ids for wing/triangle-nucleus nodes. ``value`` is the level ``k`` the
    node became maximal at; parents always have strictly smaller values
    and superset member sets.
    """

    node_id: int
    kind: str
    value: float
    members: tuple[int, ...]
    parent: int | None
    u_size: int
    v_size: int
    edge_count: int
    density: float


@dataclass
class NucleusTree:
    """Forest of nested maximal subgraphs, ordered root-to-leaf by level."""

    kind: str
    nodes: list[NucleusNode] = field(default_factory=list)

    @property
    def roots(self) -> list[NucleusNode]:
        return [n for n in self.nodes if n.parent is None]

    def __len__(self) -> int:
        return len(self.nodes)

    def level_sets(self, k: float) -> list[tuple[int, ...]]:
        """Member sets of the maximal level-``k`` subgraphs encoded by the
        tree: deepest nodes of value >= k whose parent sits below ``k``."""
        out = [
            n.members
            for n in self.nodes
            if n.value >= k
            and (n.parent is None or self.nodes[n.parent].value < k)
        ]
        return sorted(out, key=lambda m: m[0])


GroupFn = Callable[[int, list[bool]], Iterable[Iterable[int]]]


def _level_sweep(
    values: list[float] | tuple[float, ...], adjacent_groups: GroupFn
) -> list[tuple[float, tuple[int, ...], tuple[int, ...]]]:
    """Decreasing-level union-find sweep shared by all decompositions.

    ``adjacent_groups(entity, active)`` yields groups of active co-members
    the entity must share a component with. Returns raw nodes as
    ``(level, members, child_node_ids)`` in emission order. Entities with
    value <= 0 carry no subgraph and are skipped.
    """
    n = len(values)
    by_level: dict[float, list[int]] = {}
    for e, val in enumerate(values):
        if val > 0:
            by_level.setdefault(val, []).append(e)

    active = [False] * n
    forest = UnionFind(n)
    comp_members: dict[int, list[int]] = {}
    comp_children: dict[int, list[int]] = {}
    raw: list[tuple[float, tuple[int, ...], tuple[int, ...]]] = []

    for level in sorted(by_level, reverse=True):
        fresh = by_level[level]
        for e in fresh:
            active[e] = True
            comp_members[e] = [e]
            comp_children[e] = []
        for e in fresh:
            for group in adjacent_groups(e, active):
                for other in group:
                    ra, rb = forest.find(e), forest.find(other)
                    if ra == rb:
                        continue
                    root = forest.union(ra, rb)
                    gone = rb if root == ra else ra
                    comp_members[root].extend(comp_members.pop(gone))
                    comp_children[root].extend(comp_children.pop(gone))
        changed = {forest.find(e) for e in fresh}
        for root in sorted(changed, key=lambda r: min(comp_members[r])):
            node_id = len(raw)
            raw.append(
                (
                    level,
                    tuple(sorted(comp_members[root])),
                    tuple(sorted(comp_children[root])),
                )
            )
            comp_children[root] = [node_id]
    return raw


def _assemble_tree(
    kind: str,
    raw: list[tuple[float, tuple[int, ...], tuple[int, ...]]],
    profile_fn: Callable[[tuple[int, ...]], tuple[int, int, int, float]],
) -> NucleusTree:
    parents: list[int | None] = [None] * len(raw)
    for node_id, (_value, _members, children) in enumerate(raw):
        for child in children:
            parents[child] = node_id
    tree = NucleusTree(kind)
    for node_id, (value, members, _children) in enumerate(raw):
        u_size, v_size, edge_count, density = profile_fn(members)
        tree.nodes.append(
            NucleusNode(
                node_id,
                kind,
                value,
                members,
                parents[node_id],
                u_size,
                v_size,
                edge_count,
                density,
            )
        )
    return tree


# -- butterfly adjacency -----------------------------------------------


def _tip_groups(graph: BipartiteGraph) -> GroupFn:
    def groups(u: int, active: list[bool]):
        partners = butterflies_of_vertex(graph, u, active=lambda x: active[x])
        if partners:
            yield partners.keys()

    return groups


def _wing_groups(graph: BipartiteGraph) -> GroupFn:
    def groups(e: int, active: list[bool]):
        yield from butterflies_of_edge(graph, e, active=lambda f: active[f])

    return groups


def _vertex_profile(graph: BipartiteGraph):
    def profile(members: tuple[int, ...]):
        p = induced_profile(graph, members)
        return p.u_size, p.v_size, p.edge_count, p.density

    return profile


def _edge_profile(graph: BipartiteGraph):
    def profile(members: tuple[int, ...]):
        primary: set[int] = set()
        secondary: set[int] = set()
        for e in members:
            u, v = graph.edge_endpoints(e)
            primary.add(u)
            secondary.add(v)
        denom = len(primary) * len(secondary)
        density = len(members) / denom if denom else 0.0
        return len(primary), len(secondary), len(members), density

    return profile


# -- public operations -------------------------------------------------


def extract_k_tips(
    graph: BipartiteGraph, result: TipResult, k: int
) -> list[tuple[int, ...]]:
    """Maximal butterfly-connected sets of primary vertices with tip
    number >= k, ordered by smallest member.

    Two vertices are adjacent when they share at least two secondary
    neighbors, i.e. span a butterfly; classes are transitive closures
    inside the survivor set.
    """
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    active = [t >= k for t in result.tip_numbers]
    survivors = [u for u, on in enumerate(active) if on]
    forest = UnionFind(graph.u_count)
    for u in survivors:
        for x in butterflies_of_vertex(graph, u, active=lambda y: active[y]):
            forest.union(u, x)
    return _components(survivors, forest)


def extract_k_wings(
    graph: BipartiteGraph, result: WingResult, k: int
) -> list[tuple[int, ...]]:
    """Maximal butterfly-connected sets of edges with wing number >= k.

    Two edges are adjacent when some butterfly whose four edges all
    survive contains both; classes may overlap on vertices (never on
    edges), which is what separates communities that share a hub.
    """
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    active = [w >= k for w in result.wing_numbers]
    survivors = [e for e, on in enumerate(active) if on]
    forest = UnionFind(graph.edge_count)
    for e in survivors:
        for trio in butterflies_of_edge(graph, e, active=lambda f: active[f]):
            for companion in trio:
                forest.union(e, companion)
    return _components(survivors, forest)


def _components(survivors: list[int], forest: UnionFind) -> list[tuple[int, ...]]:
    groups: dict[int, list[int]] = {}
    for e in survivors:
        groups.setdefault(forest.find(e), []).append(e)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])


def build_hierarchy(
    graph: BipartiteGraph, result: TipResult | WingResult
) -> NucleusTree:
    """Forest of all maximal k-tips or k-wings of ``graph``.

    For every level ``k`` present in the result, the tree's level-``k``
    member sets (see :meth:`NucleusTree.level_sets`) equal the direct
    ``extract_k_*`` output; parent links record which larger, sparser
    subgraph each nucleus dissolves into.
    """
    if isinstance(result, TipResult):
        raw = _level_sweep(result.tip_numbers, _tip_groups(graph))
        return _assemble_tree("tip", raw, _vertex_profile(graph))
    if isinstance(result, WingResult):
        raw = _level_sweep(result.wing_numbers, _wing_groups(graph))
        return _assemble_tree("wing", raw, _edge_profile(graph))
    raise TypeError(f"expected TipResult or WingResult, got {type(result).__name__}")


def subgraph_profiles(tree: NucleusTree) -> list[dict]:
    """One record per node, ready for CSV emission."""
    return [
        {
            "node_id": n.node_id,
            "parent_id": n.parent,
            "kind": n.kind,
            "k": n.value,
            "u_size": n.u_size,
            "v_size": n.v_size,
            "edges": n.edge_count,
            "density": n.density,
        }
        for n in tree.nodes
    ]
