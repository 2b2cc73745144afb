"""Shared graph builders for the test suite."""

from __future__ import annotations

import random

from bipeel import BipartiteGraph

# Two 2x3 blocks (B,C x 1,2,3 and D,E x 4,5,6) bridged by C4 and D3, with
# degree-2 fringe vertices A and F hanging off either block. 18 edges.
TWIN_BLOCK_EDGES = [
    ("A", "1"),
    ("A", "2"),
    ("B", "1"),
    ("B", "2"),
    ("B", "3"),
    ("C", "1"),
    ("C", "2"),
    ("C", "3"),
    ("C", "4"),
    ("D", "3"),
    ("D", "4"),
    ("D", "5"),
    ("D", "6"),
    ("E", "4"),
    ("E", "5"),
    ("E", "6"),
    ("F", "5"),
    ("F", "6"),
]


def twin_block_graph() -> BipartiteGraph:
    return BipartiteGraph.from_edges(TWIN_BLOCK_EDGES)


def biclique(a: int, b: int) -> BipartiteGraph:
    """Complete bipartite graph with a primary and b secondary vertices."""
    return BipartiteGraph.from_edges(
        (f"u{i}", f"v{j}") for i in range(a) for j in range(b)
    )


def path_graph() -> BipartiteGraph:
    """u1-v1-u2-v2: a path, hence butterfly free."""
    return BipartiteGraph.from_edges([("u1", "v1"), ("u2", "v1"), ("u2", "v2")])


def shared_affiliation_graph() -> BipartiteGraph:
    """Three primaries sharing one affiliation plus a pendant pair.

    v1 ~ {A, B, C}, v2 ~ {A, B}, v3 ~ {C, D}; the unweighted projection is
    a triangle on A, B, C with D attached to C, and weight(A, B) is
    1/3 + 1/2.
    """
    return BipartiteGraph.from_edges(
        [
            ("A", "v1"),
            ("B", "v1"),
            ("C", "v1"),
            ("A", "v2"),
            ("B", "v2"),
            ("C", "v3"),
            ("D", "v3"),
        ]
    )


def random_bipartite(rng: random.Random, nu: int, nv: int, p: float) -> BipartiteGraph:
    """Erdos-Renyi style bipartite graph; isolated-side vertices may drop
    out since construction goes through an edge list."""
    edges = [
        (f"u{i}", f"v{j}")
        for i in range(nu)
        for j in range(nv)
        if rng.random() < p
    ]
    if not edges:
        edges = [("u0", "v0")]
    return BipartiteGraph.from_edges(edges)


def random_graph_corpus(
    count: int = 50, max_side: int = 15, seed: int = 20260809
) -> list[BipartiteGraph]:
    """The seeded random-graph corpus used across oracle checks."""
    rng = random.Random(seed)
    graphs = []
    probabilities = (0.2, 0.4, 0.6)
    for i in range(count):
        nu = rng.randint(3, max_side)
        nv = rng.randint(3, max_side)
        p = probabilities[i % len(probabilities)]
        graphs.append(random_bipartite(rng, nu, nv, p))
    return graphs


# -- unipartite helpers for the baselines --------------------------------


def unipartite_adjacency(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return [sorted(set(nbrs)) for nbrs in adj]


def triangles_with_bridge_edges() -> tuple[int, list[tuple[int, int]]]:
    """Two triangles joined by one bridging edge (six vertices)."""
    return 6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]


def triangles_shared_vertex_edges() -> tuple[int, list[tuple[int, int]]]:
    """Two triangles overlapping on the middle vertex (five vertices)."""
    return 5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]


def random_unipartite(
    rng: random.Random, n: int, p: float
) -> tuple[int, list[tuple[int, int]]]:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return n, edges
