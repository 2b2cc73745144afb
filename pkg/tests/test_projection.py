"""Unweighted and weighted one-mode projections."""

import random
from itertools import combinations

import pytest

from bipeel import project_unweighted, project_weighted
from helpers import biclique, random_bipartite, shared_affiliation_graph


def test_shared_affiliation_triangle_plus_pendant():
    g = shared_affiliation_graph()
    gp = project_unweighted(g)
    edges = set(gp.edges())
    a, b, c, d = (g.labels_u.index(x) for x in "ABCD")
    assert edges == {
        tuple(sorted(p)) for p in [(a, b), (a, c), (b, c), (c, d)]
    }


def test_shared_affiliation_weights():
    g = shared_affiliation_graph()
    gwp = project_weighted(g)
    a, b, c, d = (g.labels_u.index(x) for x in "ABCD")

    def weight(u, x):
        return gwp.weights[u][gwp.adjacency[u].index(x)]

    assert weight(a, b) == pytest.approx(1 / 3 + 1 / 2)
    assert weight(a, c) == pytest.approx(1 / 3)
    assert weight(c, d) == pytest.approx(1 / 2)


def test_single_shared_secondary_of_degree_two():
    g = biclique(2, 1)
    gwp = project_weighted(g)
    assert gwp.weights[0] == (pytest.approx(1 / 2),)


def test_biclique_projects_to_clique():
    gp = project_unweighted(biclique(3, 3))
    assert gp.edge_count == 3
    assert all(gp.degree(u) == 2 for u in range(3))


def test_star_projects_to_clique():
    d = 7
    g = biclique(d, 1)
    gp = project_unweighted(g)
    assert gp.edge_count == d * (d - 1) // 2


def test_weighted_matches_pairwise_oracle():
    rng = random.Random(88)
    g = random_bipartite(rng, 8, 8, 0.5)
    gwp = project_weighted(g)
    neighbor_sets = [set(g.neighbors_u(u)) for u in range(g.u_count)]
    for u1, u2 in combinations(range(g.u_count), 2):
        shared = neighbor_sets[u1] & neighbor_sets[u2]
        expected = sum(1 / g.degree_v(v) for v in shared)
        if not shared:
            assert u2 not in gwp.adjacency[u1]
            continue
        got = gwp.weights[u1][gwp.adjacency[u1].index(u2)]
        assert abs(got - expected) <= 1e-12


def test_projections_share_edge_sets():
    rng = random.Random(3)
    for _ in range(10):
        g = random_bipartite(rng, rng.randint(2, 10), rng.randint(2, 10), 0.4)
        assert project_unweighted(g).adjacency == project_weighted(g).adjacency


def test_edge_count_bounded_by_clique_expansion():
    rng = random.Random(4)
    for _ in range(10):
        g = random_bipartite(rng, 9, 9, 0.5)
        gp = project_unweighted(g)
        bound = sum(
            g.degree_v(v) * (g.degree_v(v) - 1) // 2 for v in range(g.v_count)
        )
        assert gp.edge_count <= bound


def test_bound_tight_without_shared_pairs():
    # Disjoint stars: no two secondary vertices share two primaries.
    g = biclique(5, 1)
    gp = project_unweighted(g)
    assert gp.edge_count == 5 * 4 // 2


def test_negative_weight_rejected():
    from bipeel import ProjectedGraph

    with pytest.raises(ValueError):
        ProjectedGraph([[1], [0]], [[-1.0], [-1.0]])


def test_weighted_degree_requires_weights():
    gp = project_unweighted(biclique(2, 2))
    with pytest.raises(ValueError):
        gp.weighted_degree(0)
