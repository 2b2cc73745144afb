"""Tip decomposition against the iterative-deletion oracle."""

import pytest

from bipeel import count_per_edge, count_per_vertex, tip_decompose
from helpers import biclique, path_graph, random_graph_corpus, twin_block_graph
from oracles import tip_numbers_oracle


def test_twin_block_tip_numbers():
    g = twin_block_graph()
    result = tip_decompose(g)
    by_label = {g.labels_u[u]: t for u, t in enumerate(result.tip_numbers)}
    assert by_label == {"A": 2, "B": 3, "C": 3, "D": 3, "E": 3, "F": 2}


def test_biclique_tip_numbers():
    result = tip_decompose(biclique(3, 3))
    assert result.tip_numbers == (6, 6, 6)


def test_butterfly_free_vertices_peel_first_at_zero():
    g = path_graph()
    result = tip_decompose(g)
    assert result.tip_numbers == (0, 0)
    assert result.peel_order == (0, 1)


def test_matches_oracle_on_random_corpus():
    for g in random_graph_corpus(50, max_side=12, seed=99):
        result = tip_decompose(g)
        assert list(result.tip_numbers) == tip_numbers_oracle(g)


def test_peel_values_nondecreasing():
    for g in random_graph_corpus(10, max_side=12, seed=7):
        result = tip_decompose(g)
        values = [result.tip_numbers[u] for u in result.peel_order]
        assert values == sorted(values)


def test_tip_bounded_by_initial_count():
    for g in random_graph_corpus(10, max_side=12, seed=8):
        result = tip_decompose(g)
        assert all(
            t <= b for t, b in zip(result.tip_numbers, result.initial_counts)
        )


def test_deterministic_peel_order():
    g = twin_block_graph()
    first = tip_decompose(g)
    second = tip_decompose(g)
    assert first.peel_order == second.peel_order
    assert first.tip_numbers == second.tip_numbers


def test_touch_budget():
    for g in random_graph_corpus(10, max_side=12, seed=9):
        counts = count_per_vertex(g)
        result = tip_decompose(g, counts)
        assert result.butterfly_touches <= 2 * counts.total + g.u_count


def test_inconsistent_counts_rejected():
    g = twin_block_graph()
    counts = count_per_vertex(g)
    wrong_total = type(counts)("vertex", counts.values, counts.total + 1)
    with pytest.raises(ValueError):
        tip_decompose(g, wrong_total)
    with pytest.raises(ValueError):
        tip_decompose(g, count_per_edge(g))
    other = biclique(4, 4)
    with pytest.raises(ValueError):
        tip_decompose(other, counts)
