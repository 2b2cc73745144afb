"""Wing decomposition against the iterative-deletion oracle."""

import pytest

from bipeel import (
    count_per_edge,
    count_per_vertex,
    k_wing_edge_sets,
    wing_decompose,
)
from helpers import biclique, random_graph_corpus, twin_block_graph
from oracles import wing_numbers_oracle


def named_wings(g, result):
    return {
        (g.labels_u[u], g.labels_v[v]): result.wing_numbers[e]
        for e, (u, v) in enumerate(g.edges())
    }


def test_twin_block_wing_numbers():
    # Frozen from the deletion oracle: only the two bridge edges peel at 1;
    # the fringe pairs A1/A2 and F5/F6 each sit in two intact butterflies
    # and survive to level 2 with the blocks.
    g = twin_block_graph()
    values = named_wings(g, wing_decompose(g))
    for edge, value in values.items():
        assert value == (1 if edge in {("C", "4"), ("D", "3")} else 2)


def test_biclique_wing_numbers():
    result = wing_decompose(biclique(3, 3))
    assert result.wing_numbers == (4,) * 9


def test_single_butterfly_wing_numbers():
    result = wing_decompose(biclique(2, 2))
    assert result.wing_numbers == (1, 1, 1, 1)


def test_matches_oracle_on_random_corpus():
    for g in random_graph_corpus(50, max_side=12, seed=123):
        result = wing_decompose(g)
        expected = wing_numbers_oracle(g)
        got = {e: result.wing_numbers[g.edge_id(*e)] for e in expected}
        assert got == expected


def test_peel_values_nondecreasing():
    for g in random_graph_corpus(10, max_side=12, seed=321):
        result = wing_decompose(g)
        values = [result.wing_numbers[e] for e in result.peel_order]
        assert values == sorted(values)


def test_wing_bounded_by_initial_count():
    for g in random_graph_corpus(10, max_side=12, seed=5):
        result = wing_decompose(g)
        assert all(
            w <= b for w, b in zip(result.wing_numbers, result.initial_counts)
        )


def test_each_butterfly_discounted_exactly_once():
    for g in random_graph_corpus(15, max_side=12, seed=6):
        counts = count_per_edge(g)
        result = wing_decompose(g, counts)
        assert result.decrement_events == counts.total


def test_level_sets_are_nested():
    g = twin_block_graph()
    result = wing_decompose(g)
    sets = k_wing_edge_sets(result)
    assert set(sets) == {0, 1, 2}
    assert len(sets[0]) == 18
    assert sets[1] == sets[0]
    assert len(sets[2]) == 16

    def eid(lu, lv):
        return g.edge_id(g.labels_u.index(lu), g.labels_v.index(lv))

    assert sets[2] == sets[1] - {eid("C", "4"), eid("D", "3")}
    assert sets.get(3, frozenset()) == frozenset()


def test_level_sets_nested_on_corpus():
    for g in random_graph_corpus(10, max_side=10, seed=77):
        sets = k_wing_edge_sets(wing_decompose(g))
        levels = sorted(sets)
        for a, b in zip(levels, levels[1:]):
            assert sets[b] <= sets[a]


def test_level_survivors_keep_k_butterflies_inside():
    # Definition check for the edge sets, exhaustively on small graphs.
    from oracles import _edge_counts_in

    for g in random_graph_corpus(8, max_side=8, seed=42):
        result = wing_decompose(g)
        sets = k_wing_edge_sets(result)
        for k, members in sets.items():
            if k == 0 or not members:
                continue
            pairs = {g.edge_endpoints(e) for e in members}
            counts = _edge_counts_in(g, pairs)
            assert all(c >= k for c in counts.values())


def test_inconsistent_counts_rejected():
    g = twin_block_graph()
    counts = count_per_edge(g)
    with pytest.raises(ValueError):
        wing_decompose(g, count_per_vertex(g))
    broken = type(counts)("edge", counts.values[:-1] + (99,), counts.total)
    with pytest.raises(ValueError):
        wing_decompose(g, broken)


def test_deterministic_output():
    g = twin_block_graph()
    assert wing_decompose(g) == wing_decompose(g)
