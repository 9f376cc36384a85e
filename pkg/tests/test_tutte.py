"""Deletion-contraction engine: base cases, memoization, cross-checks."""

import random

import pytest

from oracles import kirchhoff_tree_count
from parklc.matroid import RankOracleMatroid, tutte_by_rank_sum
from parklc.multigraph import (
    MultiGraph,
    banana_graph,
    complete_graph,
    cycle_graph,
    enumerate_connected_multigraphs,
    path_graph,
    relabeled,
)
from parklc.polyalg import BivariatePolynomial
from parklc.tutte import spanning_tree_count, specialize, tutte_delcon


def test_base_cases():
    assert tutte_delcon(MultiGraph(1)) == BivariatePolynomial.monomial(0, 0)
    assert tutte_delcon(MultiGraph(3)) == BivariatePolynomial.monomial(0, 0)
    assert tutte_delcon(MultiGraph(2, [(0, 1)])) == BivariatePolynomial.monomial(1, 0)
    assert tutte_delcon(MultiGraph(1, [(0, 0)])) == BivariatePolynomial.monomial(0, 1)
    assert tutte_delcon(banana_graph()) == BivariatePolynomial(
        {(1, 0): 1, (0, 1): 1}
    )


def test_k4_frozen():
    expect = BivariatePolynomial(
        {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1}
    )
    assert tutte_delcon(complete_graph(4)) == expect


def test_specialize():
    t = tutte_delcon(complete_graph(4))
    assert specialize(t, pin="x").coeffs == {0: 6, 1: 6, 2: 3, 3: 1}
    tri = tutte_delcon(complete_graph(3))
    assert specialize(tri, pin="y").coeffs == {0: 1, 1: 1, 2: 1}
    with pytest.raises(ValueError):
        specialize(t, pin="z")


def test_disconnected_is_product_of_components():
    tri = complete_graph(3)
    two_tris = MultiGraph(6, list(tri.edges) + [(u + 3, v + 3) for u, v in tri.edges])
    assert tutte_delcon(two_tris) == tutte_delcon(tri) * tutte_delcon(tri)
    # an extra isolated vertex changes nothing
    padded = MultiGraph(7, two_tris.edges)
    assert tutte_delcon(padded) == tutte_delcon(two_tris)


def test_result_is_label_invariant():
    rng = random.Random(3)
    g = MultiGraph(5, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (4, 4)])
    base = tutte_delcon(g)
    for _ in range(5):
        perm = list(range(5))
        rng.shuffle(perm)
        assert tutte_delcon(relabeled(g, perm)) == base


def test_spanning_tree_counts_complete_graphs():
    # number of labeled trees on n vertices, n <= 8
    for n in range(2, 9):
        assert spanning_tree_count(complete_graph(n)) == n ** (n - 2)


def test_spanning_tree_count_matches_kirchhoff():
    graphs = [
        complete_graph(5),
        cycle_graph(6),
        banana_graph(),
        path_graph(4),
        MultiGraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (1, 3), (3, 3)]),
    ]
    for g in graphs:
        assert spanning_tree_count(g) == kirchhoff_tree_count(g), g


def test_engine_matches_rank_sum_sampled():
    corpus = enumerate_connected_multigraphs(4, 5, loops=True)
    for g in corpus:
        assert tutte_delcon(g) == tutte_by_rank_sum(RankOracleMatroid.graphic(g)), g


def test_engine_matches_rank_sum_random_larger():
    # seeded random multigraphs with up to 6 vertices and 12 edges
    rng = random.Random(1234)
    checked = 0
    while checked < 30:
        nv = rng.randint(2, 6)
        ne = rng.randint(nv - 1, 12)
        edges = []
        for _ in range(ne):
            u = rng.randrange(nv)
            v = rng.randrange(nv)
            edges.append((u, v))
        g = MultiGraph(nv, edges)
        from parklc.multigraph import is_connected

        if not is_connected(g):
            continue
        assert tutte_delcon(g) == tutte_by_rank_sum(RankOracleMatroid.graphic(g))
        checked += 1


def test_evaluation_points():
    # T(2, 2) counts all edge subsets
    for g in [complete_graph(4), banana_graph(), cycle_graph(5)]:
        assert tutte_delcon(g).evaluate(2, 2) == 2 ** len(g.edges)
