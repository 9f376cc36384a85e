"""Rank oracles, duality, and the subset-sum Tutte oracle."""

import itertools
import random

import pytest

from parklc.matroid import (
    RANK_SUM_CAP,
    RankOracleMatroid,
    _rank_sum_generic,
    dual_rank,
    graphic_rank,
    tutte_by_rank_sum,
)
from parklc.multigraph import (
    MultiGraph,
    banana_graph,
    complete_graph,
    cycle_graph,
    enumerate_connected_multigraphs,
    path_graph,
)
from parklc.polyalg import BivariatePolynomial


def test_graphic_rank_examples():
    k4 = complete_graph(4)
    assert graphic_rank(k4, range(6)) == 3
    assert graphic_rank(k4, []) == 0
    assert graphic_rank(k4, [0]) == 1
    # a loop adds nothing
    g = MultiGraph(2, [(0, 1), (1, 1)])
    assert graphic_rank(g, [0, 1]) == 1
    # parallel edges count once
    assert graphic_rank(banana_graph(), [0, 1]) == 1


def test_dual_rank_example():
    m = RankOracleMatroid.graphic(complete_graph(3))
    assert dual_rank(m, [0]) == 1
    assert dual_rank(m, []) == 0
    assert dual_rank(m, [0, 1, 2]) == 1
    assert m.dual().full_rank == 1


def test_rank_validates_ground_elements():
    m = RankOracleMatroid.graphic(complete_graph(3))
    with pytest.raises(ValueError):
        m.rank([3])


def test_rank_axioms_on_random_subsets():
    rng = random.Random(5)
    graphs = [
        complete_graph(4),
        banana_graph(),
        MultiGraph(3, [(0, 1), (0, 1), (1, 2), (2, 2)]),
        cycle_graph(5),
    ]
    matroids = []
    for g in graphs:
        m = RankOracleMatroid.graphic(g)
        matroids.extend([m, m.dual()])
    for m in matroids:
        ground = list(range(m.ground_size))
        assert m.rank([]) == 0
        for _ in range(40):
            a = frozenset(rng.sample(ground, rng.randint(0, len(ground))))
            b = frozenset(rng.sample(ground, rng.randint(0, len(ground))))
            ra, rb = m.rank(a), m.rank(b)
            # monotone under inclusion
            if a <= b:
                assert ra <= rb
            # submodular
            assert m.rank(a | b) + m.rank(a & b) <= ra + rb
            # unit increase
            extra = [e for e in ground if e not in a]
            if extra:
                e = rng.choice(extra)
                assert m.rank(a | {e}) in (ra, ra + 1)
            # bounded by cardinality
            assert 0 <= ra <= len(a)


def test_double_dual_rank_exhaustive():
    for g in [complete_graph(4), banana_graph(), MultiGraph(3, [(0, 1), (1, 2), (2, 2), (0, 1)])]:
        m = RankOracleMatroid.graphic(g)
        dd = m.dual().dual()
        size = m.ground_size
        assert size <= 12
        for mask in range(1 << size):
            s = [i for i in range(size) if mask >> i & 1]
            assert m.rank(s) == dd.rank(s)


def test_basis_complementation():
    for g in [complete_graph(4), cycle_graph(4), MultiGraph(3, [(0, 1), (0, 2), (1, 2), (0, 0)])]:
        m = RankOracleMatroid.graphic(g)
        d = m.dual()
        size = m.ground_size
        for mask in range(1 << size):
            s = frozenset(i for i in range(size) if mask >> i & 1)
            comp = frozenset(range(size)) - s
            is_basis = m.rank(s) == len(s) == m.full_rank
            comp_is_dual_basis = d.rank(comp) == len(comp) == d.full_rank
            assert is_basis == comp_is_dual_basis


def test_rank_sum_tiny_graphs():
    # single bridge -> x, single loop -> y
    assert tutte_by_rank_sum(RankOracleMatroid.graphic(MultiGraph(2, [(0, 1)]))) == (
        BivariatePolynomial.monomial(1, 0)
    )
    assert tutte_by_rank_sum(RankOracleMatroid.graphic(MultiGraph(1, [(0, 0)]))) == (
        BivariatePolynomial.monomial(0, 1)
    )
    # triangle
    assert tutte_by_rank_sum(RankOracleMatroid.graphic(complete_graph(3))) == (
        BivariatePolynomial({(2, 0): 1, (1, 0): 1, (0, 1): 1})
    )


def test_rank_sum_k4_frozen():
    expect = BivariatePolynomial(
        {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1}
    )
    assert tutte_by_rank_sum(RankOracleMatroid.graphic(complete_graph(4))) == expect


def test_rank_sum_kernel_matches_generic_loop():
    graphs = [
        complete_graph(4),
        banana_graph(),
        MultiGraph(3, [(0, 1), (0, 1), (1, 2), (2, 2)]),
        path_graph(4),
        MultiGraph(1, [(0, 0), (0, 0)]),
    ]
    for g in graphs:
        m = RankOracleMatroid.graphic(g)
        assert tutte_by_rank_sum(m) == _rank_sum_generic(m)


def test_rank_sum_cap():
    g = complete_graph(7)  # 21 edges, inside the cap
    assert g.edge_count <= RANK_SUM_CAP
    too_big = complete_graph(8)  # 28 edges
    with pytest.raises(ValueError):
        tutte_by_rank_sum(RankOracleMatroid.graphic(too_big))


def test_duality_swap_exhaustive_small():
    # every connected multigraph with at most 5 edges, loops included
    corpus = enumerate_connected_multigraphs(6, 5, loops=True)
    assert len(corpus) > 50
    for g in corpus:
        m = RankOracleMatroid.graphic(g)
        t = tutte_by_rank_sum(m)
        td = tutte_by_rank_sum(m.dual())
        assert td == t.swap_variables(), g


def test_duality_swap_k4_k5():
    for n in (4, 5):
        m = RankOracleMatroid.graphic(complete_graph(n))
        assert tutte_by_rank_sum(m.dual()) == tutte_by_rank_sum(m).swap_variables()


def test_describe():
    m = RankOracleMatroid.graphic(complete_graph(3))
    assert "graphic" in m.describe()
    assert "dual" in m.dual().describe()
