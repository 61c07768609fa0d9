import random

import pytest

from bergecycles.connectivity import (Graph, graph_vertex_connectivity,
                                      incidence_as_graph, is_k_connected,
                                      is_two_connected,
                                      is_two_connected_graph,
                                      vertex_connectivity)
from bergecycles.constructions import (bounded_core, shared_pair_cliques,
                                       two_hub_blocks)
from bergecycles.errors import EmptyGraph
from bergecycles.hypergraph import build
from oracles import (brute_graph_connectivity, brute_incidence_connectivity,
                     random_graph, random_hypergraph)


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(a, b) for a in range(n)
                                for b in range(a + 1, n)])


def test_graph_connectivity_basics():
    assert graph_vertex_connectivity(cycle_graph(5)) [0] == 2
    value, sep = graph_vertex_connectivity(complete_graph(4))
    assert value == 3 and sep is None
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    value, sep = graph_vertex_connectivity(path)
    assert value == 1 and sep == (1,)
    two = Graph.from_edges(4, [(0, 1)])
    assert graph_vertex_connectivity(two) == (0, ())
    with pytest.raises(EmptyGraph):
        graph_vertex_connectivity(Graph(1, (frozenset(),)))


def test_two_connected_graph():
    assert is_two_connected_graph(cycle_graph(4))
    assert not is_two_connected_graph(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert not is_two_connected_graph(Graph.from_edges(2, [(0, 1)]))
    assert not is_two_connected_graph(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_single_edge_star_separator():
    h = build(3, 3, [[0, 1, 2]])
    w = is_k_connected(h, 2)
    # the edge-node is the center of a star: a one-node cut
    assert w.kind == "separator" and w.value == 1
    assert w.separator == (3,)


def test_family_connectivity():
    w = is_k_connected(shared_pair_cliques(5, 3, 3), 2)
    assert w.kind == "connected_k"
    w = is_k_connected(bounded_core(5, 3, 9), 4)
    assert w.kind == "connected_k" and w.value >= 4
    w = is_k_connected(two_hub_blocks(3, 3), 2)
    assert w.kind == "connected_k"
    assert vertex_connectivity(two_hub_blocks(3, 2).incidence_graph()) >= 2


def test_connectivity_monotone_in_k():
    h = bounded_core(5, 3, 9)
    top = vertex_connectivity(h.incidence_graph())
    for j in range(1, top + 1):
        assert is_k_connected(h, j).kind == "connected_k"
    assert is_k_connected(h, top + 1).kind == "separator"


def test_separator_disconnects():
    rng = random.Random(7)
    for _ in range(30):
        g = random_graph(rng, n_max=8)
        value, sep = graph_vertex_connectivity(g)
        if sep is not None and value > 0:
            assert len(sep) == value
            assert not g.without(sep).is_connected()


def test_graph_oracle_small():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, n_max=7)
        if g.n < 2:
            continue
        assert graph_vertex_connectivity(g)[0] == brute_graph_connectivity(g)


def test_incidence_oracle_small():
    rng = random.Random(13)
    for _ in range(40):
        h = random_hypergraph(rng, n_max=5, m_max=5, r_choices=(2, 3))
        ig = h.incidence_graph()
        assert vertex_connectivity(ig) == brute_incidence_connectivity(ig)


def test_hypergraph_two_connected_matches_witness():
    rng = random.Random(17)
    for _ in range(40):
        h = random_hypergraph(rng, n_max=6, m_max=7)
        fast = is_two_connected(h)
        full = graph_vertex_connectivity(
            incidence_as_graph(h.incidence_graph()))[0]
        assert fast == (full >= 2 and h.n + h.m >= 3)
