import math
import random

import networkx as nx
import pytest

from flagspec.errors import SameVertex
from flagspec.graphs import (
    Graph,
    common_neighbors,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_profile,
    girth,
    graph_from_graph6,
    graph_from_json,
    graph_to_graph6,
    graph_to_json,
    line_graph,
)


def _random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def test_graph_construction_rules():
    g = Graph(4, [(1, 0), (2, 3), (0, 1)])  # duplicates and order collapse
    assert g.edges == ((0, 1), (2, 3))
    assert g.edge_count == 2
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(-1, [])


def test_neighbors_and_degrees():
    g = cycle_graph(5)
    assert g.neighbors(0) == (1, 4)
    assert g.degree(0) == 2
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)
    assert degree_profile(complete_graph(4)) == {3}


def test_relabel_and_subgraph():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    h = g.relabel([3, 2, 1, 0])
    assert h.edges == ((0, 1), (1, 2), (2, 3))
    s = g.subgraph([1, 3, 2])  # vertex i of the result is sorted(vertices)[i]
    assert s.n == 3 and s.edges == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        g.relabel([0, 1, 2])


def test_line_graph_small_cases():
    k3, order = line_graph(complete_graph(3))
    assert k3 == complete_graph(3)
    assert list(order) == [(0, 1), (0, 2), (1, 2)]
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    lk13, _ = line_graph(star)
    assert lk13 == complete_graph(3)
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    lp, _ = line_graph(path)
    assert lp.edges == ((0, 1), (1, 2))


def test_connected_components_ordering():
    g = Graph(7, [(3, 4), (0, 6), (4, 5)])
    parts = connected_components(g)
    assert parts == [[0, 6], [1], [2], [3, 4, 5]]


def test_girth_values():
    assert girth(complete_graph(4)) == 3
    assert girth(cycle_graph(9)) == 9
    assert girth(Graph(4, [(0, 1), (1, 2), (2, 3)])) == math.inf
    assert girth(Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])) == 3


def test_common_neighbors():
    g = cycle_graph(4)
    assert common_neighbors(g, 0, 2) == 2
    assert common_neighbors(g, 0, 1) == 0
    with pytest.raises(SameVertex):
        common_neighbors(g, 1, 1)


def test_json_round_trip():
    g = _random_graph(9, 0.4, random.Random(1))
    assert graph_from_json(graph_to_json(g)) == g
    with pytest.raises(ValueError):
        graph_from_json({"n": 2})


@pytest.mark.parametrize("n,p", [(0, 0.0), (1, 0.0), (5, 0.5), (62, 0.2),
                                 (63, 0.2), (100, 0.1)])
def test_graph6_against_networkx(n, p):
    g = _random_graph(n, p, random.Random(n))
    ours = graph_to_graph6(g)

    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(n))
    nx_graph.add_edges_from(g.edges)
    theirs = nx.to_graph6_bytes(nx_graph, header=False).decode("ascii").strip()
    assert ours == theirs

    # decoding our encoding and networkx's gives the same graph back
    assert graph_from_graph6(ours) == g
    back = nx.from_graph6_bytes(ours.encode("ascii"))
    assert Graph(back.number_of_nodes(), list(back.edges())) == g


def test_graph6_accepts_prefix_and_rejects_junk():
    g = cycle_graph(5)
    s = graph_to_graph6(g)
    assert graph_from_graph6(">>graph6<<" + s) == g
    with pytest.raises(ValueError):
        graph_from_graph6("")
    with pytest.raises(ValueError):
        graph_from_graph6("D" + chr(200))
    with pytest.raises(ValueError):
        graph_from_graph6("D?")  # truncated bit section


def test_graph6_extended_header_round_trip():
    g = _random_graph(96, 0.15, random.Random(96))
    s = graph_to_graph6(g)
    assert s.startswith("~")
    assert graph_from_graph6(s) == g
