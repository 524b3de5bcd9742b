import random
import time

import pytest

from flagspec.designs import Design
from flagspec.graphs import Graph, complete_graph, cycle_graph, graph_to_graph6, line_graph
from flagspec.isomorphism import canonical_form, design_isomorphic, is_isomorphic

from oracles import brute_isomorphic


def random_graph(n, p, rng):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < p])


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_certificate_is_graph6_of_canonical_relabeling():
    g = cycle_graph(6)
    cf = canonical_form(g)
    relabeled = g.relabel(list(cf.permutation))
    assert cf.certificate == graph_to_graph6(relabeled).encode("ascii")


def test_decision_matches_brute_force():
    rng = random.Random(2)
    for n in (3, 4, 5, 6):
        for _ in range(8):
            g = random_graph(n, rng.choice([0.3, 0.5, 0.8]), rng)
            h = shuffled(g, rng) if rng.random() < 0.5 else random_graph(
                n, rng.choice([0.3, 0.5, 0.8]), rng
            )
            assert is_isomorphic(g, h) == brute_isomorphic(g, h), (
                g.edges, h.edges,
            )


def test_small_decisions():
    assert not is_isomorphic(cycle_graph(4), complete_graph(3))
    k3_line, _ = line_graph(complete_graph(3))
    star_line, _ = line_graph(Graph(4, [(0, 1), (0, 2), (0, 3)]))
    # the classical line-graph collision: K3 and the 3-star
    assert is_isomorphic(k3_line, star_line)
    assert canonical_form(k3_line).certificate == canonical_form(star_line).certificate


def test_isomorphic_after_relabeling():
    rng = random.Random(7)
    for seed in range(5):
        g = random_graph(9, 0.4, random.Random(seed))
        assert is_isomorphic(g, shuffled(g, rng))


def test_non_isomorphic_same_degree_sequence():
    # C6 and two triangles share the degree sequence
    g = cycle_graph(6)
    h = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_isomorphic(g, h)


def test_disconnected_graphs():
    rng = random.Random(4)
    g = Graph(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
    assert is_isomorphic(g, shuffled(g, rng))
    h = Graph(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 7)])
    assert not is_isomorphic(g, h)


def test_empty_and_trivial_graphs():
    assert canonical_form(Graph(0, [])).certificate == b"?"
    assert is_isomorphic(Graph(3, []), Graph(3, []))
    assert not is_isomorphic(Graph(3, []), Graph(4, []))


def test_colored_certificates_respect_classes():
    g = cycle_graph(4)
    plain = canonical_form(g).certificate
    colored = canonical_form(g, [0, 1, 0, 1]).certificate
    assert colored != plain
    assert colored.startswith(b"2,2:")
    # classes are ordinal: renaming colors preserves the certificate
    assert colored == canonical_form(g, [5, 9, 5, 9]).certificate
    # a coloring that breaks the symmetry differently must differ
    other = canonical_form(g, [0, 0, 1, 1]).certificate
    assert colored != other
    with pytest.raises(ValueError):
        canonical_form(g, [0, 1])


def test_colored_isomorphism_blocks_cross_class_maps():
    # path 0-1-2: ends colored alike in one, differently in the other
    g = Graph(3, [(0, 1), (1, 2)])
    a = canonical_form(g, [0, 1, 0]).certificate
    b = canonical_form(g, [0, 1, 1]).certificate
    assert a != b


def test_design_isomorphism_points_to_points(catalog_designs):
    fano = catalog_designs["fano-7-3-1"]
    # develop the complementary difference set: an isomorphic fano plane
    other = Design(7, [[(x + g) % 7 for x in (0, 1, 3)] for g in range(7)])
    assert design_isomorphic(fano, other)
    assert not design_isomorphic(fano, catalog_designs["biplane-7-4-2"])


def test_design_isomorphism_detects_block_structure():
    # same parameters (7,7,3,3,1), one block swapped to break the plane
    fano = Design(7, [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6],
                      [0, 4, 5], [1, 5, 6], [0, 2, 6]])
    import flagspec.errors as errors

    broken_blocks = [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6],
                     [0, 4, 5], [1, 5, 6], [0, 2, 5]]
    with pytest.raises(errors.PairCountMismatch):
        design_isomorphic(fano, Design(7, broken_blocks))


@pytest.mark.parametrize("key", ["gamma1:biplane-16-6-2-D3", "gamma2:biplane-16-6-2-D3"])
def test_catalog_decisions_stay_inside_time_budget(
    key, gamma1_graphs, gamma2_graphs
):
    family, did = key.split(":")
    g = (gamma1_graphs if family == "gamma1" else gamma2_graphs)[did].graph
    start = time.perf_counter()
    canonical_form(g)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"{key} took {elapsed:.1f}s"


def test_permutation_field_is_inverse_free(gamma2_graphs):
    g = gamma2_graphs["biplane-7-4-2"].graph
    cf = canonical_form(g)
    assert sorted(cf.permutation) == list(range(g.n))
    assert cf.certificate == graph_to_graph6(
        g.relabel(list(cf.permutation))
    ).encode("ascii")
