from __future__ import annotations

import pytest

from palette_kit import (
    EdgeSubset,
    LoopRejected,
    MalformedInput,
    MultiGraph,
    ResourceLimit,
    connected_components,
    degree_profile,
    has_perfect_matching,
    has_spanning_even_subgraph_no_isolated,
    induced_edge_subgraph,
    is_regular,
)
from palette_kit import families as fam

from bruteforce import bf_has_perfect_matching, bf_has_spanning_even_subgraph
from conftest import random_multigraph, random_simple_graph


def test_rejects_loops():
    with pytest.raises(LoopRejected):
        MultiGraph.from_pairs(2, [(0, 0)])


def test_rejects_bad_endpoints_and_duplicate_ids():
    with pytest.raises(MalformedInput):
        MultiGraph.from_pairs(2, [(0, 5)])
    with pytest.raises(MalformedInput):
        MultiGraph(2, ((0, 0, 1), (0, 1, 0)))


def test_parallel_edges_allowed():
    g = MultiGraph.from_pairs(2, [(0, 1), (0, 1)])
    assert g.m == 2
    assert g.max_multiplicity == 2
    assert g.degrees == (2, 2)


def test_degree_profile_examples():
    assert degree_profile(fam.edgeless(3)) == (0, 0, (0, 0, 0))
    assert degree_profile(fam.path_graph(4))[:2] == (2, 1)
    assert degree_profile(fam.complete_graph(7))[:2] == (6, 6)


def test_is_regular_examples():
    assert is_regular(fam.petersen_graph()) == 3
    assert is_regular(fam.path_graph(4)) is None
    assert is_regular(fam.edgeless(5)) == 0


def test_induced_subgraph_path():
    p4 = fam.path_graph(4)
    view = induced_edge_subgraph(p4, EdgeSubset(p4, frozenset({0, 2})))
    assert view.n == 4
    assert is_regular(view) == 1
    assert view.vertex_labels == (0, 1, 2, 3)


def test_induced_subgraph_k4_inside_k7():
    k7 = fam.complete_graph(7)
    inside = frozenset(
        eid for eid, u, v in k7.edges if {u, v} <= {0, 1, 2, 3}
    )
    view = induced_edge_subgraph(k7, EdgeSubset(k7, inside))
    assert view.m == 6
    assert view.degrees == (3, 3, 3, 3)
    assert view.vertex_labels == (0, 1, 2, 3)


def test_induced_subgraph_rejects_empty():
    p4 = fam.path_graph(4)
    with pytest.raises(MalformedInput):
        induced_edge_subgraph(p4, EdgeSubset(p4, frozenset()))


def test_induced_subgraph_keeps_edge_ids():
    k4 = fam.complete_graph(4)
    view = induced_edge_subgraph(k4, EdgeSubset(k4, frozenset({2, 5})))
    assert sorted(e[0] for e in view.edges) == [2, 5]


def test_degree_sum_in_views(rng):
    for _ in range(30):
        g = random_multigraph(rng, 6, 10)
        members = frozenset(
            eid for eid, _, _ in g.edges if rng.random() < 0.6
        )
        if not members:
            continue
        view = induced_edge_subgraph(g, EdgeSubset(g, members))
        assert sum(view.degrees) == 2 * len(members)


def test_perfect_matching_examples():
    found, witness = has_perfect_matching(fam.petersen_graph())
    assert found
    assert len(witness) == 5
    assert not has_perfect_matching(fam.star(3))[0]
    assert not has_perfect_matching(fam.path_graph(3))[0]


def test_perfect_matching_witness_is_valid():
    g = fam.complete_bipartite(3, 3)
    found, witness = has_perfect_matching(g)
    assert found
    covered = set()
    for eid in witness:
        _, u, v = g.by_id[eid]
        assert u not in covered and v not in covered
        covered.update((u, v))
    assert covered == set(range(g.n))


def test_perfect_matching_against_bruteforce(rng):
    for _ in range(40):
        g = random_simple_graph(rng, rng.randrange(2, 7), 0.5)
        if g.m > 12:
            continue
        assert has_perfect_matching(g)[0] == bf_has_perfect_matching(g)


def test_even_subgraph_examples():
    found, witness = has_spanning_even_subgraph_no_isolated(fam.cycle_graph(5))
    assert found
    assert set(witness) == set(range(5))
    assert not has_spanning_even_subgraph_no_isolated(fam.star(3))[0]


def test_even_subgraph_petersen_two_factor():
    pet = fam.petersen_graph()
    found, witness = has_spanning_even_subgraph_no_isolated(pet)
    assert found
    view = induced_edge_subgraph(pet, EdgeSubset(pet, frozenset(witness)))
    assert view.n == 10
    # cubic graph: even degrees are 0 or 2, so a covering witness is a 2-factor
    assert set(view.degrees) == {2}
    comps = connected_components(view)
    assert sorted(len(c) for c in comps) == [5, 5]


def test_even_subgraph_against_bruteforce(rng):
    for _ in range(40):
        g = random_simple_graph(rng, rng.randrange(2, 7), 0.45)
        if g.m > 12:
            continue
        got, witness = has_spanning_even_subgraph_no_isolated(g)
        assert got == bf_has_spanning_even_subgraph(g)
        if got:
            view = induced_edge_subgraph(g, EdgeSubset(g, frozenset(witness)))
            assert view.n == g.n
            assert all(d >= 2 and d % 2 == 0 for d in view.degrees)


def test_even_subgraph_dimension_cap():
    g = fam.complete_graph(5)  # dimension 10 - 5 + 1 = 6
    with pytest.raises(ResourceLimit):
        has_spanning_even_subgraph_no_isolated(g, max_dimension=5)


def test_connected_components():
    g = fam.disjoint_union(fam.cycle_graph(3), fam.path_graph(2), fam.edgeless(1))
    comps = connected_components(g)
    assert sorted(len(c) for c in comps) == [1, 2, 3]
