import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from densegreedy.analysis import dense_edge_threshold
from densegreedy.errors import ArgumentError, ResourceError
from densegreedy.experiments import partition_seed
from densegreedy.graph import VertexSet, complete_graph, density, edge_count_between, edges, from_edges, generate_gnp, is_clique
from densegreedy.greedy import greedy_dense, partition_vertices
from densegreedy.oracle import (
    count_dense_subgraphs,
    find_dense_subgraph,
    max_clique_exact,
    max_density_subgraph_exact,
    merge_counts,
    merge_densest,
)

from .strategies import graphs, graphs_with_k, seeds


def _induced(g, subset):
    return edge_count_between(g, VertexSet(subset), VertexSet(subset))


def _brute_densest(g, k):
    return max(combinations(range(g.n), k), key=lambda s: _induced(g, s))


def _to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(edges(g))
    return h


# ---------- densest k-subgraph ----------
@given(graphs_with_k(max_n=10))
def test_densest_matches_brute_force(case):
    g, k = case
    # max() keeps the first maximiser in lexicographic order
    expected = _brute_densest(g, k)
    for prune in (True, False):
        result = max_density_subgraph_exact(g, k, prune=prune)
        assert result.best_set.members == expected
        assert result.best_edges == _induced(g, expected)
        assert result.best_density == result.best_edges / math.comb(k, 2)


@given(graphs_with_k(max_n=10))
def test_unpruned_search_visits_every_subset(case):
    g, k = case
    result = max_density_subgraph_exact(g, k, prune=False)
    assert result.subsets_examined == math.comb(g.n, k)
    assert result.pruned == 0


def test_pruning_cuts_the_search():
    g = generate_gnp(22, 0.5, 5)
    pruned = max_density_subgraph_exact(g, 7)
    full = max_density_subgraph_exact(g, 7, prune=False)
    assert pruned.best_set == full.best_set
    assert pruned.nodes < full.nodes
    assert pruned.pruned > 0


@given(graphs_with_k(max_n=10))
def test_densest_splits_by_first_vertex(case):
    g, k = case
    whole = max_density_subgraph_exact(g, k)
    parts = [max_density_subgraph_exact(g, k, first_vertex=v) for v in range(g.n)]
    merged = merge_densest(parts)
    assert merged.best_set == whole.best_set
    assert merged.best_edges == whole.best_edges


def test_densest_on_planted_clique():
    planted = [2, 5, 7, 11, 13]
    base = generate_gnp(16, 0.2, 1)
    g = from_edges(16, set(edges(base)) | set(combinations(planted, 2)))
    result = max_density_subgraph_exact(g, 5)
    assert result.best_density == 1.0
    assert is_clique(g, result.best_set)


def test_densest_budget_is_a_hard_limit():
    with pytest.raises(ResourceError):
        max_density_subgraph_exact(generate_gnp(30, 0.5, 0), 8, budget=100)


@pytest.mark.parametrize("k", [1, 0, 11, True])
def test_densest_rejects_bad_k(k):
    with pytest.raises(ArgumentError):
        max_density_subgraph_exact(generate_gnp(10, 0.5, 0), k)


@given(graphs_with_k(max_n=10), seeds)
def test_greedy_never_beats_the_densest_subgraph(case, seed):
    g, k = case
    trace = greedy_dense(g, partition_vertices(g.n, k, seed))
    best = max_density_subgraph_exact(g, k)
    assert trace.final_edges <= best.best_edges
    assert trace.final_density <= best.best_density


@pytest.mark.parametrize("n, k", [(24, 6), (30, 5)])
@pytest.mark.parametrize("seed", range(3))
def test_greedy_below_densest_on_random_graphs(n, k, seed):
    g = generate_gnp(n, 0.5, seed)
    trace = greedy_dense(g, partition_vertices(n, k, partition_seed(seed)))
    best = max_density_subgraph_exact(g, k)
    assert trace.final_edges <= best.best_edges
    assert trace.final_density <= best.best_density


def test_merge_needs_input():
    with pytest.raises(ArgumentError):
        merge_densest([])


# ---------- counting ----------
@given(graphs_with_k(max_n=10))
def test_count_matches_brute_force(case):
    g, k = case
    for delta in (0.0, 0.1, 0.3, 0.5, 1.0):
        t = dense_edge_threshold(k, delta)
        expected = sum(1 for s in combinations(range(g.n), k) if _induced(g, s) >= t)
        assert count_dense_subgraphs(g, k, delta) == expected
        split = merge_counts(count_dense_subgraphs(g, k, delta, first_vertex=v) for v in range(g.n))
        assert split == expected


@given(graphs_with_k(max_n=10))
def test_count_at_zero_delta_agrees_with_densest(case):
    g, k = case
    cliques = count_dense_subgraphs(g, k, 0.0)
    assert (cliques > 0) == (max_density_subgraph_exact(g, k).best_density == 1.0)


def test_count_on_complete_graph():
    assert count_dense_subgraphs(complete_graph(9), 4, 0.0) == math.comb(9, 4)


def test_count_at_full_delta_is_every_subset():
    g = generate_gnp(10, 0.5, 3)
    assert count_dense_subgraphs(g, 4, 1.0) == math.comb(10, 4)
    assert merge_counts(count_dense_subgraphs(g, 4, 1.0, first_vertex=v) for v in range(10)) == math.comb(10, 4)


def test_count_budget_checked_up_front():
    with pytest.raises(ResourceError):
        count_dense_subgraphs(generate_gnp(40, 0.5, 0), 10, 0.1, budget=10**6)
    with pytest.raises(ResourceError):
        find_dense_subgraph(generate_gnp(40, 0.5, 0), 10, 0.1, budget=10**6)


@given(graphs_with_k(max_n=10))
def test_find_dense_subgraph_is_a_witness(case):
    g, k = case
    for delta in (0.0, 0.2, 0.5):
        found = find_dense_subgraph(g, k, delta)
        if count_dense_subgraphs(g, k, delta) == 0:
            assert found is None
        else:
            assert len(found) == k
            assert _induced(g, found.members) >= dense_edge_threshold(k, delta)


# ---------- maximum clique ----------
@given(graphs())
def test_max_clique_matches_networkx(g):
    clique = max_clique_exact(g)
    assert is_clique(g, clique)
    assert len(clique) == max(len(c) for c in nx.find_cliques(_to_networkx(g)))


@pytest.mark.parametrize("seed", range(3))
def test_max_clique_on_random_graphs(seed):
    g = generate_gnp(60, 0.5, seed)
    clique = max_clique_exact(g)
    assert is_clique(g, clique)
    assert len(clique) == max(len(c) for c in nx.find_cliques(_to_networkx(g)))


@given(graphs(min_n=2, max_n=10))
def test_max_clique_is_largest_k_with_a_clique(g):
    omega = len(max_clique_exact(g))
    largest = max(k for k in range(2, g.n + 1) if count_dense_subgraphs(g, k, 0.0) > 0) if g.edge_count else 1
    assert omega == largest


def test_max_clique_limit():
    with pytest.raises(ResourceError):
        max_clique_exact(generate_gnp(40, 0.5, 0), limit=30)


def test_max_clique_edge_cases():
    assert len(max_clique_exact(from_edges(6, []))) == 1
    assert max_clique_exact(complete_graph(7)) == VertexSet(tuple(range(7)))
    assert density(complete_graph(7), max_clique_exact(complete_graph(7))).value == 1.0
