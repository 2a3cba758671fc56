from math import comb

import pytest

from fliplab.errors import BudgetExceededError, PreconditionError
from flipgraph import (
    degree_histogram,
    diameter,
    eccentricity,
    explore,
    max_degree,
    min_degree,
    radius_sample,
    random_walk,
    shortest_flip_path,
    signotope_graph,
    to_dot,
    to_json_dict,
    vertex_connectivity,
)
from signotopes import Signotope, all_minus, all_plus, apply_flips, count_signotopes, neighbors


@pytest.mark.parametrize("n, expected", [(3, 2), (4, 8), (5, 62)])
def test_bfs_closure_counts(signotope_graphs, n, expected):
    g = signotope_graphs[n]
    assert len(g) == expected
    assert not g.truncated
    assert len(g) == count_signotopes(n)


def test_bfs_closure_n6():
    assert len(signotope_graph(6)) == 908


@pytest.mark.slow
def test_bfs_closure_n7():
    assert len(signotope_graph(7, threads=4)) == 24698


@pytest.mark.parametrize("n", [3, 4, 5])
def test_degree_bounds(signotope_graphs, n):
    g = signotope_graphs[n]
    assert min_degree(g) == n - 2
    assert 3 * max_degree(g) <= n * (n - 2)
    assert sum(degree_histogram(g).values()) == len(g)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_degree_bounds_large(n):
    g = signotope_graph(n)
    assert min_degree(g) == n - 2
    assert 3 * max_degree(g) <= n * (n - 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_exact_connectivity(signotope_graphs, n):
    result = vertex_connectivity(signotope_graphs[n], mode="exact")
    assert result.value == n - 2


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_sampled_connectivity(n):
    g = signotope_graph(n)
    result = vertex_connectivity(g, mode="sampled", samples=200, seed=0)
    assert result.value >= n - 2
    assert result.pairs_checked == 200


def test_f4_is_an_eight_cycle(signotope_graphs):
    g = signotope_graphs[4]
    assert set(degree_histogram(g)) == {2}
    assert diameter(g).value == 4
    assert eccentricity(g, 0) == 4


def test_shortest_path_between_extremes(signotope_graphs):
    g = signotope_graphs[5]
    path = shortest_flip_path(g, all_plus(5).encode(), all_minus(5).encode())
    assert len(path) == comb(5, 3)
    assert apply_flips(all_plus(5), path) == all_minus(5)


def test_state_outside_graph(signotope_graphs):
    with pytest.raises(PreconditionError):
        signotope_graphs[4].index_of(all_plus(5).encode())


def test_budget_truncates():
    g = signotope_graph(5, limit=10)
    assert g.truncated
    assert len(g) == 10


def test_threads_do_not_change_the_graph(signotope_graphs):
    g = signotope_graph(5, threads=3)
    assert g.vertices == signotope_graphs[5].vertices
    assert g.adjacency == signotope_graphs[5].adjacency


def test_explore_rejects_unknown_family():
    with pytest.raises(PreconditionError):
        explore(all_plus(4), neighbors, Signotope.encode, family="triangulation", n=4)


def test_diameter_cap(signotope_graphs):
    with pytest.raises(BudgetExceededError):
        diameter(signotope_graphs[5], cap=10)


def test_radius_sample_brackets_diameter(signotope_graphs):
    g = signotope_graphs[5]
    sample = radius_sample(g, samples=5, seed=3)
    assert sample["max_eccentricity"] <= diameter(g).value


def test_random_walk_is_seeded():
    a = random_walk(neighbors, all_plus(5), 50, seed=11)
    b = random_walk(neighbors, all_plus(5), 50, seed=11)
    assert a == b
    assert len(a) == 51


def test_random_walk_on_graph(signotope_graphs):
    g = signotope_graphs[4]
    walk = random_walk(g, 0, 30, seed=2)
    for u, v in zip(walk, walk[1:]):
        assert u == v or v in g.adjacency[u]


def test_exports(signotope_graphs):
    g = signotope_graphs[4]
    data = to_json_dict(g)
    assert len(data["vertices"]) == 8
    assert len(data["edges"]) == 8
    dot = to_dot(g)
    assert dot.startswith('graph "signotope_4"')
    assert dot.count(" -- ") == 8
