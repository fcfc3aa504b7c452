import math

import pytest
from hypothesis import given

from rdomsim import (INFINITE, GraphError, ball, bfs_distances, build_graph,
                     connected_components, gen_cycle, gen_random_tree, girth,
                     neighborhood_size_oracle, read_graph, write_graph)

from _support import graphs


def test_build_path_on_three_vertices():
    g = build_graph([(0, 1), (1, 2)])
    assert g.vertices == (0, 1, 2)
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.neighbors(1) == (0, 2)


def test_build_rejects_self_loop():
    with pytest.raises(GraphError):
        build_graph([(0, 0)])


def test_build_rejects_duplicate_edge_either_orientation():
    with pytest.raises(GraphError):
        build_graph([(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        build_graph([(0, 1), (0, 1)])


def test_bfs_distances_on_cycle():
    g = gen_cycle(6)
    assert bfs_distances(g, 0) == {0: 0, 1: 1, 2: 2, 3: 3, 4: 2, 5: 1}


def test_bfs_distances_restricted_to_component():
    g = build_graph([(0, 1), (2, 3)])
    assert bfs_distances(g, 0) == {0: 0, 1: 1}


def test_bfs_distances_path():
    g = build_graph([(0, 1), (1, 2), (2, 3)])
    assert bfs_distances(g, 0) == {0: 0, 1: 1, 2: 2, 3: 3}


def test_bfs_unknown_source():
    with pytest.raises(GraphError):
        bfs_distances(gen_cycle(3), 99)


def test_neighborhood_size_on_long_cycle():
    g = gen_cycle(11)
    assert all(neighborhood_size_oracle(g, v, 2) == 4 for v in g.vertices)


def test_neighborhood_size_star_center():
    star = build_graph([(5, leaf) for leaf in range(5)])
    assert neighborhood_size_oracle(star, 5, 1) == 5
    assert neighborhood_size_oracle(star, 0, 1) == 1


def test_girth_cycles_and_trees():
    assert girth(gen_cycle(9)) == 9
    for n in range(3, 12):
        assert girth(gen_cycle(n)) == n
    assert girth(gen_random_tree(50, 1)) == INFINITE
    assert math.isinf(girth(build_graph([(0, 1)])))


def test_girth_two_cycles_takes_minimum():
    # Triangle and C_5 sharing nothing.
    g = build_graph([(0, 1), (1, 2), (2, 0),
                     (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)])
    assert girth(g) == 3


def test_connected_components():
    assert connected_components(gen_cycle(5)) == [(0, 1, 2, 3, 4)]
    g = build_graph([(0, 1), (2, 3)])
    assert connected_components(g) == [(0, 1), (2, 3)]
    assert connected_components(build_graph([])) == []


def test_graph_roundtrip_through_text_format(tmp_path):
    g = gen_random_tree(30, 7)
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g


def test_read_graph_rejects_out_of_range(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 1\n0 5\n")
    with pytest.raises(GraphError):
        read_graph(path)


@given(graphs())
def test_bfs_distance_symmetry(g):
    for u in g.vertices:
        du = bfs_distances(g, u)
        for v, d in du.items():
            assert bfs_distances(g, v)[u] == d


@given(graphs())
def test_neighborhood_oracle_matches_bfs(g):
    for v in g.vertices:
        dist = bfs_distances(g, v)
        for r in (1, 2, 3):
            expected = sum(1 for u, d in dist.items() if u != v and d <= r)
            assert neighborhood_size_oracle(g, v, r) == expected
            assert ball(g, v, r) == frozenset(
                u for u, d in dist.items() if d <= r)


@given(graphs())
def test_edges_roundtrip(g):
    assert build_graph(g.edges(), extra_vertices=g.vertices) == g
