import pytest

from rdomsim import (INFINITE, TightnessParams, bfs_distances, build_graph,
                     gen_complete, gen_cycle, gen_path, gen_random_tree,
                     gen_tightness, girth, is_r_dominating,
                     neighborhood_size_oracle, subdivide,
                     tightness_dominating_set)


def test_gen_cycle():
    g = gen_cycle(7)
    assert g.vertex_count == 7 and g.edge_count == 7
    assert girth(g) == 7
    assert gen_cycle(3).edge_count == 3
    with pytest.raises(ValueError):
        gen_cycle(2)


def test_gen_path():
    assert gen_path(1).vertex_count == 1
    assert gen_path(4).edge_count == 3
    with pytest.raises(ValueError):
        gen_path(0)


def test_gen_random_tree_is_a_deterministic_tree():
    g = gen_random_tree(50, 1)
    assert g.edge_count == 49
    assert girth(g) == INFINITE
    assert g.edges() == gen_random_tree(50, 1).edges()
    assert gen_random_tree(1, 123).vertex_count == 1
    # Different seeds give different trees (overwhelmingly likely by design).
    assert g.edges() != gen_random_tree(50, 2).edges()


def test_subdivide_k4():
    g = subdivide(gen_complete(4), 3)
    assert g.vertex_count == 4 + 6 * 3
    assert girth(g) == 12


def test_subdivide_identity_and_cycle():
    c5 = gen_cycle(5)
    assert subdivide(c5, 0) == c5
    c10 = subdivide(c5, 1)
    assert c10.vertex_count == 10 and girth(c10) == 10


def test_subdivide_girth_scaling():
    base = build_graph([(0, 1), (1, 2), (2, 0), (2, 3)])
    for k in (1, 2, 4):
        assert girth(subdivide(base, k)) == 3 * (k + 1)


def test_tightness_params_validation():
    with pytest.raises(ValueError):
        TightnessParams(0, 2)
    with pytest.raises(ValueError):
        TightnessParams(1, 1)


def test_tightness_r1_f2_shape():
    tg = gen_tightness(TightnessParams(1, 2))
    g = tg.graph
    assert g.vertex_count == 8 + 16 * 2 + 16 * 4 == 104
    assert girth(g) == 12
    for x in tg.x_side:
        for y in tg.y_side:
            assert bfs_distances(g, x)[y] == 3
        assert neighborhood_size_oracle(g, x, 1) == 4
    for block in tg.pendants.values():
        assert all(g.degree(b) == 1 for b in block)


def test_tightness_r2_f2_shape():
    tg = gen_tightness(TightnessParams(2, 2))
    g = tg.graph
    assert g.vertex_count == 8 + 16 * 4 + 16 * 8 == 200
    assert girth(g) == 20 >= 4 * (2 * 2 + 1)
    for x in tg.x_side:
        for y in tg.y_side:
            assert bfs_distances(g, x)[y] == 5
    # X union Y dominates at distance 2.
    assert is_r_dominating(g, set(tg.x_side) | set(tg.y_side), 2)


def test_tightness_dominating_set_is_valid():
    for r, f in ((1, 2), (2, 2), (1, 3)):
        tg = gen_tightness(TightnessParams(r, f))
        m = tightness_dominating_set(tg)
        assert is_r_dominating(tg.graph, m, r)
        if r >= 2:
            assert m == frozenset(tg.x_side) | frozenset(tg.y_side)


def test_tightness_determinism():
    a = gen_tightness(TightnessParams(2, 2))
    b = gen_tightness(TightnessParams(2, 2))
    assert a.graph.edges() == b.graph.edges()
    assert a.paths == b.paths and a.pendants == b.pendants
