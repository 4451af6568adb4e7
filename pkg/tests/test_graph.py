import numpy as np
import pytest
from hypothesis import given, settings

from prismdim.errors import DisconnectedGraph, SelfLoop, VertexOutOfRange
from prismdim.families import cycle, path, petersen, prism, prism_petersen
from prismdim.graph import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    closed_neighborhood,
    format_dot,
    format_edge_list,
    graph_from_edge_list,
    graph_hash,
    is_connected,
    open_neighborhood,
    parse_edge_list,
    read_edge_list,
)

from .conftest import any_graphs, connected_graphs, star
from .oracles import INF, floyd_warshall


def test_symmetric_mentions_are_deduplicated():
    g = graph_from_edge_list([(0, 1), (1, 0)], 2)
    assert g.n_edges == 1
    assert g.edges() == [(0, 1)]


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        graph_from_edge_list([(0, 0)], 1)


def test_out_of_range_endpoint_rejected():
    with pytest.raises(VertexOutOfRange):
        graph_from_edge_list([(0, 3)], 3)


def test_triangle_degrees():
    g = graph_from_edge_list([(0, 1), (1, 2), (2, 0)], 3)
    assert g.degrees() == [2, 2, 2]


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, ((1,), ()))


def test_graph_rejects_unsorted_adjacency():
    with pytest.raises(ValueError):
        Graph(3, ((2, 1), (0,), (0,)))


@pytest.mark.parametrize(
    "g, expected",
    [
        (path(3), True),
        (graph_from_edge_list([], 2), False),
        (prism_petersen(8), True),
        (graph_from_edge_list([], 1), True),
        (graph_from_edge_list([], 0), True),
    ],
)
def test_is_connected(g, expected):
    assert is_connected(g) is expected


def test_distance_examples():
    assert all_pairs_distances(cycle(4))[0, 2] == 2
    assert all_pairs_distances(path(5))[0, 4] == 4
    g = prism_petersen(5)
    dm = all_pairs_distances(g)
    b1, a1, a2, b3 = (g.vertex(x) for x in ("b1", "a1", "a2", "b3"))
    assert (dm[b1, a1], dm[b1, a2], dm[b1, b3]) == (1, 2, 2)


def test_unreachable_sentinel_and_diameter():
    dm = all_pairs_distances(graph_from_edge_list([(0, 1)], 3))
    assert dm[0, 2] == UNREACHABLE
    assert not dm.connected
    with pytest.raises(DisconnectedGraph):
        dm.diameter()
    assert all_pairs_distances(path(5)).diameter() == 4


def test_distance_matrix_is_read_only():
    dm = all_pairs_distances(path(3))
    with pytest.raises(ValueError):
        dm.dist[0, 1] = 7


def test_neighborhoods():
    s = star(3)
    assert open_neighborhood(s, 0) == {1, 2, 3}
    assert closed_neighborhood(s, 0) == {0, 1, 2, 3}
    iso = graph_from_edge_list([], 1)
    assert open_neighborhood(iso, 0) == set()
    assert closed_neighborhood(iso, 0) == {0}
    g = prism_petersen(8)
    assert {g.label(v) for v in open_neighborhood(g, g.vertex("b1"))} == {"a1", "c1", "b2", "b8"}
    with pytest.raises(VertexOutOfRange):
        open_neighborhood(s, 9)


@pytest.mark.parametrize(
    "g", [prism_petersen(8), prism_petersen(9, "literal"), petersen(7, 3), prism(6), cycle(5), path(4)]
)
def test_edges_are_exactly_distance_one(g):
    dm = all_pairs_distances(g)
    edges = set(g.edges())
    for u in range(g.n_vertices):
        for v in range(u + 1, g.n_vertices):
            assert (dm[u, v] == 1) == ((u, v) in edges)


@settings(max_examples=50, deadline=None)
@given(connected_graphs(max_n=12))
def test_bfs_matches_floyd_warshall(g):
    dm = all_pairs_distances(g)
    fw = floyd_warshall(g)
    assert dm.dist.tolist() == [[int(x) for x in row] for row in fw]


@settings(max_examples=50, deadline=None)
@given(any_graphs())
def test_distance_matrix_invariants(g):
    dm = all_pairs_distances(g)
    d = dm.dist
    assert (np.diag(d) == 0).all()
    assert (d == d.T).all()
    fw = floyd_warshall(g)
    for u in range(g.n_vertices):
        for v in range(g.n_vertices):
            assert (d[u, v] == UNREACHABLE) == (fw[u][v] == INF)
    reach = d >= 0
    n = g.n_vertices
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if reach[a, b] and reach[b, c]:
                    assert d[a, c] <= d[a, b] + d[b, c]


def test_edge_list_round_trip_and_comments():
    text = "# a comment\nn 5\n0 1\n1 2\n\n# trailing\n2 0\n"
    g = parse_edge_list(text)
    assert g.n_vertices == 5
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_infers_vertex_count(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("0 1\n3 1\n")
    assert read_edge_list(f).n_vertices == 4


@pytest.mark.parametrize("text", ["0 1 2\n", "0 1\nn 4\n", "0 -1\n", "0 x\n"])
def test_edge_list_malformed(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


def test_graph_hash_ignores_edge_order():
    a = graph_from_edge_list([(0, 1), (2, 1)], 3)
    b = graph_from_edge_list([(1, 2), (1, 0), (0, 1)], 3)
    assert graph_hash(a) == graph_hash(b)
    assert graph_hash(a) != graph_hash(graph_from_edge_list([(0, 1), (2, 1)], 4))


def test_dot_carries_labels_and_layers():
    dot = format_dot(prism_petersen(5))
    assert '[label="b3", layer="b"]' in dot
    assert dot.count(" -- ") == 25
    assert 'label="v0"' in format_dot(path(2))
