import pytest

from prismdim.errors import BadSkip, TooSmall
from prismdim.families import (
    EdgeVariant,
    FamilySpec,
    cycle,
    parse_prism_label,
    path,
    petersen,
    prism,
    prism_label,
    prism_petersen,
    wrap,
)
from prismdim.graph import all_pairs_distances, is_connected


def _layer_neighbours(g, label):
    return {g.label(u) for u in g.adjacency[g.vertex(label)] if g.label(u)[0] == label[0]}


def _ring(g, start):
    """Follow a 2-regular layer from ``start`` until it closes."""
    ring, prev, cur = [start], None, start
    while True:
        nxt = sorted(_layer_neighbours(g, cur) - {prev})[0]
        if nxt == start:
            return ring
        ring.append(nxt)
        prev, cur = cur, nxt


def test_prism_petersen_8_shape():
    g = prism_petersen(8)
    assert g.n_vertices == 24
    assert g.n_edges == 40
    assert sorted(_ring(g, "a1")) == ["a1", "a3", "a5", "a7"]
    assert sorted(_ring(g, "a2")) == ["a2", "a4", "a6", "a8"]


def test_prism_petersen_5_inner_ring_is_single_cycle():
    g = prism_petersen(5)
    assert _ring(g, "a1") == ["a1", "a3", "a5", "a2", "a4"]


def test_prism_petersen_5_a4_adjacent_to_a1_and_a2():
    g = prism_petersen(5)
    dm = all_pairs_distances(g)
    a4 = g.vertex("a4")
    assert dm[a4, g.vertex("a1")] == 1
    assert dm[a4, g.vertex("a2")] == 1


@pytest.mark.parametrize("n", range(5, 41))
def test_prism_petersen_degrees_and_connectivity(n):
    g = prism_petersen(n)
    deg = g.degrees()
    assert deg[:n] == [3] * n
    assert deg[n : 2 * n] == [4] * n
    assert deg[2 * n :] == [3] * n
    assert g.n_edges == 5 * n
    assert is_connected(g)


def test_literal_variant():
    g = prism_petersen(8, EdgeVariant.LITERAL)
    assert g.n_edges == 40
    assert g.degrees()[:8] == [2] * 8
    assert {g.label(u) for u in g.adjacency[g.vertex("a1")]} == {"b1", "b3"}
    assert is_connected(g)


def test_prism_petersen_too_small():
    with pytest.raises(TooSmall):
        prism_petersen(4)


def test_labels_round_trip():
    n = 9
    g = prism_petersen(n)
    for v in range(3 * n):
        assert g.vertex(g.label(v)) == v
        assert parse_prism_label(prism_label(v, n), n) == v
    with pytest.raises(KeyError):
        parse_prism_label("a10", n)
    with pytest.raises(KeyError):
        parse_prism_label("d1", n)


def test_wrap_never_returns_zero():
    assert [wrap(i, 5) for i in range(-1, 12)] == [4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1]


def test_cycle_path_basics():
    assert cycle(3).edges() == [(0, 1), (0, 2), (1, 2)]
    p1 = path(1)
    assert p1.n_vertices == 1 and p1.n_edges == 0
    with pytest.raises(TooSmall):
        cycle(2)
    with pytest.raises(TooSmall):
        path(0)


def _girth(g):
    best = None
    for u, v in g.edges():
        # shortest cycle through edge uv: BFS from u avoiding that edge
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            nxt = []
            for x in frontier:
                for y in g.adjacency[x]:
                    if (x, y) in ((u, v), (v, u)) or y in dist:
                        continue
                    dist[y] = dist[x] + 1
                    nxt.append(y)
            frontier = nxt
        if v in dist:
            c = dist[v] + 1
            best = c if best is None else min(best, c)
    return best


def test_petersen_graph():
    g = petersen(5, 2)
    assert g.n_vertices == 10
    assert g.n_edges == 15
    assert set(g.degrees()) == {3}
    assert _girth(g) == 5


@pytest.mark.parametrize("n", range(3, 21))
def test_petersen_is_cubic(n):
    for m in range(1, (n + 1) // 2):
        g = petersen(n, m)
        assert set(g.degrees()) == {3}
        assert g.n_edges == 3 * n


@pytest.mark.parametrize("n, m", [(5, 0), (5, 3), (6, 3), (8, 4)])
def test_petersen_bad_skip(n, m):
    with pytest.raises(BadSkip):
        petersen(n, m)


def test_prism_is_circular_ladder():
    g = prism(6)
    assert g.n_vertices == 12 and g.n_edges == 18 and set(g.degrees()) == {3}


def test_family_spec():
    assert FamilySpec("prism-petersen", 6).build() == prism_petersen(6)
    assert FamilySpec("petersen", 5, 2).build() == petersen(5, 2)
    assert FamilySpec("path", 4).build() == path(4)
    with pytest.raises(ValueError):
        FamilySpec("wheel", 5)
    with pytest.raises(ValueError):
        FamilySpec("petersen", 5)
