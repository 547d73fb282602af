import networkx as nx
import pytest

from chomog.digraph import (
    Digraph,
    disjoint_union,
    empty,
    has_directed_triangle,
    induced,
    is_connected,
    lex_product,
    triangles_at_vertex,
    tripartite_complement,
)
from chomog.errors import ChomogError, SearchExhausted, TooShort, TooSmall
from chomog.families import (
    H_EDGES,
    CatalogEntry,
    build_catalog,
    cp,
    directed_cycle,
    h,
    t2_ball,
    t2_ball_interior_report,
    word_str,
    y,
    y_parts,
)
from chomog.hsearch import search_h
from chomog.symmetry import canonical_form, same_orbit, vertex_transitive
from oracles import directed_triangles_on_edge, nx_aut_count, nx_isomorphic


def test_directed_cycle():
    C3 = directed_cycle(3)
    assert all(C3.out_degree(v) == C3.in_degree(v) == 1 for v in range(3))
    with pytest.raises(TooShort):
        directed_cycle(2)
    C6 = directed_cycle(6)
    assert C6.edge_count == 6 and is_connected(C6) and not has_directed_triangle(C6)


@pytest.mark.parametrize("m", range(3, 9))
def test_directed_cycle_is_vertex_transitive(m):
    C = directed_cycle(m)
    assert C.edge_count == m
    assert all(same_orbit(C, (0,), (v,)) for v in range(m))


def test_cp():
    D = cp(3)
    assert (D.n, D.edge_count) == (6, 6)
    assert all(D.out_degree(v) + D.in_degree(v) == 2 for v in range(6))
    assert not is_connected(cp(2))
    D4 = cp(4)
    assert all(not D4.adjacent(i, 4 + i) for i in range(4))
    assert all(D4.adjacent(i, 4 + j) for i in range(4) for j in range(4) if i != j)
    with pytest.raises(TooSmall):
        cp(1)


@pytest.mark.parametrize("k", range(2, 7))
def test_cp_sides_are_oriented(k):
    D = cp(k)
    assert all(not D.in_adj[a] for a in range(k))
    assert all(not D.out_adj[b] for b in range(k, 2 * k))


def test_y_small_cases():
    Y = y(3)
    assert (Y.n, Y.edge_count) == (9, 18)
    assert all(Y.out_degree(v) == Y.in_degree(v) == 2 for v in range(9))
    comp = tripartite_complement(Y, y_parts(3))
    assert nx_isomorphic(comp, disjoint_union(*[directed_cycle(3)] * 3))
    with pytest.raises(TooSmall):
        y(2)


@pytest.mark.parametrize("k", range(3, 7))
def test_y_degrees_and_triangles(k):
    Y = y(k)
    assert all(Y.out_degree(v) == Y.in_degree(v) == k - 1 for v in range(Y.n))
    assert all(directed_triangles_on_edge(Y, u, v) == k - 2 for u, v in Y.edges)


def test_t2_ball_radius_one():
    ball = t2_ball(1)
    assert ball.digraph.n == 5
    assert [word_str(w) for w in ball.words] == ["e", "a", "a^2", "b", "b^2"]
    assert ball.interior == {0}
    assert triangles_at_vertex(ball.digraph, 0) == 2
    with pytest.raises(TooSmall):
        t2_ball(0)


@pytest.mark.parametrize("r", range(1, 5))
def test_t2_ball_interior(r):
    ball = t2_ball(r)
    report = t2_ball_interior_report(ball)
    assert report and all(v == (2, True) for v in report.values())


@pytest.mark.parametrize("r", range(1, 5))
def test_t2_ball_is_a_triangle_tree(r):
    D = t2_ball(r).digraph
    G = nx.Graph(D.edges)
    triangles = sum(triangles_at_vertex(D, v) for v in range(D.n)) // 3
    # cycle rank equals the number of triangles, and every triangle is one basis cycle
    assert G.number_of_edges() - G.number_of_nodes() + 1 == triangles
    assert all(len(c) == 3 for c in nx.cycle_basis(G))


def test_h_regenerates():
    homogeneous, candidates = search_h(12)
    assert len(homogeneous) == 1
    assert canonical_form(homogeneous[0]) == h()
    assert h().edges == H_EDGES
    assert [D.n for D in candidates] == [7, 8]


def test_h_search_reports_exhaustion():
    with pytest.raises(SearchExhausted):
        search_h(7)


def test_h_properties():
    H = h()
    c3 = directed_cycle(3)
    assert all(H.out_degree(v) == H.in_degree(v) == 3 for v in range(8))
    assert all(
        nx_isomorphic(induced(H, H.out_adj[v]), c3) and nx_isomorphic(induced(H, H.in_adj[v]), c3)
        for v in range(8)
    )
    assert vertex_transitive(H)
    assert nx_aut_count(H) == 24


def test_h_contains_dominated_triangle():
    H = h()
    found = any(
        all(H.has_edge(x, v) for v in tri)
        for x in range(8)
        for tri in ((a, b, c) for a in range(8) for b in H.out_adj[a] for c in H.out_adj[b] if H.has_edge(c, a))
        if x not in tri
    )
    assert found


def test_build_catalog_examples():
    assert build_catalog(CatalogEntry("Cycle", (3, 2))) == lex_product(directed_cycle(3), empty(2))
    assert build_catalog(CatalogEntry("Y", (3,))) == y(3)
    assert build_catalog(CatalogEntry("HComposite", (1,))) == lex_product(h(), empty(1))
    assert nx_isomorphic(build_catalog(CatalogEntry("HComposite", (1,))), h())
    assert build_catalog(CatalogEntry("Trivial")) == empty(1)
    assert build_catalog(CatalogEntry("T2Quotient", (3, (1, 2, 0), (1, 2, 0)))) == directed_cycle(3)
    with pytest.raises(ChomogError):
        build_catalog(CatalogEntry("Unknown"))


@pytest.mark.parametrize(
    "tag,params",
    [("Cycle", (2, 1)), ("Cycle", (3, 0)), ("HComposite", (0,)), ("Y", (2,)), ("Bogus", ()), ("T2Quotient", (3,))],
)
def test_catalog_entry_validation(tag, params):
    with pytest.raises(ChomogError):
        CatalogEntry(tag, params)


def test_catalog_entry_text():
    assert str(CatalogEntry("Cycle", (3, 2))) == "Cycle(3, 2)"
    assert str(CatalogEntry("T2Quotient", (3, (1, 2, 0), (1, 2, 0)))) == "T2Quotient(k=3, A=[1, 2, 0], B=[1, 2, 0])"
    assert CatalogEntry("T2Quotient", (2, (2, 3, 0, 1))).to_dict() == {"tag": "T2Quotient", "k": 2, "T": [2, 3, 0, 1]}


def test_h_is_connected_digraph():
    assert isinstance(h(), Digraph) and is_connected(h())
