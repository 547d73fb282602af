import pytest
from hypothesis import given

from chomog.digraph import Digraph, empty, has_directed_triangle, is_connected, lex_product, triangles_on_edge
from chomog.errors import NotBipartite, TooLarge
from chomog.families import cp, directed_cycle, h, y
from chomog.homogeneity import (
    brute_force_oracle,
    is_c_homogeneous,
    is_c_homogeneous_bipartite,
    is_homogeneous,
    rigidity_check,
    two_coloring,
)
from chomog.quotients import QuotientSpec, quotient_digraph, search_quotients
from chomog.symmetry import Structure, check_partial_iso, extend_partial, vertex_transitive
from oracles import digraphs

C3K2 = lex_product(directed_cycle(3), empty(2))
PATH3 = Digraph(3, [(0, 1), (1, 2)])


def assert_sound(D, verdict):
    assert not verdict.holds
    check_partial_iso(Structure.from_digraph(D), verdict.witness)
    assert extend_partial(D, verdict.witness) is None
    if verdict.mode == "c-homogeneous":
        assert is_connected(verdict.domain) and is_connected(verdict.codomain)


def test_homogeneous_examples():
    assert is_homogeneous(directed_cycle(4)).holds
    v = is_homogeneous(directed_cycle(5))
    assert v.witness == {0: 2, 2: 0}
    assert_sound(directed_cycle(5), v)
    assert is_homogeneous(C3K2).holds


def test_c_homogeneous_examples():
    assert is_c_homogeneous(directed_cycle(5)).holds
    assert is_c_homogeneous(y(3)).holds
    v = is_c_homogeneous(PATH3)
    assert_sound(PATH3, v)


def test_bipartite_examples():
    D = cp(4)
    assert is_c_homogeneous_bipartite(D, two_coloring(D)).holds
    for m in range(2, 6):
        C = Digraph(2 * m, [(i, (i + 1) % (2 * m)) for i in range(2 * m)])
        assert is_c_homogeneous_bipartite(C, [i % 2 for i in range(2 * m)]).holds
    P4 = Digraph(4, [(0, 1), (1, 2), (2, 3)])
    v = is_c_homogeneous_bipartite(P4, [0, 1, 0, 1])
    assert not v.holds
    with pytest.raises(NotBipartite):
        is_c_homogeneous_bipartite(P4, [0, 0, 1, 1])
    assert two_coloring(directed_cycle(3)) is None


def test_oracle_examples():
    assert brute_force_oracle(empty(2)).holds
    assert not brute_force_oracle(directed_cycle(5)).holds
    assert brute_force_oracle(directed_cycle(5), connected_only=True).holds
    with pytest.raises(TooLarge):
        brute_force_oracle(empty(7))


def test_partial_depth_is_qualified():
    v = is_homogeneous(directed_cycle(6), max_size=1)
    assert v.holds and not v.complete and v.describe() == "holds up to size 1"


def test_h_and_blowups():
    assert is_homogeneous(h()).holds
    HK2 = lex_product(h(), empty(2))
    assert is_c_homogeneous(HK2).holds
    assert_sound(HK2, is_homogeneous(HK2))


@given(digraphs(max_n=6))
def test_witnesses_are_sound(D):
    for v in (is_homogeneous(D), is_c_homogeneous(D)):
        if not v.holds:
            assert_sound(D, v)


@given(digraphs(max_n=6))
def test_homogeneous_implies_c_homogeneous(D):
    if is_homogeneous(D).holds:
        assert is_c_homogeneous(D).holds


@given(digraphs(max_n=6))
def test_c_homogeneous_structure(D):
    if not is_connected(D) or not is_c_homogeneous(D).holds:
        return
    assert vertex_transitive(D)
    if has_directed_triangle(D):
        d = D.out_degree(0)
        assert all(D.out_degree(v) == D.in_degree(v) for v in range(D.n))
        assert all(triangles_on_edge(D, u, v) == 1 or triangles_on_edge(D, u, v) >= d - 1 for u, v in D.edges)


def _circulant(n, steps):
    return Digraph(n, [(i, (i + s) % n) for i in range(n) for s in steps])


CIRCULANTS = [(7, (1, 2, 4)), (8, (1, 2)), (9, (1, 3)), (10, (1, 3)), (12, (1, 5)), (13, (1, 3, 9)), (11, (1, 3))]


@pytest.mark.parametrize("n,steps", CIRCULANTS)
def test_fast_path_agrees_with_general_checker(n, steps):
    D = _circulant(n, steps)
    assert is_c_homogeneous(D).holds == is_c_homogeneous(D, fast=False).holds


def test_fast_path_on_small_quotients():
    for spec, _ in search_quotients(12):
        D = quotient_digraph(spec)
        assert is_c_homogeneous(D).holds and is_c_homogeneous(D, fast=False).holds
    torus = QuotientSpec(9, (3, 4, 5, 6, 7, 8, 0, 1, 2), (1, 2, 0, 4, 5, 3, 7, 8, 6))
    assert rigidity_check(quotient_digraph(torus)).holds


def test_rigidity_witness_is_sound():
    D = _circulant(9, (1, 3))
    v = rigidity_check(D)
    if not v.holds:
        assert_sound(D, v)
    assert v.holds == is_c_homogeneous(D, fast=False).holds
