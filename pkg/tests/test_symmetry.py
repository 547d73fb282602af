import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chomog.census import all_digraphs
from chomog.digraph import Digraph, empty, lex_product
from chomog.errors import NotPartialIso
from chomog.families import directed_cycle, h, y
from chomog.symmetry import (
    automorphism_group,
    canonical_form,
    certificate,
    extend_partial,
    isomorphism,
    same_orbit,
    vertex_transitive,
)
from oracles import brute_aut_count, digraphs, nx_aut_count, nx_isomorphic

C3K2 = lex_product(directed_cycle(3), empty(2))
EDGE = Digraph(2, [(0, 1)])


@pytest.mark.parametrize("m", range(3, 10))
def test_cycle_order(m):
    assert automorphism_group(directed_cycle(m)).order == m


@pytest.mark.parametrize("n", range(1, 7))
def test_empty_order(n):
    assert automorphism_group(empty(n)).order == len(list(itertools.permutations(range(n))))


def test_c3_blowup_order():
    assert automorphism_group(C3K2).order == 24 == brute_aut_count(C3K2)


@pytest.mark.parametrize("D", [h(), y(3), y(4), lex_product(h(), empty(2))], ids=["H", "Y3", "Y4", "H[K2]"])
def test_order_matches_networkx(D):
    assert automorphism_group(D).order == nx_aut_count(D)


def test_extend_partial_examples():
    assert extend_partial(directed_cycle(4), {0: 2}) == [2, 3, 0, 1]
    assert extend_partial(EDGE, {0: 1}) is None
    assert extend_partial(directed_cycle(5), {0: 0, 2: 3}) is None
    assert extend_partial(directed_cycle(5), {}) == list(range(5))


def test_extend_partial_rejects_non_isomorphisms():
    with pytest.raises(NotPartialIso):
        extend_partial(directed_cycle(5), {0: 0, 1: 2})
    with pytest.raises(NotPartialIso):
        extend_partial(directed_cycle(5), {0: 1, 1: 1})


def test_same_orbit_examples():
    assert same_orbit(directed_cycle(6), (0,), (3,))
    assert all(same_orbit(C3K2, (0,), (v,)) for v in range(6))
    assert not same_orbit(EDGE, (0,), (1,))
    assert not same_orbit(directed_cycle(5), (0, 1), (0, 2))


def test_vertex_transitive_examples():
    assert vertex_transitive(y(4))
    assert not vertex_transitive(Digraph(3, [(0, 1), (1, 2)]))
    assert vertex_transitive(empty(5))


@given(digraphs(max_n=7))
def test_generators_are_automorphisms(D):
    G = automorphism_group(D)
    edges = set(D.edges)
    for g in G.generators:
        assert {(g[u], g[v]) for u, v in D.edges} == edges


@given(digraphs(max_n=7), st.data())
def test_order_invariant_under_relabelling(D, data):
    perm = data.draw(st.permutations(range(D.n)))
    E = D.relabel(perm)
    assert automorphism_group(E).order == automorphism_group(D).order
    assert certificate(E) == certificate(D)
    assert canonical_form(E) == canonical_form(D)


@given(digraphs(max_n=6), digraphs(max_n=6))
def test_isomorphism_matches_networkx(D1, D2):
    iso = isomorphism(D1, D2)
    assert (iso is not None) == nx_isomorphic(D1, D2)
    assert (certificate(D1) == certificate(D2)) == nx_isomorphic(D1, D2)
    if iso is not None:
        assert D1.relabel(iso) == D2


@given(digraphs(max_n=7), st.data())
def test_extension_of_restricted_automorphism(D, data):
    g = data.draw(st.sampled_from(sorted(automorphism_group(D).elements())[:50]))
    dom = data.draw(st.lists(st.integers(0, D.n - 1), unique=True, max_size=D.n))
    alpha = extend_partial(D, {a: g[a] for a in dom})
    assert alpha is not None and D.relabel(alpha) == D
    assert all(alpha[a] == g[a] for a in dom)


def test_order_matches_brute_force_up_to_five_vertices():
    for n, Ds in all_digraphs(5).items():
        for D in Ds:
            assert automorphism_group(D).order == brute_aut_count(D), D
