"""Independent reference implementations used only by the tests.

Nothing here imports the refinement engine; isomorphism questions go
through networkx or plain permutation enumeration.
"""

import itertools

import networkx as nx
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import DiGraphMatcher

from chomog.digraph import Digraph


def to_nx(D: Digraph) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(range(D.n))
    G.add_edges_from(D.edges)
    return G


def nx_isomorphic(D1: Digraph, D2: Digraph) -> bool:
    return D1.n == D2.n and nx.is_isomorphic(to_nx(D1), to_nx(D2))


def nx_aut_count(D: Digraph) -> int:
    G = to_nx(D)
    return sum(1 for _ in DiGraphMatcher(G, G).isomorphisms_iter())


def brute_aut_count(D: Digraph) -> int:
    edges = set(D.edges)
    return sum(
        1 for p in itertools.permutations(range(D.n)) if all((p[u], p[v]) in edges for u, v in edges)
    )


def brute_canonical_key(n: int, edges) -> tuple:
    return min(tuple(sorted((p[u], p[v]) for u, v in edges)) for p in itertools.permutations(range(n)))


def labelled_classes(n: int) -> tuple[int, int]:
    """(all, connected) isomorphism-class counts by brute force over labelled digraphs."""
    pairs = list(itertools.combinations(range(n), 2))
    keys = set()
    conn = set()
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        edges = [(u, v) if s == 1 else (v, u) for (u, v), s in zip(pairs, states) if s]
        key = brute_canonical_key(n, edges)
        if key in keys:
            continue
        keys.add(key)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        if nx.is_connected(G):
            conn.add(key)
    return len(keys), len(conn)


def directed_triangles_on_edge(D: Digraph, u: int, v: int) -> int:
    return sum(1 for w in range(D.n) if D.has_edge(v, w) and D.has_edge(w, u))


def alternating_classes(D: Digraph) -> list[frozenset]:
    """Edge classes from explicit alternating walks, via networkx components."""
    G = nx.Graph()
    G.add_nodes_from(D.edges)
    for e, f in itertools.combinations(D.edges, 2):
        if e[0] == f[0] or e[1] == f[1]:
            G.add_edge(e, f)
    return sorted((frozenset(c) for c in nx.connected_components(G)), key=min)


@st.composite
def digraphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    states = draw(st.lists(st.sampled_from((0, 0, 1, 2)), min_size=len(pairs), max_size=len(pairs)))
    edges = [(u, v) if s == 1 else (v, u) for (u, v), s in zip(pairs, states) if s]
    return Digraph(n, edges)


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(range(n))))
