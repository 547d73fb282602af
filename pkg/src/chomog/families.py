"""Constructors for the named digraphs of the classification.

Labelling conventions (fixed so that tests can compare edge lists exactly):

* ``directed_cycle(m)``: vertices ``0..m-1``, edges ``i -> i+1 (mod m)``.
* ``cp(k)``: side A is ``0..k-1``, side B is ``k..2k-1``, ``a_i -> b_j`` for ``i != j``.
* ``y(k)``: vertex ``(i, j)`` with part ``i`` in 1..3 and index ``j`` in 0..k-1
  is ``(i - 1) * k + j``; the removed matching joins equal indices.
* ``t2_ball(r)``: vertices in breadth-first order of their normal-form words.
* ``lex_product(D, E)``: vertex ``(x, y)`` is ``x * E.n + y``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .digraph import (
    Digraph,
    VertexPartition,
    cut_vertices,
    empty,
    lex_product,
    tripartite_complement,
)
from .errors import ChomogError, TooShort, TooSmall

# Word letters: (generator, exponent) with generator 0 = a, 1 = b and exponent 1 or 2.
Word = tuple[tuple[int, int], ...]


def directed_cycle(m: int) -> Digraph:
    if m < 3:
        raise TooShort(f"directed cycle needs length >= 3, got {m}")
    return Digraph(m, [(i, (i + 1) % m) for i in range(m)])


def cp(k: int) -> Digraph:
    """Complete bipartite digraph A -> B minus the matching a_i b_i."""
    if k < 2:
        raise TooSmall(f"CP_k needs k >= 2, got {k}")
    return Digraph(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])


def y_vertex(k: int, part: int, index: int) -> int:
    return (part - 1) * k + index


def y_parts(k: int) -> VertexPartition:
    return VertexPartition(tuple(tuple(range(i * k, (i + 1) * k)) for i in range(3)))


def y(k: int) -> Digraph:
    if k < 3:
        raise TooSmall(f"Y_k needs k >= 3, got {k}")
    edges = [
        (y_vertex(k, i, j), y_vertex(k, i % 3 + 1, j2))
        for i in (1, 2, 3)
        for j in range(k)
        for j2 in range(k)
        if j != j2
    ]
    D = Digraph(3 * k, edges)
    comp = tripartite_complement(D, y_parts(k))
    assert comp.edge_count == 3 * k and all(len(comp.out_adj[v]) == 1 for v in range(3 * k))
    return D


# -- T(2) as a Cayley digraph of <a> * <b>, both of order 3 ------------------


def word_mul(w: Word, gen: int, exp: int = 1) -> Word:
    """Right multiplication of a normal-form word by ``gen**exp``."""
    if w and w[-1][0] == gen:
        e = (w[-1][1] + exp) % 3
        return w[:-1] if e == 0 else w[:-1] + ((gen, e),)
    return w + ((gen, exp % 3),) if exp % 3 else w


def word_str(w: Word) -> str:
    if not w:
        return "e"
    return "".join("ab"[g] + ("" if e == 1 else "^2") for g, e in w)


@dataclass(frozen=True)
class T2Ball:
    digraph: Digraph
    words: tuple[Word, ...]
    interior: frozenset[int]
    radius: int
    index: dict = field(hash=False, compare=False, default_factory=dict)


def t2_ball(r: int) -> T2Ball:
    """Radius-r ball around the identity of T(2), with its interior vertices.

    Edges are ``g -> g a`` and ``g -> g b``; distance is measured in the
    underlying undirected graph.
    """
    if r < 1:
        raise TooSmall(f"radius must be >= 1, got {r}")
    index: dict[Word, int] = {(): 0}
    words: list[Word] = [()]
    dist = [0]
    queue = deque([()])
    while queue:
        w = queue.popleft()
        d = dist[index[w]]
        if d == r:
            continue
        for gen in (0, 1):
            for exp in (1, 2):
                u = word_mul(w, gen, exp)
                if u not in index:
                    index[u] = len(words)
                    words.append(u)
                    dist.append(d + 1)
                    queue.append(u)
    edges = []
    for w, i in index.items():
        for gen in (0, 1):
            u = word_mul(w, gen)
            if u in index:
                edges.append((i, index[u]))
    D = Digraph(len(words), edges)
    interior = frozenset(i for i in range(len(words)) if dist[i] <= r - 1)
    return T2Ball(D, tuple(words), interior, r, index)


def t2_ball_interior_report(ball: T2Ball) -> dict:
    from .digraph import triangles_at_vertex

    cuts = cut_vertices(ball.digraph)
    return {
        v: (triangles_at_vertex(ball.digraph, v), v in cuts) for v in sorted(ball.interior)
    }


# -- the homogeneous digraph H -------------------------------------------------

# Result of search_h(): the unique digraph found by the bounded search, in
# canonical labelling.  test_families regenerates it.
H_ORDER = 8
H_EDGES = (
    (0, 5), (0, 6), (0, 7), (1, 2), (1, 3), (1, 4), (2, 0), (2, 4),
    (2, 7), (3, 0), (3, 2), (3, 6), (4, 0), (4, 3), (4, 5), (5, 1),
    (5, 3), (5, 6), (6, 1), (6, 2), (6, 7), (7, 1), (7, 4), (7, 5),
)  # fmt: skip


def h() -> Digraph:
    """Lachlan's finite homogeneous digraph with triangle neighbourhoods."""
    return Digraph(H_ORDER, H_EDGES)


def catalog_cycle(m: int, n: int) -> Digraph:
    return lex_product(directed_cycle(m), empty(n))


# -- catalog entries -----------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """A family identifier with parameters.

    ``tag`` is one of Cycle, HComposite, Y, T2Quotient, Trivial, Unknown.
    ``params`` holds (m, n), (n,), (k,) or (). A quotient of T(2) holds
    (k, A, B) when its triangles carry an a/b labelling and (k, T) otherwise.
    """

    tag: str
    params: tuple = ()

    def __post_init__(self):
        t, p = self.tag, self.params
        if t == "Cycle" and not (len(p) == 2 and p[0] >= 3 and p[1] >= 1):
            raise ChomogError(f"Cycle needs m >= 3, n >= 1: {p}")
        if t == "HComposite" and not (len(p) == 1 and p[0] >= 1):
            raise ChomogError(f"HComposite needs n >= 1: {p}")
        if t == "Y" and not (len(p) == 1 and p[0] >= 3):
            raise ChomogError(f"Y needs k >= 3: {p}")
        if t == "T2Quotient" and len(p) not in (2, 3):
            raise ChomogError(f"T2Quotient needs (k, A, B) or (k, T): {p}")
        if t not in ("Cycle", "HComposite", "Y", "T2Quotient", "Trivial", "Unknown"):
            raise ChomogError(f"unknown catalog tag {t}")

    def __str__(self) -> str:
        if self.tag == "T2Quotient":
            if len(self.params) == 2:
                k, t = self.params
                return f"T2Quotient(k={k}, T={list(t)})"
            k, a, b = self.params
            return f"T2Quotient(k={k}, A={list(a)}, B={list(b)})"
        if not self.params:
            return self.tag
        return f"{self.tag}({', '.join(map(str, self.params))})"

    def to_dict(self) -> dict:
        if self.tag == "T2Quotient":
            if len(self.params) == 2:
                return {"tag": self.tag, "k": self.params[0], "T": list(self.params[1])}
            k, a, b = self.params
            return {"tag": self.tag, "k": k, "A": list(a), "B": list(b)}
        return {"tag": self.tag, "params": list(self.params)}


def build_catalog(entry: CatalogEntry) -> Digraph:
    if entry.tag == "Cycle":
        m, n = entry.params
        return catalog_cycle(m, n)
    if entry.tag == "HComposite":
        return lex_product(h(), empty(entry.params[0]))
    if entry.tag == "Y":
        return y(entry.params[0])
    if entry.tag == "T2Quotient":
        from .quotients import QuotientSpec, TriangleSystem, quotient_digraph

        if len(entry.params) == 2:
            return quotient_digraph(TriangleSystem(entry.params[0], tuple(entry.params[1])))
        k, a, b = entry.params
        return quotient_digraph(QuotientSpec(k, tuple(a), tuple(b)))
    if entry.tag == "Trivial":
        return empty(1)
    raise ChomogError("cannot build an Unknown catalog entry")
