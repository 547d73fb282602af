"""Bounded search for connected digraphs whose neighbourhoods are triangles.

Used once to recover H; the result is frozen in :mod:`chomog.families`.
Candidates are 3-in/3-out regular digraphs in which every out- and every
in-neighbourhood induces a directed triangle.  Vertex 0 is normalised to
``0 -> 1, 2, 3`` with ``1 -> 2 -> 3 -> 1`` and ``4, 5, 6 -> 0`` with
``4 -> 5 -> 6 -> 4``; vertices from 7 on are the non-neighbours of 0.
"""

from __future__ import annotations

import itertools
import logging

from .errors import SearchExhausted
from .digraph import Digraph, induced, is_connected
from .symmetry import certificate, canonical_form

log = logging.getLogger(__name__)

NONE, FWD, BWD = 0, 1, 2


def _is_cycle3(M, a, b, c) -> bool:
    arcs = [(a, b), (b, c), (c, a)]
    return all(M[u][v] == FWD for u, v in arcs) or all(M[v][u] == FWD for u, v in arcs)


def triangle_neighbourhood_digraphs(n: int):
    """Yield every labelled solution on ``n`` vertices (vertex 0 normalised)."""
    M = [[None] * n for _ in range(n)]
    for v in range(n):
        M[v][v] = NONE
    outd = [0] * n
    ind = [0] * n
    undecided = [n - 1] * n

    def assign(u, v, val):
        M[u][v] = val
        M[v][u] = NONE if val == NONE else (BWD if val == FWD else FWD)
        undecided[u] -= 1
        undecided[v] -= 1
        if val == FWD:
            outd[u] += 1
            ind[v] += 1
        elif val == BWD:
            outd[v] += 1
            ind[u] += 1

    def unassign(u, v):
        val = M[u][v]
        if val == FWD:
            outd[u] -= 1
            ind[v] -= 1
        elif val == BWD:
            outd[v] -= 1
            ind[u] -= 1
        M[u][v] = M[v][u] = None
        undecided[u] += 1
        undecided[v] += 1

    def nbhd_ok(x, direction) -> bool:
        ns = [y for y in range(n) if M[x][y] == direction]
        if len(ns) > 3:
            return False
        for a, b in itertools.combinations(ns, 2):
            if M[a][b] == NONE:
                return False
        if len(ns) == 3 and all(M[a][b] is not None for a, b in itertools.combinations(ns, 2)):
            return _is_cycle3(M, *ns)
        return True

    def vertex_ok(x) -> bool:
        if outd[x] > 3 or ind[x] > 3:
            return False
        if outd[x] + ind[x] + undecided[x] < 6:
            return False
        return nbhd_ok(x, FWD) and nbhd_ok(x, BWD)

    def consistent(u, v) -> bool:
        if not (vertex_ok(u) and vertex_ok(v)):
            return False
        for x in range(n):
            if x != u and x != v and M[x][u] in (FWD, BWD) and M[x][u] == M[x][v]:
                if not nbhd_ok(x, M[x][u]):
                    return False
        return True

    fixed = [(0, 1, FWD), (0, 2, FWD), (0, 3, FWD), (1, 2, FWD), (2, 3, FWD), (3, 1, FWD),
             (4, 0, FWD), (5, 0, FWD), (6, 0, FWD), (4, 5, FWD), (5, 6, FWD), (6, 4, FWD)]
    for u, v, val in fixed:
        assign(u, v, val)
    for v in range(4, n):
        if M[0][v] is None:
            assign(0, v, NONE)
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            if a < b and M[a][b] is None:
                assign(a, b, NONE)
    pairs = [(u, v) for u in range(1, n) for v in range(u + 1, n) if M[u][v] is None]

    def rec(i):
        if i == len(pairs):
            yield Digraph(n, [(u, v) for u in range(n) for v in range(n) if M[u][v] == FWD])
            return
        u, v = pairs[i]
        for val in (FWD, BWD, NONE):
            assign(u, v, val)
            if consistent(u, v):
                yield from rec(i + 1)
            unassign(u, v)

    yield from rec(0)


def _neighbourhoods_are_triangles(D: Digraph) -> bool:
    from .families import directed_cycle
    from .symmetry import are_isomorphic

    c3 = directed_cycle(3)
    return all(
        are_isomorphic(induced(D, D.out_adj[x]), c3) and are_isomorphic(induced(D, D.in_adj[x]), c3)
        for x in range(D.n)
    )


def search_h(max_order: int = 12):
    """Return ``(homogeneous, candidates)``: canonical digraphs found per order.

    ``candidates`` lists every connected triangle-neighbourhood digraph up to
    isomorphism; ``homogeneous`` keeps those the homogeneity checker accepts.
    """
    from .homogeneity import is_homogeneous

    candidates = []
    for n in range(7, max_order + 1):
        seen = set()
        for D in triangle_neighbourhood_digraphs(n):
            if not is_connected(D):
                continue
            cert = certificate(D)
            if cert in seen:
                continue
            seen.add(cert)
            candidates.append(canonical_form(D))
        log.info("order %d: %d candidates", n, len(seen))
    homogeneous = [D for D in candidates if _neighbourhoods_are_triangles(D) and is_homogeneous(D).holds]
    if not homogeneous:
        raise SearchExhausted(f"no homogeneous candidate up to order {max_order}")
    return homogeneous, candidates
