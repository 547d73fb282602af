"""Decide homogeneity and connected-homogeneity of finite digraphs.

The checker works level by level on vertex sets.  At level ``k`` it keeps
one representative per automorphism orbit of (connected) ``k``-subsets, and
tests two things for every new child set ``B``:

* if ``B`` induces the same digraph as an earlier representative ``R`` up to
  isomorphism, some automorphism must map ``R`` onto ``B``;
* for a new representative, every generator of the automorphism group of
  the induced subdigraph must extend to an automorphism of the whole graph.

Together these say that every isomorphism between induced (connected)
subdigraphs extends.  Children are grown by one vertex; in the connected
variant only vertices adjacent to the current set are added, which reaches
every connected induced subdigraph because a connected graph always has a
vertex whose removal leaves it connected.  Children in the same orbit under
the extended stabiliser generators are skipped.

The first failure stops the search and is reported as a witness: a partial
map that is an isomorphism between induced subdigraphs but extends to no
automorphism.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field

from .digraph import Digraph, VertexPartition, induced, is_connected, is_connected_set
from .errors import NotBipartite, TooLarge
from .symmetry import (
    Structure,
    _orbit,
    automorphism_group,
    find_isomorphism,
    find_setwise,
    refinement_invariant,
    structure_automorphisms,
    twin_classes,
)


@dataclass
class HomogeneityVerdict:
    holds: bool
    witness: dict[int, int] | None = None
    levels_checked: int = 0
    complete: bool = True
    mode: str = "homogeneous"
    domain: Digraph | None = field(default=None, repr=False)
    codomain: Digraph | None = field(default=None, repr=False)

    def __bool__(self) -> bool:
        return self.holds

    def describe(self) -> str:
        if self.holds and self.complete:
            return "holds"
        if self.holds:
            return f"holds up to size {self.levels_checked}"
        pairs = ", ".join(f"{a}->{b}" for a, b in sorted(self.witness.items()))
        return f"fails: witness {{{pairs}}} does not extend"

    def to_dict(self) -> dict:
        out = {
            "mode": self.mode,
            "holds": self.holds,
            "complete": self.complete,
            "levels_checked": self.levels_checked,
        }
        if self.witness is not None:
            out["witness"] = [[a, b] for a, b in sorted(self.witness.items())]
            out["domain"] = self.domain.to_dict()
            out["codomain"] = self.codomain.to_dict()
        return out


def _fail(S: Structure, D: Digraph | None, phi: dict[int, int], level: int, mode: str) -> HomogeneityVerdict:
    dom = sorted(phi)
    img = sorted(phi.values())
    v = HomogeneityVerdict(False, dict(sorted(phi.items())), level, True, mode)
    if D is not None:
        v.domain, v.codomain = induced(D, dom), induced(D, img)
    return v


def check_structure(
    S: Structure,
    connected_only: bool,
    max_size: int | None = None,
    mode: str = "homogeneous",
    digraph: Digraph | None = None,
) -> HomogeneityVerdict:
    n = S.n
    limit = n if max_size is None else min(n, max_size)
    twin_of = {v: i for i, cls in enumerate(twin_classes(S)) for v in cls}
    reps: list[tuple[tuple[int, ...], list]] = [((), [])]
    level = 0
    for k in range(1, limit + 1):
        buckets: dict = {}
        new_reps = []
        seen: set[tuple[int, ...]] = set()
        for A, stab in reps:
            if k == 1 or not connected_only:
                cands = [v for v in range(n) if v not in A]
            else:
                aset = set(A)
                cands = sorted({w for a in A for w in S.adj[a] if w not in aset})
            # twins outside A are swapped by automorphisms fixing A pointwise
            done: set[int] = set()
            twins_done: set[int] = set()
            for v in cands:
                if v in done:
                    continue
                t = twin_of.get(v)
                if t is not None:
                    if t in twins_done:
                        continue
                    twins_done.add(t)
                done |= _orbit(v, stab) if stab else {v}
                B = tuple(sorted(A + (v,)))
                if B in seen:
                    continue
                seen.add(B)
                sub = S.restrict(B)
                bucket = buckets.setdefault(refinement_invariant(sub), [])
                matched = False
                for R, rsub in bucket:
                    if find_setwise(S, R, B) is not None:
                        matched = True
                        break
                    iso = find_isomorphism(rsub, sub)
                    if iso is not None:
                        return _fail(S, digraph, {R[i]: B[iso[i]] for i in range(k)}, level, mode)
                if matched:
                    continue
                ext_gens = []
                for g in structure_automorphisms(sub).generators:
                    phi = {B[i]: B[g[i]] for i in range(k)}
                    ext = find_isomorphism(S, S, phi)
                    if ext is None:
                        return _fail(S, digraph, phi, level, mode)
                    ext_gens.append(ext)
                bucket.append((B, sub))
                new_reps.append((B, ext_gens))
        reps = new_reps
        if not reps:
            break
        level = k
    complete = max_size is None or max_size >= n
    return HomogeneityVerdict(True, None, level, complete, mode)


def is_homogeneous(D: Digraph, max_size: int | None = None) -> HomogeneityVerdict:
    return check_structure(Structure.from_digraph(D), False, max_size, "homogeneous", D)


def _arc_regular(D: Digraph) -> bool:
    if not D.edges or not is_connected(D):
        return False
    # tails form one orbit and heads another; both must cover every vertex
    if any(not D.out_adj[v] or not D.in_adj[v] for v in range(D.n)):
        return False
    G = automorphism_group(D)
    if G.order != D.edge_count:
        return False
    x, y = D.edges[0]
    seen = {(x, y)}
    stack = [(x, y)]
    while stack:
        u, v = stack.pop()
        for g in G.generators:
            f = (g[u], g[v])
            if f not in seen:
                seen.add(f)
                stack.append(f)
    return len(seen) == D.edge_count


def rigidity_check(D: Digraph) -> HomogeneityVerdict:
    """C-homogeneity of a connected digraph whose automorphisms act regularly on edges.

    Each isomorphism between connected induced subdigraphs agrees on one
    edge with exactly one automorphism, so it extends only if it equals that
    automorphism.  It therefore suffices that an isomorphism fixing the edge
    ``(x, y)`` fixes everything, which fails exactly when two vertices ``w``
    and ``w'`` see some connected set through ``x`` and ``y`` identically.
    Such a set exists iff ``x``, ``y`` and a common neighbour of ``w``, ``w'``
    lie in one component once every vertex that tells them apart is removed.
    """
    n = D.n
    x, y = D.edges[0]
    for w in range(n):
        for w2 in range(w + 1, n):
            blocked = {w, w2}
            common = []
            for z in range(n):
                if z in blocked:
                    continue
                cz, cz2 = D.code(z, w), D.code(z, w2)
                if cz != cz2:
                    blocked.add(z)
                elif cz:
                    common.append(z)
            if not common or x in blocked or y in blocked:
                continue
            # shortest path from {x, y} to a common neighbour avoiding blocked vertices
            parent = {x: None, y: x}
            queue = deque([x, y])
            target = None
            while queue:
                u = queue.popleft()
                if u in common:
                    target = u
                    break
                for v in D.neighborhood(u):
                    if v not in blocked and v not in parent:
                        parent[v] = u
                        queue.append(v)
            if target is None:
                continue
            S = {x, y}
            while target is not None:
                S.add(target)
                target = parent[target]
            phi = {s: s for s in S}
            phi[w] = w2
            return _fail(Structure.from_digraph(D), D, phi, len(S), "c-homogeneous")
    return HomogeneityVerdict(True, None, n, True, "c-homogeneous")


def is_c_homogeneous(D: Digraph, max_size: int | None = None, fast: bool = True) -> HomogeneityVerdict:
    """Connected-homogeneity; arc-regular digraphs take the polynomial route."""
    if fast and max_size is None and _arc_regular(D):
        return rigidity_check(D)
    return check_structure(Structure.from_digraph(D), True, max_size, "c-homogeneous", D)


def _sides(G: Digraph, bipartition) -> list[int]:
    if isinstance(bipartition, VertexPartition):
        if len(bipartition) != 2:
            raise NotBipartite("bipartition needs exactly two blocks")
        VertexPartition.of(bipartition.blocks, G.n)
        side = [0] * G.n
        for v in bipartition.blocks[1]:
            side[v] = 1
    else:
        side = [int(s) for s in bipartition]
        if len(side) != G.n or any(s not in (0, 1) for s in side):
            raise NotBipartite("side labels must be 0/1, one per vertex")
    for u, v in G.edges:
        if side[u] == side[v]:
            raise NotBipartite(f"edge ({u},{v}) inside one side")
    return side


def is_c_homogeneous_bipartite(
    G: Digraph, bipartition: VertexPartition | Sequence[int], max_size: int | None = None
) -> HomogeneityVerdict:
    """C-homogeneity of the underlying undirected graph, sides preserved."""
    side = _sides(G, bipartition)
    S = Structure.from_digraph(G, colors=side, undirected=True)
    return check_structure(S, True, max_size, "c-bipartite", G)


def two_coloring(G: Digraph) -> list[int] | None:
    """A 2-colouring of the underlying graph (smallest vertex of each component on side 0)."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.neighborhood(x):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return side


# -- independent oracle ---------------------------------------------------------

ORACLE_BOUND = 6


def brute_force_oracle(D: Digraph, connected_only: bool = False, bound: int = ORACLE_BOUND) -> HomogeneityVerdict:
    """Enumerate every isomorphism between induced subdigraphs and test it.

    Automorphisms are listed by trying all ``n!`` permutations; nothing here
    shares code with the refinement engine.
    """
    n = D.n
    if n > bound:
        raise TooLarge(f"oracle bound is {bound} vertices, got {n}")
    edges = set(D.edges)
    auts = [
        p for p in itertools.permutations(range(n)) if all((p[u], p[v]) in edges for u, v in edges)
    ]
    mode = "c-homogeneous" if connected_only else "homogeneous"

    def code(u, v):
        return 1 if (u, v) in edges else (2 if (v, u) in edges else 0)

    for k in range(1, n + 1):
        subsets = [
            A for A in itertools.combinations(range(n), k) if not connected_only or is_connected_set(D, A)
        ]
        for A in subsets:
            restrictions = {tuple(g[a] for a in A) for g in auts}
            for B in subsets:
                for img in itertools.permutations(B):
                    if all(code(A[i], A[j]) == code(img[i], img[j]) for i in range(k) for j in range(i + 1, k)):
                        if img not in restrictions:
                            phi = dict(zip(A, img))
                            v = HomogeneityVerdict(False, phi, k - 1, True, mode)
                            v.domain, v.codomain = induced(D, A), induced(D, B)
                            return v
    return HomogeneityVerdict(True, None, n, True, mode)
