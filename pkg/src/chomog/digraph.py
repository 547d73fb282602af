"""Finite digraphs with an irreflexive, antisymmetric edge relation.

Vertices are the integers ``0..n-1``.  A :class:`Digraph` is immutable: it
stores the sorted edge tuple together with out- and in-adjacency views, and
every operation in this module returns a new value.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import (
    InvalidPartition,
    LoopEdge,
    NotTripartiteOriented,
    QuotientLoop,
    QuotientSymmetric,
    SymmetricPair,
    VertexOutOfRange,
)

Edge = tuple[int, int]


class Digraph:
    __slots__ = ("n", "edges", "out_adj", "in_adj", "_edge_set", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise VertexOutOfRange(f"negative vertex count {n}")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            es.add((u, v))
        for u, v in es:
            if (v, u) in es:
                raise SymmetricPair(f"both ({u},{v}) and ({v},{u}) present")
        out_adj = [[] for _ in range(n)]
        in_adj = [[] for _ in range(n)]
        ordered = tuple(sorted(es))
        for u, v in ordered:
            out_adj[u].append(v)
            in_adj[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = ordered
        self.out_adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in out_adj)
        self.in_adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in in_adj)
        self._edge_set = frozenset(es)
        self._hash = hash((n, ordered))

    # -- basic queries -------------------------------------------------
    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set or (v, u) in self._edge_set

    def code(self, u: int, v: int) -> int:
        """0 for no edge, 1 for ``u -> v``, 2 for ``v -> u``."""
        if (u, v) in self._edge_set:
            return 1
        if (v, u) in self._edge_set:
            return 2
        return 0

    def out_degree(self, x: int) -> int:
        return len(self.out_adj[x])

    def in_degree(self, x: int) -> int:
        return len(self.in_adj[x])

    def neighborhood(self, x: int) -> frozenset[int]:
        return self.out_adj[x] | self.in_adj[x]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Image of the digraph under the vertex map ``v -> perm[v]``."""
        return Digraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if sorted(perm) != list(range(self.n)):
            return False
        return all((perm[u], perm[v]) in self._edge_set for u, v in self.edges)

    # -- value semantics -------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={list(self.edges)})"

    # -- interchange -----------------------------------------------------
    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_dict(cls, data: dict) -> Digraph:
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])

    @classmethod
    def from_json(cls, text: str) -> Digraph:
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "D") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in range(self.n) if not self.out_adj[v] and not self.in_adj[v]]
        lines += [f"  {u} -> {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def make_digraph(n: int, edges: Iterable[Sequence[int]]) -> Digraph:
    return Digraph(n, edges)


def empty(n: int) -> Digraph:
    """The edgeless digraph on ``n`` vertices."""
    return Digraph(n)


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> VertexPartition:
        bs = tuple(tuple(sorted(set(b))) for b in blocks)
        if any(not b for b in bs):
            raise InvalidPartition("empty block")
        seen: set[int] = set()
        for b in bs:
            if seen.intersection(b):
                raise InvalidPartition("blocks overlap")
            seen.update(b)
        if n is not None and seen != set(range(n)):
            raise InvalidPartition(f"blocks do not cover 0..{n - 1}")
        return cls(bs)

    @classmethod
    def discrete(cls, n: int) -> VertexPartition:
        return cls(tuple((v,) for v in range(n)))

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def __len__(self) -> int:
        return len(self.blocks)


def _check_vertex(D: Digraph, x: int) -> None:
    if not 0 <= x < D.n:
        raise VertexOutOfRange(f"vertex {x} outside 0..{D.n - 1}")


def neighbors(D: Digraph, x: int) -> tuple[frozenset[int], frozenset[int], int, int]:
    """Out-set, in-set, out-degree and in-degree of ``x``."""
    _check_vertex(D, x)
    return D.out_adj[x], D.in_adj[x], len(D.out_adj[x]), len(D.in_adj[x])


def induced(D: Digraph, S: Iterable[int]) -> Digraph:
    """Induced subdigraph on ``S``, relabelled by ascending original index."""
    verts = sorted(set(S))
    for v in verts:
        _check_vertex(D, v)
    pos = {v: i for i, v in enumerate(verts)}
    return Digraph(len(verts), [(pos[u], pos[v]) for u, v in D.edges if u in pos and v in pos])


def lex_product(D: Digraph, E: Digraph) -> Digraph:
    """Lexicographic product ``D[E]``; vertex ``(x, y)`` is ``x * E.n + y``."""
    m = E.n
    edges = []
    for x, x2 in D.edges:
        for y in range(m):
            for y2 in range(m):
                edges.append((x * m + y, x2 * m + y2))
    for x in range(D.n):
        for y, y2 in E.edges:
            edges.append((x * m + y, x * m + y2))
    return Digraph(D.n * m, edges)


def tripartite_complement(D: Digraph, parts: VertexPartition) -> Digraph:
    if len(parts) != 3:
        raise InvalidPartition("tripartite complement needs exactly 3 blocks")
    VertexPartition.of(parts.blocks, D.n)
    where = parts.block_of()
    for u, v in D.edges:
        if (where[u] + 1) % 3 != where[v]:
            raise NotTripartiteOriented(f"edge ({u},{v}) does not go from V_i to V_i+1")
    allowed = [
        (u, v)
        for i in range(3)
        for u in parts.blocks[i]
        for v in parts.blocks[(i + 1) % 3]
        if not D.has_edge(u, v)
    ]
    return Digraph(D.n, allowed)


def quotient_by_partition(D: Digraph, P: VertexPartition) -> Digraph:
    """One vertex per block; rejects partitions whose quotient is not a digraph."""
    VertexPartition.of(P.blocks, D.n)
    where = P.block_of()
    edges = set()
    for u, v in D.edges:
        a, b = where[u], where[v]
        if a == b:
            raise QuotientLoop(f"edge ({u},{v}) inside block {a}")
        edges.add((a, b))
    for a, b in edges:
        if (b, a) in edges:
            raise QuotientSymmetric(f"blocks {a} and {b} joined in both directions")
    return Digraph(len(P), edges)


def connectivity(D: Digraph) -> VertexPartition:
    """Weak components, each sorted, ordered by smallest vertex."""
    seen = [False] * D.n
    blocks = []
    for s in range(D.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in D.out_adj[x] | D.in_adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        blocks.append(tuple(sorted(comp)))
    return VertexPartition(tuple(blocks))


def is_connected(D: Digraph) -> bool:
    return D.n > 0 and len(connectivity(D)) == 1


def is_connected_set(D: Digraph, S: Iterable[int]) -> bool:
    S = set(S)
    if not S:
        return False
    start = next(iter(S))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in D.out_adj[x] | D.in_adj[x]:
            if y in S and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(S)


def disjoint_union(*parts: Digraph) -> Digraph:
    edges, offset = [], 0
    for P in parts:
        edges += [(u + offset, v + offset) for u, v in P.edges]
        offset += P.n
    return Digraph(offset, edges)


def triangles_on_edge(D: Digraph, u: int, v: int) -> int:
    """Number of directed triangles ``u -> v -> w -> u`` through edge ``(u, v)``."""
    return len(D.out_adj[v] & D.in_adj[u])


def triangles_at_vertex(D: Digraph, x: int) -> int:
    return sum(triangles_on_edge(D, x, y) for y in D.out_adj[x])


def has_directed_triangle(D: Digraph) -> bool:
    return any(triangles_on_edge(D, u, v) for u, v in D.edges)


def cut_vertices(D: Digraph) -> set[int]:
    """Articulation points of the underlying undirected graph."""
    n = D.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(D.neighborhood(root))))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, x, iter(sorted(D.neighborhood(y)))))
                    advanced = True
                    break
                if y != parent:
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[x])
                if parent != root and low[x] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts
