"""Alternating-walk reachability between edges and the shape of its classes.

Two edges are related when they leave the same vertex or enter the same
vertex; the reachability classes are the connected components of that
relation.  A class is turned into a digraph with *edge-set* semantics: its
vertices are the endpoints of the class edges and its edges are exactly the
class members (chords between those endpoints from other classes are left
out).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import Digraph, Edge
from .errors import NoEdges, UnknownEdge
from .symmetry import automorphism_group


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if rx < ry:
                self.parent[ry] = rx
            else:
                self.parent[rx] = ry


@dataclass(frozen=True)
class DeltaShape:
    kind: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.params))})"


UNIVERSAL = DeltaShape("Universal")
OTHER = DeltaShape("Other")


@dataclass
class ReachabilityPartition:
    classes: list[tuple[Edge, ...]]
    universal: bool
    digraphs: list[Digraph] = field(repr=False, default_factory=list)
    vertex_maps: list[tuple[int, ...]] = field(repr=False, default_factory=list)

    def class_of(self, e: Edge) -> int:
        for i, cls in enumerate(self.classes):
            if e in cls:
                return i
        raise UnknownEdge(f"{e} is not an edge")


def _edge_digraph(edges: tuple[Edge, ...]) -> tuple[Digraph, tuple[int, ...]]:
    verts = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(verts)}
    return Digraph(len(verts), [(pos[u], pos[v]) for u, v in edges]), tuple(verts)


def reachability_classes(D: Digraph) -> ReachabilityPartition:
    if not D.edges:
        raise NoEdges("digraph has no edges")
    index = {e: i for i, e in enumerate(D.edges)}
    uf = UnionFind(len(D.edges))
    for x in range(D.n):
        # edges sharing a tail and edges sharing a head each form a clique
        outs = [index[(x, y)] for y in D.out_adj[x]]
        ins = [index[(y, x)] for y in D.in_adj[x]]
        for group in (outs, ins):
            for i in group[1:]:
                uf.union(group[0], i)
    buckets: dict[int, list[Edge]] = {}
    for e, i in index.items():
        buckets.setdefault(uf.find(i), []).append(e)
    classes = sorted(tuple(sorted(c)) for c in buckets.values())
    built = [_edge_digraph(c) for c in classes]
    return ReachabilityPartition(
        classes,
        len(classes) == 1,
        [b[0] for b in built],
        [b[1] for b in built],
    )


def reachability_digraph(D: Digraph, e: Edge) -> Digraph:
    """The digraph formed by the class of ``e`` (endpoints relabelled ascending)."""
    e = (int(e[0]), int(e[1]))
    if not D.has_edge(*e):
        raise UnknownEdge(f"{e} is not an edge of the digraph")
    part = reachability_classes(D)
    return part.digraphs[part.class_of(e)]


def is_bipartite_oriented(delta: Digraph) -> bool:
    """No vertex both sends and receives an edge inside the class."""
    return all(not (delta.out_adj[v] and delta.in_adj[v]) for v in range(delta.n))


def classify_class(delta: Digraph) -> DeltaShape:
    """Shape of one reachability digraph; recognition order is fixed."""
    if not is_bipartite_oriented(delta):
        return OTHER
    sources = [v for v in range(delta.n) if delta.out_adj[v]]
    sinks = [v for v in range(delta.n) if delta.in_adj[v]]
    a, b, m = len(sources), len(sinks), delta.edge_count
    if m == a * b:
        return DeltaShape("CompleteBipartite", (a, b))
    if (
        a == b
        and m == a * (a - 1)
        and all(len(delta.out_adj[v]) == a - 1 for v in sources)
        and all(len(delta.in_adj[v]) == a - 1 for v in sinks)
    ):
        return DeltaShape("MatchingComplement", (a,))
    degrees = [len(delta.out_adj[v]) + len(delta.in_adj[v]) for v in range(delta.n)]
    if m == delta.n and all(d == 2 for d in degrees):
        return DeltaShape("EvenCycle", (m,))
    if m == delta.n - 1:
        k = max(len(delta.out_adj[v]) for v in sources)
        l = max(len(delta.in_adj[v]) for v in sinks)
        if all(len(delta.out_adj[v]) in (1, k) for v in sources) and all(
            len(delta.in_adj[v]) in (1, l) for v in sinks
        ):
            return DeltaShape("TreeFragment", (k, l))
    return OTHER


@dataclass
class ShapeReport:
    shape: DeltaShape
    per_class: list[DeltaShape]
    bipartite: bool
    class_count: int

    @property
    def uniform(self) -> bool:
        return len(set(self.per_class)) == 1


def delta_shape_report(D: Digraph) -> ShapeReport:
    part = reachability_classes(D)
    if part.universal and not is_bipartite_oriented(part.digraphs[0]):
        return ShapeReport(UNIVERSAL, [UNIVERSAL], False, 1)
    per_class = [classify_class(d) for d in part.digraphs]
    bipartite = all(is_bipartite_oriented(d) for d in part.digraphs)
    largest = max(range(len(part.classes)), key=lambda i: (len(part.classes[i]), -i))
    return ShapeReport(per_class[largest], per_class, bipartite, len(part.classes))


def delta_shape(D: Digraph) -> DeltaShape:
    """Shape of the reachability digraphs of ``D``.

    When the classes disagree the verdict of the largest class is returned;
    :func:`delta_shape_report` exposes every per-class verdict.
    """
    return delta_shape_report(D).shape


def edge_orbit(D: Digraph, e: Edge) -> set[Edge]:
    gens = automorphism_group(D).generators
    seen = {e}
    stack = [e]
    while stack:
        u, v = stack.pop()
        for g in gens:
            f = (g[u], g[v])
            if f not in seen:
                seen.add(f)
                stack.append(f)
    return seen


def is_1_arc_transitive(D: Digraph) -> bool:
    if not D.edges:
        raise NoEdges("digraph has no edges")
    return len(edge_orbit(D, D.edges[0])) == D.edge_count
