"""Automorphisms, isomorphism extension and canonical forms.

Everything here runs on one engine: colour refinement (split each colour
class by the multiset of direction-coded neighbour colours until stable)
followed by individualisation and backtracking.  The search always branches
on the smallest non-singleton cell and tries its smallest vertex first, so
witnesses are reproducible.

The engine works on :class:`Structure`, an adjacency-coded vertex-coloured
graph.  Digraphs map to structures with code 1 for an out-edge and 2 for an
in-edge; the undirected view used by the bipartite checker codes every
adjacency as 3.
"""

from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .digraph import Digraph
from .errors import NotPartialIso, VertexOutOfRange

OUT, IN, UNDIRECTED = 1, 2, 3


class Structure:
    """Vertex-coloured graph whose adjacencies carry small integer codes."""

    __slots__ = ("n", "nb", "adj", "colors")

    def __init__(self, n: int, adj: list[dict[int, int]], colors: Sequence[Hashable] | None = None):
        self.n = n
        self.adj = adj
        self.nb = [tuple(sorted(a.items())) for a in adj]
        self.colors = list(colors) if colors is not None else [0] * n

    @classmethod
    def from_digraph(cls, D: Digraph, colors=None, undirected: bool = False) -> Structure:
        adj: list[dict[int, int]] = [{} for _ in range(D.n)]
        for u, v in D.edges:
            adj[u][v] = UNDIRECTED if undirected else OUT
            adj[v][u] = UNDIRECTED if undirected else IN
        return cls(D.n, adj, colors)

    def code(self, u: int, v: int) -> int:
        return self.adj[u].get(v, 0)

    def restrict(self, verts: Sequence[int]) -> Structure:
        """Induced substructure on ``verts`` (relabelled by position)."""
        pos = {v: i for i, v in enumerate(verts)}
        adj = [{pos[w]: c for w, c in self.adj[v].items() if w in pos} for v in verts]
        return Structure(len(verts), adj, [self.colors[v] for v in verts])

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if any(self.colors[v] != self.colors[perm[v]] for v in range(self.n)):
            return False
        return all(self.adj[perm[u]].get(perm[v]) == c for u in range(self.n) for v, c in self.nb[u])


_ZERO = (0, 0, 0, 0)


class _Partition:
    """Ordered partition shared by a source and (optionally) a target structure.

    A cell is identified by its start position in the source ordering, which
    makes colours label-invariant.  Each cell holds its source members and
    the same number of target members.
    """

    __slots__ = ("cells", "cs", "ct")

    def __init__(self, cells, cs, ct):
        self.cells = cells
        self.cs = cs
        self.ct = ct

    def copy(self) -> _Partition:
        return _Partition(dict(self.cells), list(self.cs), list(self.ct))

    @classmethod
    def initial(cls, cs0: Sequence[Hashable], ct0: Sequence[Hashable] | None):
        groups_s: dict = defaultdict(list)
        for v, c in enumerate(cs0):
            groups_s[c].append(v)
        groups_t: dict = defaultdict(list)
        if ct0 is not None:
            for v, c in enumerate(ct0):
                groups_t[c].append(v)
            if {k: len(g) for k, g in groups_s.items()} != {k: len(g) for k, g in groups_t.items()}:
                return None
        cells = {}
        cs = [0] * len(cs0)
        ct = [0] * (len(ct0) if ct0 is not None else 0)
        pos = 0
        for key in sorted(groups_s):
            gs, gt = groups_s[key], groups_t.get(key, [])
            cells[pos] = (gs, gt)
            for v in gs:
                cs[v] = pos
            for w in gt:
                ct[w] = pos
            pos += len(gs)
        return cls(cells, cs, ct)

    def individualize(self, v: int, w: int | None) -> int:
        x = self.cs[v]
        xs, xt = self.cells[x]
        rest_s = [u for u in xs if u != v]
        rest_t = [u for u in xt if u != w]
        self.cells[x] = ([v], [] if w is None else [w])
        self.cells[x + 1] = (rest_s, rest_t)
        for u in rest_s:
            self.cs[u] = x + 1
        for u in rest_t:
            self.ct[u] = x + 1
        return x

    def target_cell(self) -> tuple[int, list[int], list[int]] | None:
        best = None
        for start, (xs, xt) in self.cells.items():
            if len(xs) > 1 and (best is None or (len(xs), start) < (len(self.cells[best][0]), best)):
                best = start
        if best is None:
            return None
        return best, self.cells[best][0], self.cells[best][1]


def _counts(S: Structure, members: list[int]) -> dict[int, list[int]]:
    cnt: dict[int, list[int]] = {}
    for u in members:
        for v, c in S.nb[u]:
            a = cnt.get(v)
            if a is None:
                a = cnt[v] = [0, 0, 0, 0]
            a[c] += 1
    return cnt


def _refine(P: _Partition, S: Structure, T: Structure | None, queue: list[int]) -> bool:
    """Refine ``P`` to an equitable partition; False if source and target diverge."""
    queue = deque(queue)
    queued = set(queue)
    cells = P.cells
    while queue:
        w = queue.popleft()
        queued.discard(w)
        ws, wt = cells[w]
        cnt_s = _counts(S, ws)
        cnt_t = _counts(T, wt) if T is not None else {}
        affected = {P.cs[v] for v in cnt_s}
        if T is not None:
            affected |= {P.ct[v] for v in cnt_t}
        for x in sorted(affected):
            xs, xt = cells[x]
            if len(xs) == 1 and T is None:
                continue
            gs: dict = defaultdict(list)
            for v in xs:
                a = cnt_s.get(v)
                gs[_ZERO if a is None else tuple(a)].append(v)
            if T is not None:
                gt: dict = defaultdict(list)
                for v in xt:
                    a = cnt_t.get(v)
                    gt[_ZERO if a is None else tuple(a)].append(v)
                if len(gs) != len(gt) or any(len(gt.get(k, ())) != len(g) for k, g in gs.items()):
                    return False
            if len(gs) == 1:
                continue
            keys = sorted(gs)
            sizes = [len(gs[k]) for k in keys]
            largest = sizes.index(max(sizes))
            was_queued = x in queued
            pos = x
            for i, key in enumerate(keys):
                piece_s = gs[key]
                piece_t = gt[key] if T is not None else []
                cells[pos] = (piece_s, piece_t)
                for v in piece_s:
                    P.cs[v] = pos
                for v in piece_t:
                    P.ct[v] = pos
                if (was_queued or i != largest) and pos not in queued:
                    queue.append(pos)
                    queued.add(pos)
                pos += len(piece_s)
    return True


def refine(structs: Sequence[Structure], colorings: Sequence[Sequence[Hashable]]) -> list[list[int]] | None:
    """Jointly refine colourings of one or two structures to an equitable partition.

    Returns the refined colourings (shared, label-invariant colour values) or
    None when the two structures cannot be matched colour-for-colour.
    """
    S = structs[0]
    T = structs[1] if len(structs) > 1 else None
    P = _Partition.initial(colorings[0], colorings[1] if T is not None else None)
    if P is None or not _refine(P, S, T, sorted(P.cells)):
        return None
    return [P.cs, P.ct] if T is not None else [P.cs]


def refinement_invariant(S: Structure) -> tuple:
    """Isomorphism invariant: the quotient matrix of the equitable partition."""
    P = _Partition.initial(S.colors, None)
    _refine(P, S, None, sorted(P.cells))
    sig = []
    for start in sorted(P.cells):
        xs = P.cells[start][0]
        v = xs[0]
        row = tuple(sorted((c, P.cs[u]) for u, c in S.nb[v]))
        sig.append((len(xs), S.colors[v], row))
    return (S.n, tuple(sig))


def _search(S: Structure, T: Structure, P: _Partition, queue: list[int]) -> list[int] | None:
    if not _refine(P, S, T, queue):
        return None
    cell = P.target_cell()
    if cell is None:
        perm = [0] * S.n
        for xs, xt in P.cells.values():
            perm[xs[0]] = xt[0]
        for u in range(S.n):
            for v, c in S.nb[u]:
                if T.adj[perm[u]].get(perm[v]) != c:
                    return None
        return perm
    _, xs, xt = cell
    v = min(xs)
    for w in sorted(xt):
        P2 = P.copy()
        x = P2.individualize(v, w)
        found = _search(S, T, P2, [x])
        if found is not None:
            return found
    return None


def _start(S: Structure, T: Structure, cs0, ct0) -> list[int] | None:
    P = _Partition.initial(cs0, ct0)
    if P is None:
        return None
    return _search(S, T, P, sorted(P.cells))


def find_isomorphism(S: Structure, T: Structure, prescribed: Mapping[int, int] | None = None) -> list[int] | None:
    """A colour- and code-preserving bijection S -> T extending ``prescribed``."""
    if S.n != T.n:
        return None
    prescribed = prescribed or {}
    cs: list = [(0, S.colors[v]) for v in range(S.n)]
    ct: list = [(0, T.colors[v]) for v in range(T.n)]
    for i, (a, b) in enumerate(sorted(prescribed.items())):
        cs[a] = (1, i)
        ct[b] = (1, i)
    return _start(S, T, cs, ct)


def find_setwise(S: Structure, A: Sequence[int], B: Sequence[int]) -> list[int] | None:
    """An automorphism of ``S`` mapping vertex set ``A`` onto ``B``."""
    if len(A) != len(B):
        return None
    sa, sb = set(A), set(B)
    cs = [(v in sa, S.colors[v]) for v in range(S.n)]
    ct = [(v in sb, S.colors[v]) for v in range(S.n)]
    return _start(S, S, cs, ct)


def canonical_labeling(S: Structure) -> tuple[tuple, list[int]]:
    """Minimum leaf certificate over the full search tree and its labelling.

    ``labeling[v]`` is the canonical position of vertex ``v``.
    """
    best: list = [None, None]

    def walk(P: _Partition, queue: list[int]) -> None:
        _refine(P, S, None, queue)
        cell = P.target_cell()
        if cell is None:
            col = P.cs
            cert = (
                tuple(sorted((col[u], col[v], c) for u in range(S.n) for v, c in S.nb[u] if c != IN)),
                tuple(S.colors[v] for v in sorted(range(S.n), key=col.__getitem__)),
            )
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, list(col)
            return
        for v in sorted(cell[1]):
            P2 = P.copy()
            x = P2.individualize(v, None)
            walk(P2, [x])

    P = _Partition.initial(S.colors, None)
    walk(P, sorted(P.cells))
    return (S.n,) + best[0], best[1]


def canonical_form(D: Digraph) -> Digraph:
    """Canonical representative of the isomorphism class of ``D``."""
    _, lab = canonical_labeling(Structure.from_digraph(D))
    return D.relabel(lab)


def certificate(D: Digraph) -> tuple:
    return canonical_labeling(Structure.from_digraph(D))[0]


def isomorphism(D1: Digraph, D2: Digraph) -> list[int] | None:
    """A vertex map ``D1 -> D2`` that is an isomorphism, or None."""
    if D1.n != D2.n or D1.edge_count != D2.edge_count:
        return None
    return find_isomorphism(Structure.from_digraph(D1), Structure.from_digraph(D2))


def are_isomorphic(D1: Digraph, D2: Digraph) -> bool:
    return isomorphism(D1, D2) is not None


# -- partial maps and extension ------------------------------------------------


def check_partial_iso(S: Structure, phi: Mapping[int, int]) -> None:
    """Raise NotPartialIso unless ``phi`` is an isomorphism of induced substructures."""
    dom = list(phi)
    img = [phi[a] for a in dom]
    for v in dom + img:
        if not 0 <= v < S.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{S.n - 1}")
    if len(set(img)) != len(img):
        raise NotPartialIso("map is not injective")
    for a in dom:
        if S.colors[a] != S.colors[phi[a]]:
            raise NotPartialIso(f"{a} -> {phi[a]} changes colour")
        for b in dom:
            if S.code(a, b) != S.code(phi[a], phi[b]):
                raise NotPartialIso(f"pair ({a},{b}) not preserved")


def extend_structure(S: Structure, phi: Mapping[int, int]) -> list[int] | None:
    check_partial_iso(S, phi)
    return find_isomorphism(S, S, phi)


def extend_partial(D: Digraph, phi: Mapping[int, int]) -> list[int] | None:
    """An automorphism of ``D`` agreeing with ``phi`` on its domain, or None.

    Raises NotPartialIso if ``phi`` does not preserve the induced structure.
    """
    return extend_structure(Structure.from_digraph(D), dict(phi))


def same_orbit(D: Digraph, t1: Sequence[int], t2: Sequence[int]) -> bool:
    if len(t1) != len(t2):
        return False
    if len(set(t1)) != len(t1) or len(set(t2)) != len(t2):
        raise NotPartialIso("tuple entries must be distinct")
    S = Structure.from_digraph(D)
    phi = dict(zip(t1, t2))
    try:
        check_partial_iso(S, phi)
    except NotPartialIso:
        return False
    return find_isomorphism(S, S, phi) is not None


# -- automorphism groups ------------------------------------------------------


def _orbit(point: int, gens: Iterable[Sequence[int]]) -> set[int]:
    gens = list(gens)
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


@dataclass
class AutomorphismGroup:
    n: int
    generators: list[tuple[int, ...]]
    order: int
    base: list[int] = field(default_factory=list)
    basic_orbits: list[list[int]] = field(default_factory=list)
    structure: Structure | None = field(default=None, repr=False)

    def orbit(self, v: int) -> list[int]:
        return sorted(_orbit(v, self.generators))

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for v in range(self.n):
            if v not in seen:
                o = self.orbit(v)
                seen.update(o)
                out.append(o)
        return out

    def contains(self, perm: Sequence[int]) -> bool:
        """Membership: the group is the full automorphism group of its structure."""
        if len(perm) != self.n or sorted(perm) != list(range(self.n)):
            return False
        return self.structure.is_automorphism(perm)

    def elements(self):
        """Enumerate all group elements by closure; only for small groups."""
        ident = tuple(range(self.n))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for h in frontier:
                for g in self.generators:
                    k = tuple(g[h[v]] for v in range(self.n))
                    if k not in seen:
                        seen.add(k)
                        nxt.append(k)
            frontier = nxt
        return seen


def twin_classes(S: Structure) -> list[list[int]]:
    """Classes of vertices with identical colour and identical coded neighbourhoods.

    Twins are never adjacent to each other (an edge would have to be both an
    out- and an in-edge), so any permutation of a class is an automorphism.
    """
    groups: dict = defaultdict(list)
    for v in range(S.n):
        groups[(S.colors[v], S.nb[v])].append(v)
    return [g for g in groups.values() if len(g) > 1]


def twin_transpositions(S: Structure) -> list[tuple[int, ...]]:
    out = []
    for cls in twin_classes(S):
        for u, v in zip(cls, cls[1:]):
            perm = list(range(S.n))
            perm[u], perm[v] = v, u
            out.append(tuple(perm))
    return out


def structure_automorphisms(S: Structure) -> AutomorphismGroup:
    """Generators and order via a stabiliser chain of the backtracking engine."""
    base: list[int] = []
    cells: list[list[int]] = []
    P = _Partition.initial(S.colors, None)
    queue = sorted(P.cells)
    while True:
        _refine(P, S, None, queue)
        cell = P.target_cell()
        if cell is None:
            break
        members = sorted(cell[1])
        base.append(members[0])
        cells.append(members)
        queue = [P.individualize(members[0], None)]

    gens: list[tuple[int, ...]] = []
    swaps = twin_transpositions(S)
    order = 1
    basic_orbits: list[list[int]] = [[] for _ in base]
    for i in range(len(base) - 1, -1, -1):
        fixed = {b: b for b in base[:i]}
        for t in [t for t in swaps if all(t[b] == b for b in base[:i])]:
            swaps.remove(t)
            gens.append(t)
        orbit = _orbit(base[i], gens)
        for w in cells[i]:
            if w in orbit:
                continue
            phi = dict(fixed)
            phi[base[i]] = w
            g = find_isomorphism(S, S, phi)
            if g is not None:
                gens.append(tuple(g))
                orbit = _orbit(base[i], gens)
        basic_orbits[i] = sorted(orbit)
        order *= len(orbit)
    gens.reverse()
    return AutomorphismGroup(S.n, gens, order, base, basic_orbits, S)


def automorphism_group(D: Digraph) -> AutomorphismGroup:
    return structure_automorphisms(Structure.from_digraph(D))


def vertex_transitive(D: Digraph) -> bool:
    if D.n <= 1:
        return True
    degs = {(len(D.out_adj[v]), len(D.in_adj[v])) for v in range(D.n)}
    if len(degs) > 1:
        return False
    S = Structure.from_digraph(D)
    gens: list = []
    orbit = {0}
    for w in range(1, D.n):
        if w in orbit:
            continue
        g = find_isomorphism(S, S, {0: w})
        if g is None:
            return False
        gens.append(g)
        orbit = _orbit(0, gens)
    return True
