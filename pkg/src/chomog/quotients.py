"""Finite quotients of the triangle tree T(2).

A quotient is described by two permutations ``A`` and ``B`` of ``0..k-1``
(zero-based image arrays), both fixed-point-free of order 3, generating a
transitive group.  Its digraph has edges ``p -> A[p]`` and ``p -> B[p]``.
Vertex ``g`` of T(2) (a word in ``a`` and ``b``) covers the point reached
from 0 by applying ``A`` for every ``a`` and ``B`` for every ``b``.

Pairs are enumerated up to simultaneous conjugation as standard coset
tables: points are numbered in order of first appearance when the cells
``(0, A), (0, B), (1, A), ...`` are filled in turn, and a table is kept only
when no other base point gives a lexicographically smaller table.

A pair labels the two triangles at every vertex consistently as an ``a``
triangle and a ``b`` triangle.  General quotients need not admit such a
labelling, so they are described by a :class:`TriangleSystem`: every vertex
``p`` carries two darts ``2p`` and ``2p + 1``, one per triangle, and ``T``
sends a dart to the dart of the next vertex along its triangle.  Every pair
is a triangle system; the converse holds exactly when the triangles can be
2-coloured so that the two triangles at each vertex differ.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .digraph import Digraph, has_directed_triangle, is_connected, triangles_at_vertex
from .errors import (
    FixedPoint,
    InvalidSpec,
    NotTransitive,
    QuotientLoop,
    QuotientSymmetric,
    SymmetricPair,
    WrongOrder,
)
from .families import t2_ball
from .homogeneity import is_c_homogeneous
from .reachability import delta_shape_report
from .symmetry import certificate, vertex_transitive

log = logging.getLogger(__name__)

Perm = tuple[int, ...]


@dataclass(frozen=True)
class QuotientSpec:
    k: int
    A: Perm
    B: Perm

    def to_dict(self) -> dict:
        return {"k": self.k, "A": list(self.A), "B": list(self.B)}

    @classmethod
    def from_dict(cls, data: dict) -> QuotientSpec:
        return cls(int(data["k"]), tuple(data["A"]), tuple(data["B"]))

    @property
    def collapsed(self) -> bool:
        """Some point has ``A[p] == B[p]``; its two out-edges coincide."""
        return any(a == b for a, b in zip(self.A, self.B))


def _orbit_of_zero(spec: QuotientSpec) -> set[int]:
    seen = {0}
    stack = [0]
    while stack:
        p = stack.pop()
        for q in (spec.A[p], spec.B[p]):
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def validate(spec: QuotientSpec) -> None:
    k = spec.k
    for name, P in (("A", spec.A), ("B", spec.B)):
        if len(P) != k or sorted(P) != list(range(k)):
            raise InvalidSpec(f"{name} is not a permutation of 0..{k - 1}")
        fixed = [p for p in range(k) if P[p] == p]
        if fixed:
            raise FixedPoint(f"{name} fixes {fixed}")
        if any(P[P[P[p]]] != p for p in range(k)):
            raise WrongOrder(f"{name} does not have order 3")
    if len(_orbit_of_zero(spec)) != k:
        raise NotTransitive("the group generated by A and B is not transitive")


def build_quotient(spec: QuotientSpec) -> Digraph:
    validate(spec)
    edges = [(p, spec.A[p]) for p in range(spec.k)] + [(p, spec.B[p]) for p in range(spec.k)]
    try:
        return Digraph(spec.k, edges)
    except SymmetricPair as exc:
        raise QuotientSymmetric(str(exc)) from exc


def check_swap_invariance(spec: QuotientSpec) -> Perm | None:
    """Smallest ``pi`` with ``pi A pi^-1 = B`` and ``pi B pi^-1 = A``, or None."""
    validate(spec)
    A, B, k = spec.A, spec.B, spec.k
    for t in range(k):
        pi = [-1] * k
        pi[0] = t
        queue = deque([0])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for src, dst in ((A, B), (B, A)):
                y, img = src[x], dst[pi[x]]
                if pi[y] == -1:
                    pi[y] = img
                    queue.append(y)
                elif pi[y] != img:
                    ok = False
                    break
        if ok and sorted(pi) == list(range(k)):
            return tuple(pi)
    return None


# -- canonical forms and enumeration -------------------------------------------------


def _relabel_from(spec: QuotientSpec, base: int) -> tuple[Perm, Perm]:
    new = {base: 0}
    order = [base]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for P in (spec.A, spec.B):
            y = P[x]
            if y not in new:
                new[y] = len(order)
                order.append(y)
    A = tuple(new[spec.A[order[j]]] for j in range(spec.k))
    B = tuple(new[spec.B[order[j]]] for j in range(spec.k))
    return A, B


def canonical_spec(spec: QuotientSpec) -> QuotientSpec:
    """Minimum standard table over all base points (simultaneous conjugacy class)."""
    validate(spec)
    A, B = min(_relabel_from(spec, p) for p in range(spec.k))
    return QuotientSpec(spec.k, A, B)


def _standard_tables(npoints: int, orders: tuple[int, ...]):
    """Standard coset tables of a free product of cyclic groups.

    ``orders[g]`` is 2 or 3; every generator acts fixed-point-freely.  Points
    are numbered in order of first appearance while the cells
    ``(0, g0), (0, g1), ..., (1, g0), ...`` are filled, so every transitive
    action with a chosen base point is produced exactly once.
    """
    ng = len(orders)
    img = [[-1] * npoints for _ in range(ng)]
    pre = [[-1] * npoints for _ in range(ng)]
    count = [1]
    trail: list = []

    def set_image(g, x, y) -> bool:
        if x == y or img[g][x] not in (-1, y) or pre[g][y] not in (-1, x):
            return False
        if img[g][x] == y:
            return True
        if orders[g] == 3 and img[g][y] == x:
            return False
        img[g][x] = y
        pre[g][y] = x
        trail.append((g, x, y))
        if orders[g] == 2:
            return set_image(g, y, x)
        # close 3-cycles: w -> x -> y forces y -> w, and x -> y -> z forces z -> x
        w = pre[g][x]
        if w != -1 and not set_image(g, y, w):
            return False
        z = img[g][y]
        if z != -1 and not set_image(g, z, x):
            return False
        return True

    def undo(mark):
        while len(trail) > mark:
            g, x, y = trail.pop()
            img[g][x] = -1
            pre[g][y] = -1

    def rec(cell):
        while cell < ng * npoints:
            if cell // ng >= count[0]:
                return
            if img[cell % ng][cell // ng] == -1:
                break
            cell += 1
        if cell == ng * npoints:
            if count[0] == npoints:
                yield tuple(tuple(row) for row in img)
            return
        x, g = cell // ng, cell % ng
        options = [y for y in range(count[0]) if pre[g][y] == -1 and y != x]
        if count[0] < npoints:
            options.append(count[0])
        for y in options:
            mark = len(trail)
            grew = y == count[0]
            if grew:
                count[0] += 1
            if set_image(g, x, y):
                yield from rec(cell + 1)
            undo(mark)
            if grew:
                count[0] -= 1

    yield from rec(0)


def _regular_tables(n: int, orders: tuple[int, ...]):
    """Standard tables of the transitive actions that are regular.

    A transitive action is regular exactly when, for every point ``p``, the
    map ``L_p`` that sends ``0`` to ``p`` and commutes with every generator
    is a well-defined permutation (left multiplication by ``p``).  The maps
    are built alongside the table and every forced cell is filled, which
    prunes the search to a handful of branches per group.
    """
    ng = len(orders)
    img = [[-1] * n for _ in range(ng)]
    pre = [[-1] * n for _ in range(ng)]
    L = [[-1] * n for _ in range(n)]
    Linv = [[-1] * n for _ in range(n)]
    count = [0]
    trail = []
    pending = []

    def set_img(g, x, y):
        if x == y:
            return False
        cur = img[g][x]
        if cur != -1:
            return cur == y
        if pre[g][y] != -1:
            return False
        if orders[g] == 3 and img[g][y] == x:
            return False
        img[g][x] = y
        pre[g][y] = x
        trail.append((0, g, x, y))
        pending.append((1, g, x, y))
        if orders[g] == 2:
            return set_img(g, y, x)
        w = pre[g][x]
        if w != -1 and not set_img(g, y, w):
            return False
        z = img[g][y]
        if z != -1 and not set_img(g, z, x):
            return False
        return True

    def set_L(p, x, u):
        cur = L[p][x]
        if cur != -1:
            return cur == u
        if Linv[p][u] != -1:
            return False
        L[p][x] = u
        Linv[p][u] = x
        trail.append((1, p, x, u))
        pending.append((0, p, x, u))
        return True

    def propagate():
        while pending:
            item = pending.pop()
            if item[0] == 0:
                _, p, x, u = item
                for g in range(ng):
                    y = img[g][x]
                    if y != -1:
                        v = img[g][u]
                        if v != -1:
                            if not set_L(p, y, v):
                                return False
                        elif L[p][y] != -1:
                            if not set_img(g, u, L[p][y]):
                                return False
                    w = pre[g][x]
                    if w != -1:
                        v = pre[g][u]
                        if v != -1:
                            if not set_L(p, w, v):
                                return False
                        elif L[p][w] != -1:
                            if not set_img(g, L[p][w], u):
                                return False
            else:
                _, g, x, y = item
                for p in range(count[0]):
                    u = L[p][x]
                    if u != -1:
                        v = img[g][u]
                        if v != -1:
                            if not set_L(p, y, v):
                                return False
                        elif L[p][y] != -1:
                            if not set_img(g, u, L[p][y]):
                                return False
                    v2 = L[p][y]
                    if v2 != -1 and u == -1:
                        w = pre[g][v2]
                        if w != -1:
                            if not set_L(p, x, w):
                                return False
                    # the new cell may also lie in the range of L_p
                    xp = Linv[p][x]
                    if xp != -1:
                        yp = img[g][xp]
                        if yp != -1:
                            if not set_L(p, yp, y):
                                return False
                        elif Linv[p][y] != -1:
                            if not set_img(g, xp, Linv[p][y]):
                                return False
                    yq = Linv[p][y]
                    if yq != -1 and xp == -1:
                        w = pre[g][yq]
                        if w != -1:
                            if not set_L(p, w, x):
                                return False
        return True

    def new_point():
        c = count[0]
        count[0] += 1
        trail.append((2, c, 0, 0))
        if not set_L(c, 0, c):
            return False
        # L_p for old p may now map into c; re-queue known cells of c
        for g in range(ng):
            if pre[g][c] != -1:
                pending.append((1, g, pre[g][c], c))
            if img[g][c] != -1:
                pending.append((1, g, c, img[g][c]))
        return True

    def undo(mark):
        while len(trail) > mark:
            kind, a, b, c = trail.pop()
            if kind == 0:
                img[a][b] = -1
                pre[a][c] = -1
            elif kind == 1:
                L[a][b] = -1
                Linv[a][c] = -1
            else:
                count[0] -= 1

    new_point()
    propagate()

    def rec(cell):
        while cell < ng * n:
            if cell // ng >= count[0]:
                return
            if img[cell % ng][cell // ng] == -1:
                break
            cell += 1
        if cell == ng * n:
            if count[0] == n and all(-1 not in row for row in L):
                yield tuple(tuple(r) for r in img)
            return
        x, g = cell // ng, cell % ng
        opts = [y for y in range(count[0]) if pre[g][y] == -1 and y != x]
        if count[0] < n:
            opts.append(count[0])
        for y in opts:
            mark = len(trail)
            pending.clear()
            ok = True
            if y == count[0]:
                ok = new_point()
            ok = ok and set_img(g, x, y) and propagate()
            if ok:
                yield from rec(cell + 1)
            pending.clear()
            undo(mark)

    yield from rec(0)


def standard_tables(k: int):
    """Yield every standard table ``(A, B)`` of a transitive fixed-point-free order-3 pair."""
    if k % 3:
        return
    for A, B in _standard_tables(k, (3, 3)):
        yield A, B


def enumerate_specs(k: int):
    """One spec per simultaneous-conjugacy class of transitive pairs on ``k`` points."""
    for A, B in standard_tables(k):
        spec = QuotientSpec(k, A, B)
        if all((A, B) <= _relabel_from(spec, p) for p in range(1, k)):
            yield spec


# -- triangle systems ------------------------------------------------------------------


@dataclass(frozen=True)
class TriangleSystem:
    """Quotient given by an order-3 permutation ``T`` of the ``2k`` darts."""

    k: int
    T: Perm

    def to_dict(self) -> dict:
        return {"k": self.k, "T": list(self.T)}

    @classmethod
    def from_dict(cls, data: dict) -> TriangleSystem:
        return cls(int(data["k"]), tuple(data["T"]))

    @property
    def collapsed(self) -> bool:
        T = self.T
        return any(T[2 * p] // 2 == T[2 * p + 1] // 2 for p in range(self.k))


def from_pair(spec: QuotientSpec) -> TriangleSystem:
    T = [0] * (2 * spec.k)
    for p in range(spec.k):
        T[2 * p] = 2 * spec.A[p]
        T[2 * p + 1] = 2 * spec.B[p] + 1
    return TriangleSystem(spec.k, tuple(T))


def validate_system(system: TriangleSystem) -> None:
    k, T = system.k, system.T
    m = 2 * k
    if len(T) != m or sorted(T) != list(range(m)):
        raise InvalidSpec(f"T is not a permutation of 0..{m - 1}")
    fixed = [d for d in range(m) if T[d] == d]
    if fixed:
        raise FixedPoint(f"T fixes {fixed}")
    if any(T[T[T[d]]] != d for d in range(m)):
        raise WrongOrder("T does not have order 3")
    loops = [d for d in range(m) if T[d] // 2 == d // 2]
    if loops:
        raise QuotientLoop(f"dart {loops[0]} returns to its own vertex")
    seen = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        for e in (d ^ 1, T[d]):
            if e not in seen:
                seen.add(e)
                stack.append(e)
    if len(seen) != m:
        raise NotTransitive("darts do not form a single orbit")


def _as_system(spec) -> TriangleSystem:
    if isinstance(spec, QuotientSpec):
        validate(spec)
        return from_pair(spec)
    validate_system(spec)
    return spec


def triangles(system: TriangleSystem) -> list[tuple[int, int, int]]:
    """Dart triples of the triangles, each starting at its smallest dart."""
    out = []
    for d in range(2 * system.k):
        if d < system.T[d] and d < system.T[system.T[d]]:
            out.append((d, system.T[d], system.T[system.T[d]]))
    return out


def to_pair(system: TriangleSystem) -> QuotientSpec | None:
    """The pair describing ``system``, or None when its triangles admit no a/b labelling.

    The triangle through dart 0 is labelled ``a``.
    """
    validate_system(system)
    T, k = system.T, system.k
    tri = [-1] * (2 * k)
    for i, t in enumerate(triangles(system)):
        for d in t:
            tri[d] = i
    color = {tri[0]: 0}
    stack = [tri[0]]
    while stack:
        t = stack.pop()
        for d in range(2 * k):
            if tri[d] != t:
                continue
            u = tri[d ^ 1]
            if u == t:
                return None
            if u not in color:
                color[u] = 1 - color[t]
                stack.append(u)
            elif color[u] == color[t]:
                return None
    A = [0] * k
    B = [0] * k
    for p in range(k):
        da, db = (2 * p, 2 * p + 1) if color[tri[2 * p]] == 0 else (2 * p + 1, 2 * p)
        A[p] = T[da] // 2
        B[p] = T[db] // 2
    return QuotientSpec(k, tuple(A), tuple(B))


def build_system(system: TriangleSystem) -> Digraph:
    validate_system(system)
    edges = {(d // 2, t // 2) for d, t in enumerate(system.T)}
    try:
        return Digraph(system.k, edges)
    except SymmetricPair as exc:
        raise QuotientSymmetric(str(exc)) from exc


def system_of_digraph(D: Digraph) -> TriangleSystem | None:
    """Recover the triangle system of a digraph covered by T(2).

    Needs out- and in-degree 2 everywhere and exactly two directed triangles
    at each vertex, meeting only there.  Darts of vertex ``p`` are numbered
    by the smaller out-neighbour first.
    """
    for v in range(D.n):
        if len(D.out_adj[v]) != 2 or len(D.in_adj[v]) != 2:
            return None
    for p in range(D.n):
        for q in D.out_adj[p]:
            if sum(1 for r in D.out_adj[q] if p in D.out_adj[r]) != 1:
                return None
    # dart of q in the triangle entered from p is the one leaving towards the closing vertex
    darts = [0] * (2 * D.n)
    for p in range(D.n):
        outs = sorted(D.out_adj[p])
        for i, q in enumerate(outs):
            r = next(r for r in D.out_adj[q] if p in D.out_adj[r])
            darts[2 * p + i] = 2 * q + sorted(D.out_adj[q]).index(r)
    system = TriangleSystem(D.n, tuple(darts))
    try:
        validate_system(system)
    except InvalidSpec:
        return None
    if build_system(system) != D:
        return None
    return system


def _system_relabel_from(system: TriangleSystem, base: int) -> Perm:
    """Relabel darts breadth-first from ``base``; a vertex's first-reached dart is even."""
    T = system.T
    new = {base: 0, base ^ 1: 1}
    queue = [base, base ^ 1]
    i = 0
    while i < len(queue):
        e = T[queue[i]]
        i += 1
        if e not in new:
            new[e] = len(new)
            new[e ^ 1] = len(new)
            queue += [e, e ^ 1]
    out = [0] * len(T)
    for d, nd in new.items():
        out[nd] = new[T[d]]
    return tuple(out)


def canonical_system(system: TriangleSystem) -> TriangleSystem:
    """Minimum relabelling over all base darts."""
    validate_system(system)
    return TriangleSystem(system.k, min(_system_relabel_from(system, d) for d in range(2 * system.k)))


def enumerate_systems(k: int):
    """Every triangle system on ``k`` vertices, one per standard dart table.

    Isomorphic systems appear several times; callers deduplicate by digraph.
    """
    if k % 3:
        return
    for s, t in _standard_tables(2 * k, (2, 3)):
        yield _system_from_table(k, s, t)


def enumerate_regular_systems(k: int):
    """Triangle systems whose darts carry a regular action of ``<s, t>``.

    These are exactly the quotients with an automorphism group acting
    regularly on edges, one per normal subgroup of index ``2k``.
    """
    if k % 3:
        return
    for s, t in _regular_tables(2 * k, (2, 3)):
        yield _system_from_table(k, s, t)


def _system_from_table(k: int, s: Perm, t: Perm) -> TriangleSystem:
    vert = [-1] * (2 * k)
    nv = 0
    for d in range(2 * k):
        if vert[d] == -1:
            vert[d], vert[s[d]] = 2 * nv, 2 * nv + 1
            nv += 1
    T = [0] * (2 * k)
    for d in range(2 * k):
        T[vert[d]] = vert[t[d]]
    return TriangleSystem(k, tuple(T))


# -- verification ----------------------------------------------------------------------


def quotient_digraph(spec: QuotientSpec | TriangleSystem) -> Digraph:
    if isinstance(spec, QuotientSpec):
        return build_quotient(spec)
    return build_system(spec)


def spec_to_dict(spec: QuotientSpec | TriangleSystem) -> dict:
    kind = "pair" if isinstance(spec, QuotientSpec) else "system"
    return {"kind": kind, **spec.to_dict()}


def spec_from_dict(data: dict) -> QuotientSpec | TriangleSystem:
    if "T" in data:
        return TriangleSystem.from_dict(data)
    return QuotientSpec.from_dict(data)


def verify_quotient(spec: QuotientSpec | TriangleSystem) -> dict:
    """Structured report; invalid specs produce ``valid: False`` and the error."""
    report: dict = {"spec": spec_to_dict(spec)}
    try:
        D = quotient_digraph(spec)
    except (InvalidSpec, QuotientLoop, QuotientSymmetric) as exc:
        report.update(valid=False, error=type(exc).__name__, message=str(exc))
        return report
    shape = delta_shape_report(D)
    verdict = is_c_homogeneous(D)
    if isinstance(spec, QuotientSpec):
        swap = check_swap_invariance(spec)
        pair = spec
    else:
        swap = None
        pair = to_pair(spec)
    report.update(
        valid=True,
        digraph=D.to_dict(),
        connected=is_connected(D),
        has_triangle=has_directed_triangle(D),
        collapsed=spec.collapsed,
        labelled=pair is not None,
        triangles_per_vertex=sorted({triangles_at_vertex(D, v) for v in range(D.n)}),
        c_homogeneous=verdict.to_dict(),
        delta_shape=str(shape.shape),
        delta_classes=[str(s) for s in sorted(set(shape.per_class), key=str)],
        delta_class_count=shape.class_count,
        swap_witness=list(swap) if swap is not None else None,
        # every class of the relation on T(2) is infinite, so the quotient has at most one end
        classes_infinite=True,
    )
    return report


def passes(report: dict) -> bool:
    return bool(report.get("valid")) and report["c_homogeneous"]["holds"]


def _dart_image(system: TriangleSystem, word) -> tuple[int, int]:
    """Darts carrying the ``a`` and ``b`` triangles at the image of ``word``."""
    da, db = 0, 1
    for gen, exp in word:
        d = da if gen == 0 else db
        for _ in range(exp):
            d = system.T[d]
        da, db = (d, d ^ 1) if gen == 0 else (d ^ 1, d)
    return da, db


def word_image(spec: QuotientSpec | TriangleSystem, word) -> int:
    if isinstance(spec, QuotientSpec):
        p = 0
        for gen, exp in word:
            P = spec.A if gen == 0 else spec.B
            for _ in range(exp):
                p = P[p]
        return p
    return _dart_image(spec, word)[0] // 2


def covering_check(spec: QuotientSpec | TriangleSystem, r: int) -> bool:
    """The projection of the radius-r ball of T(2) is a local isomorphism.

    Checks that it is a digraph homomorphism and maps the out- and
    in-neighbourhood of every interior ball vertex onto those of its image,
    injectively except at vertices whose two out-edges (or two in-edges)
    coincide in the quotient.
    """
    system = _as_system(spec)
    Q = build_system(system)
    T = system.T
    Tinv = [0] * len(T)
    for d, e in enumerate(T):
        Tinv[e] = d
    ball = t2_ball(r)
    D = ball.digraph
    f = [word_image(system, w) for w in ball.words]
    if any(not Q.has_edge(f[u], f[v]) for u, v in D.edges):
        return False
    for x in ball.interior:
        p = f[x]
        for mine, theirs, merged in (
            (D.out_adj[x], Q.out_adj[p], T[2 * p] // 2 == T[2 * p + 1] // 2),
            (D.in_adj[x], Q.in_adj[p], Tinv[2 * p] // 2 == Tinv[2 * p + 1] // 2),
        ):
            image = [f[y] for y in mine]
            if set(image) != set(theirs):
                return False
            if not merged and len(set(image)) != len(image):
                return False
    return True


# Every triangle system is tried up to this many points; beyond it only
# systems with an edge-regular automorphism group are generated.
EXHAUSTIVE_MAX = 12

# Documented bound for the default search; the first Delta = C_10 quotient
# appears at k = 30.
SEARCH_BOUND = 30


def _candidates(k: int, labelled_only: bool, exhaustive_max: int):
    if labelled_only:
        yield from enumerate_specs(k)
    elif k <= exhaustive_max:
        yield from enumerate_systems(k)
    else:
        yield from enumerate_regular_systems(k)


def _representative(spec: QuotientSpec | TriangleSystem) -> QuotientSpec | TriangleSystem:
    if isinstance(spec, QuotientSpec):
        return canonical_spec(spec)
    pair = to_pair(spec)
    return canonical_spec(pair) if pair is not None else canonical_system(spec)


def search_quotients(
    k_max: int = SEARCH_BOUND,
    labelled_only: bool = False,
    exhaustive_max: int = EXHAUSTIVE_MAX,
) -> list[tuple[QuotientSpec | TriangleSystem, dict]]:
    """Verified C-homogeneous quotients with at most ``k_max`` points.

    For ``k <= exhaustive_max`` every triangle system is tried.  Above that
    only systems whose darts carry a regular group action are generated:
    when the projection from T(2) is a covering, automorphisms lift to T(2),
    where fixing one edge fixes everything, so a C-homogeneous covering
    quotient has exactly one automorphism per edge.  ``labelled_only``
    restricts the search to pairs ``(A, B)`` (exhaustive for every k).

    Candidates are filtered cheaply (valid digraph, uniform reachability
    classes, vertex-transitive) before the C-homogeneity check and
    deduplicated by digraph isomorphism.  A result is reported as a pair
    whenever its triangles admit an a/b labelling.
    """
    found: list[tuple[QuotientSpec | TriangleSystem, dict]] = []
    seen: set = set()
    rejected: set = set()
    for k in range(3, k_max + 1, 3):
        tried = 0
        for spec in _candidates(k, labelled_only, exhaustive_max):
            tried += 1
            try:
                D = quotient_digraph(spec)
            except (InvalidSpec, QuotientLoop, QuotientSymmetric):
                continue
            if D in rejected:
                continue
            if not delta_shape_report(D).uniform or not vertex_transitive(D):
                rejected.add(D)
                continue
            cert = certificate(D)
            if cert in seen:
                continue
            seen.add(cert)
            rep = _representative(spec)
            report = verify_quotient(rep)
            if passes(report):
                found.append((rep, report))
        log.info("k=%d: %d candidates, %d verified so far", k, tried, len(found))
    return found
