"""Catalog recognition and an exhaustive census of small C-homogeneous digraphs.

Digraphs are generated up to isomorphism by vertex augmentation: every
representative on ``n - 1`` vertices is extended by a new vertex with each
of the ``3^(n-1)`` direction patterns towards the old vertices, and children
are deduplicated by canonical certificate.  Deleting the last vertex of any
digraph gives a parent, so every isomorphism class is reached.
"""

from __future__ import annotations

import itertools
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .digraph import Digraph, VertexPartition, empty, is_connected, lex_product, quotient_by_partition
from .errors import NotConnected, TooLarge, TooSmall
from .families import CatalogEntry, build_catalog, directed_cycle, h, y
from .homogeneity import is_c_homogeneous
from .symmetry import are_isomorphic, canonical_form, certificate, vertex_transitive

log = logging.getLogger(__name__)

DEFAULT_CEILING = 6


# -- generation -----------------------------------------------------------------


def _children(D: Digraph):
    n = D.n
    for pattern in itertools.product((0, 1, 2), repeat=n):
        edges = list(D.edges)
        for v, c in enumerate(pattern):
            if c == 1:
                edges.append((n, v))
            elif c == 2:
                edges.append((v, n))
        yield Digraph(n + 1, edges)


def all_digraphs(n_max: int) -> dict[int, list[Digraph]]:
    """Canonical representatives of every digraph on ``1..n_max`` vertices."""
    if n_max < 1:
        raise TooSmall(f"n_max must be >= 1, got {n_max}")
    return {n: list(_level(n)) for n in range(1, n_max + 1)}


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Digraph, ...]:
    if n == 1:
        return (empty(1),)
    seen: dict[tuple, Digraph] = {}
    for parent in _level(n - 1):
        for child in _children(parent):
            cert = certificate(child)
            if cert not in seen:
                seen[cert] = canonical_form(child)
    log.info("n=%d: %d digraphs", n, len(seen))
    return tuple(sorted(seen.values(), key=lambda D: (D.edge_count, D.edges)))


def connected_digraphs(n_max: int) -> dict[int, list[Digraph]]:
    return {n: [D for D in Ds if is_connected(D)] for n, Ds in all_digraphs(n_max).items()}


def _regular(D: Digraph) -> bool:
    return len({D.out_degree(v) for v in range(D.n)}) == 1 and len({D.in_degree(v) for v in range(D.n)}) == 1


def _passes(D: Digraph) -> bool:
    return is_c_homogeneous(D).holds


def enumerate_c_homogeneous(n_max: int, ceiling: int = DEFAULT_CEILING, jobs: int = 1) -> list[Digraph]:
    """Connected C-homogeneous digraphs on at most ``n_max`` vertices, canonical and sorted.

    Survivors must be vertex-transitive, since single vertices are connected
    induced subdigraphs, so regularity and vertex-transitivity are checked first.
    With ``jobs > 1`` the C-homogeneity checks run in a process pool.
    """
    if n_max < 1:
        raise TooSmall(f"n_max must be >= 1, got {n_max}")
    if n_max > ceiling:
        raise TooLarge(f"n_max {n_max} exceeds the ceiling {ceiling}")
    cands = [
        D for Ds in connected_digraphs(n_max).values() for D in Ds if _regular(D) and vertex_transitive(D)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_passes, cands, chunksize=16))
    else:
        verdicts = [_passes(D) for D in cands]
    out = [D for D, ok in zip(cands, verdicts) if ok]
    return sorted(out, key=lambda D: (D.n, D.edge_count, D.edges))


# -- recognition ------------------------------------------------------------------


def fibers(D: Digraph) -> VertexPartition:
    """Classes of vertices with identical out- and in-neighbourhoods (hence non-adjacent)."""
    groups: dict[tuple, list[int]] = {}
    for v in range(D.n):
        groups.setdefault((D.out_adj[v], D.in_adj[v]), []).append(v)
    return VertexPartition(tuple(sorted(tuple(g) for g in groups.values())))


def _t2_entry(D: Digraph) -> CatalogEntry | None:
    from .quotients import _representative, system_of_digraph, to_pair

    system = system_of_digraph(D)
    if system is None or not is_c_homogeneous(D).holds:
        return None
    rep = _representative(to_pair(system) or system)
    if hasattr(rep, "A"):
        return CatalogEntry("T2Quotient", (rep.k, rep.A, rep.B))
    return CatalogEntry("T2Quotient", (rep.k, rep.T))


def recognize(D: Digraph) -> CatalogEntry:
    """Catalog entry of a connected digraph; Unknown when no family matches."""
    if not is_connected(D):
        raise NotConnected("recognition needs a connected digraph")
    if D.n == 1:
        return CatalogEntry("Trivial")
    P = fibers(D)
    sizes = {len(b) for b in P.blocks}
    if len(sizes) == 1:
        n = sizes.pop()
        Q = quotient_by_partition(D, P)
        m = Q.n
        if m >= 3 and are_isomorphic(Q, directed_cycle(m)):
            if are_isomorphic(D, lex_product(directed_cycle(m), empty(n))):
                return CatalogEntry("Cycle", (m, n))
        if m == 8 and are_isomorphic(Q, h()) and are_isomorphic(D, lex_product(h(), empty(n))):
            return CatalogEntry("HComposite", (n,))
    if D.n % 3 == 0 and D.n >= 9 and are_isomorphic(D, y(D.n // 3)):
        return CatalogEntry("Y", (D.n // 3,))
    entry = _t2_entry(D)
    if entry is not None:
        return entry
    return CatalogEntry("Unknown")


# -- census --------------------------------------------------------------------------


def catalog_members(n_max: int) -> list[CatalogEntry]:
    """Every catalog entry with at most ``n_max`` vertices.

    Quotients of T(2) come from :func:`search_quotients`, which is
    exhaustive in this range.
    """
    from .quotients import quotient_digraph, search_quotients

    out = [CatalogEntry("Trivial")]
    out += [CatalogEntry("Cycle", (m, n)) for m in range(3, n_max + 1) for n in range(1, n_max // m + 1)]
    out += [CatalogEntry("HComposite", (n,)) for n in range(1, n_max // 8 + 1)]
    out += [CatalogEntry("Y", (k,)) for k in range(3, n_max // 3 + 1)]
    for spec, _ in search_quotients(n_max, exhaustive_max=n_max):
        entry = recognize(quotient_digraph(spec))
        if entry.tag == "T2Quotient":
            out.append(entry)
    return out


@dataclass
class CensusReport:
    n_max: int
    found: list[tuple[Digraph, CatalogEntry]]
    unexplained: list[Digraph]
    counts: dict[str, int]
    missing: list[CatalogEntry] = field(default_factory=list)
    runtime: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.unexplained and not self.missing

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "found": [{"digraph": D.to_dict(), "entry": str(e)} for D, e in self.found],
            "unexplained": [D.to_dict() for D in self.unexplained],
            "missing": [str(e) for e in self.missing],
            "counts": dict(sorted(self.counts.items())),
            "runtime_seconds": {k: round(v, 3) for k, v in self.runtime.items()},
        }

    def to_text(self, with_runtime: bool = True) -> str:
        data = self.to_dict()
        if not with_runtime:
            data.pop("runtime_seconds")
        return json.dumps(data, indent=2) + "\n"


def census(n_max: int, ceiling: int = DEFAULT_CEILING, jobs: int = 1) -> CensusReport:
    t0 = time.perf_counter()
    survivors = enumerate_c_homogeneous(n_max, ceiling, jobs)
    t1 = time.perf_counter()
    found = []
    unexplained = []
    counts: dict[str, int] = {}
    for D in survivors:
        entry = recognize(D)
        if entry.tag == "Unknown":
            unexplained.append(D)
        else:
            found.append((D, entry))
        counts[entry.tag] = counts.get(entry.tag, 0) + 1
    present = {certificate(D) for D in survivors}
    missing = [e for e in catalog_members(n_max) if certificate(build_catalog(e)) not in present]
    t2 = time.perf_counter()
    return CensusReport(n_max, found, unexplained, counts, missing, {"enumerate": t1 - t0, "recognize": t2 - t1})
