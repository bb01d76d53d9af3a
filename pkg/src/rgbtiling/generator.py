"""Isomorphism-class enumeration of maximal planar graphs.

Classes on ``n`` vertices are seeded by inserting a degree-3 vertex into every
face of every class on ``n - 1`` vertices, then closed under diagonal flips.
The flip graph of sphere triangulations with a fixed vertex count is
connected, so the closure is complete; deduplication uses
:func:`~rgbtiling.embedding.canonical_code`.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from .constructions import k4
from .embedding import Edge, SemiMpg, PlanarEmbedding, canonical_code, edge_key
from .errors import BoundaryEdge, NotFlippable, ResourceLimit

log = logging.getLogger(__name__)


def _require_mpg(m: SemiMpg) -> None:
    if not m.is_mpg:
        raise BoundaryEdge("flips and insertions act on MPGs only")


def flip_edge(m: SemiMpg, e: Edge) -> SemiMpg:
    """Replace ``e`` by the other diagonal of its diamond."""
    _require_mpg(m)
    emb = m.embedding
    u, v = e
    if not emb.has_edge(u, v):
        raise NotFlippable(f"{u}-{v} is not an edge")
    _, a = emb.next_dart(u, v)
    _, b = emb.next_dart(v, u)
    if a == b or emb.has_edge(a, b):
        raise NotFlippable(f"diagonal {a}-{b} already present")
    rot = [list(r) for r in emb.rot]
    rot[u].remove(v)
    rot[v].remove(u)
    # at a, u sits just before v; the new edge goes between them
    rot[a].insert(rot[a].index(u) + 1, b)
    rot[b].insert(rot[b].index(v) + 1, a)
    return SemiMpg(PlanarEmbedding(rot))


def insert_vertex(m: SemiMpg, face: int) -> SemiMpg:
    """Add a new vertex inside triangular ``face``, joined to its three corners."""
    _require_mpg(m)
    emb = m.embedding
    x, y, z = emb.faces[face].vertices
    w = emb.n
    rot = [list(r) for r in emb.rot] + [[x, y, z]]
    rot[x].insert(rot[x].index(y) + 1, w)
    rot[y].insert(rot[y].index(z) + 1, w)
    rot[z].insert(rot[z].index(x) + 1, w)
    return SemiMpg(PlanarEmbedding(rot))


def flippable_edges(m: SemiMpg) -> list[Edge]:
    emb = m.embedding
    out = []
    for u, v in emb.edges:
        a = emb.next_dart(u, v)[1]
        b = emb.next_dart(v, u)[1]
        if a != b and not emb.has_edge(a, b):
            out.append(edge_key(u, v))
    return out


@dataclass
class GenerationRun:
    max_vertices: int
    classes_per_n: dict[int, list[SemiMpg]] = field(default_factory=dict)

    def counts(self) -> dict[int, int]:
        return {n: len(v) for n, v in sorted(self.classes_per_n.items())}

    def all(self, min_n: int = 4, max_n: int | None = None) -> list[SemiMpg]:
        max_n = self.max_vertices if max_n is None else max_n
        return [g for n in range(min_n, max_n + 1) for g in self.classes_per_n.get(n, [])]


def _flip_closure(seeds: list[SemiMpg], cap: int | None) -> list[SemiMpg]:
    found: dict[bytes, SemiMpg] = {}
    queue = deque()
    for g in seeds:
        c = canonical_code(g)
        if c not in found:
            found[c] = g
            queue.append(g)
    while queue:
        g = queue.popleft()
        for e in flippable_edges(g):
            h = flip_edge(g, e)
            c = canonical_code(h)
            if c not in found:
                found[c] = h
                queue.append(h)
                if cap is not None and len(found) > cap:
                    raise ResourceLimit(f"more than {cap} classes on {g.n + 0} vertices")
    return [found[c] for c in sorted(found)]


def enumerate_mpgs(n_max: int, max_classes: int | None = 100_000) -> GenerationRun:
    """All simple MPGs with 4..``n_max`` vertices, one representative per class."""
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    run = GenerationRun(n_max)
    run.classes_per_n[4] = [k4()]
    for n in range(5, n_max + 1):
        seeds = [
            insert_vertex(g, f) for g in run.classes_per_n[n - 1] for f in range(len(g.faces))
        ]
        run.classes_per_n[n] = _flip_closure(seeds, max_classes)
        log.info("n=%d: %d classes", n, len(run.classes_per_n[n]))
    return run
