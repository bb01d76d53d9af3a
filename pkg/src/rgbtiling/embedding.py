"""Rotation-system embeddings of planar graphs, semi-MPG hosts and surgery on them.

A :class:`PlanarEmbedding` stores, for every vertex, its neighbours in
counter-clockwise order.  Faces are never stored as independent data: they
are traced from the rotations (the face to the left of the dart ``u -> v``
continues with ``v -> w`` where ``w`` is the neighbour of ``v`` just before
``u`` in ``v``'s rotation).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import networkx as nx

from .errors import (
    CannotTriangulateSimply,
    CycleUsesSharedOuterEdge,
    ForbiddenSharedOuterEdge,
    ForbiddenSmallOuterFace,
    InconsistentRotation,
    NonTriangleInnerFace,
    NotACycle,
    NotConnected,
    NotPlanarEmbedding,
    NotSimple,
)

Edge = tuple[int, int]
Dart = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def cyclic_form(seq: Sequence[int]) -> tuple[int, ...]:
    """Smallest rotation of ``seq`` or of its reverse; identifies an unoriented cycle."""
    best = None
    for s in (tuple(seq), tuple(reversed(seq))):
        for i in range(len(s)):
            r = s[i:] + s[:i]
            if best is None or r < best:
                best = r
    return best or ()


@dataclass(frozen=True)
class Face:
    """A face of an embedding, given by its boundary walk (face on the left)."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def darts(self) -> tuple[Dart, ...]:
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(edge_key(u, v) for u, v in self.darts)

    @property
    def boundary(self) -> tuple[tuple[int, Edge], ...]:
        return tuple(zip(self.vertices, self.edges))


class PlanarEmbedding:
    """Combinatorial map of a simple connected graph on the sphere.

    Parameters
    ----------
    rotations
        ``rotations[v]`` lists the neighbours of ``v`` in counter-clockwise
        order.  The structure is validated on construction and immutable.
    """

    def __init__(self, rotations: Sequence[Sequence[int]]):
        rot = tuple(tuple(int(x) for x in r) for r in rotations)
        n = len(rot)
        for v, r in enumerate(rot):
            for w in r:
                if not 0 <= w < n:
                    raise InconsistentRotation(f"vertex {v} lists unknown neighbour {w}")
                if w == v:
                    raise NotSimple(f"self-loop at vertex {v}")
            if len(set(r)) != len(r):
                raise NotSimple(f"repeated neighbour in rotation of vertex {v}")
        for v, r in enumerate(rot):
            for w in r:
                if v not in rot[w]:
                    raise InconsistentRotation(f"edge {v}-{w} present at {v} only")
        self.rot = rot
        self.n = n
        self._pos = tuple({w: i for i, w in enumerate(r)} for r in rot)
        if n == 0 or not self._connected():
            raise NotConnected("embedding must be a non-empty connected graph")
        euler = self.n - len(self.edges) + len(self.faces)
        if euler != 2:
            raise NotPlanarEmbedding(f"V - E + F = {euler}, expected 2")

    def __repr__(self) -> str:
        return f"PlanarEmbedding(V={self.n}, E={len(self.edges)}, F={len(self.faces)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanarEmbedding) and self.rot == other.rot

    def __hash__(self) -> int:
        return hash(self.rot)

    def _connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.rot[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # ---- basic queries -------------------------------------------------

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted({edge_key(v, w) for v in range(self.n) for w in self.rot[v]}))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def next_dart(self, u: int, v: int) -> Dart:
        """Dart following ``u -> v`` along the face on its left."""
        r = self.rot[v]
        return v, r[(self._pos[v][u] - 1) % len(r)]

    def rotation_index(self, v: int, w: int) -> int:
        return self._pos[v][w]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen: set[Dart] = set()
        faces = []
        for u in range(self.n):
            for v in self.rot[u]:
                if (u, v) in seen:
                    continue
                walk = []
                d = (u, v)
                while d not in seen:
                    seen.add(d)
                    walk.append(d[0])
                    d = self.next_dart(*d)
                faces.append(Face(tuple(walk)))
        return tuple(faces)

    @cached_property
    def dart_face(self) -> dict[Dart, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.darts}

    def edge_faces(self, e: Edge) -> tuple[int, int]:
        u, v = e
        return self.dart_face[(u, v)], self.dart_face[(v, u)]

    def face_of_cycle(self, cycle: Sequence[int]) -> int:
        """Id of the face whose boundary walk is ``cycle`` (either orientation)."""
        target = cyclic_form(list(cycle))
        for fid, f in enumerate(self.faces):
            if cyclic_form(f.vertices) == target:
                return fid
        raise NotACycle(f"{list(cycle)} is not a face of the embedding")

    def mirror(self) -> "PlanarEmbedding":
        return PlanarEmbedding([tuple(reversed(r)) for r in self.rot])

    def relabel(self, perm: Sequence[int]) -> "PlanarEmbedding":
        """Vertex ``v`` becomes ``perm[v]``."""
        rot: list = [None] * self.n
        for v, r in enumerate(self.rot):
            rot[perm[v]] = tuple(perm[w] for w in r)
        return PlanarEmbedding(rot)

    def adjacency(self) -> list[set[int]]:
        return [set(r) for r in self.rot]


def build_embedding(rotations: Sequence[Sequence[int]]) -> PlanarEmbedding:
    return PlanarEmbedding(rotations)


def from_faces(faces: Iterable[Sequence[int]], n: int | None = None) -> PlanarEmbedding:
    """Build the embedding whose faces are ``faces``, all oriented consistently.

    Every dart must occur in exactly one face.  Used to write down named graphs
    and semi-MPGs (outer polygons included) by hand.
    """
    faces = [tuple(f) for f in faces]
    if n is None:
        n = 1 + max(max(f) for f in faces)
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for f in faces:
        k = len(f)
        for i in range(k):
            prev, v, nxt = f[i - 1], f[i], f[(i + 1) % k]
            # at v the face enters from prev and leaves to nxt: nxt sits just before prev
            if nxt in succ[v]:
                raise InconsistentRotation(f"dart {v}->{nxt} used by two faces")
            succ[v][nxt] = prev
    rot = []
    for v in range(n):
        s = succ[v]
        if not s:
            rot.append(())
            continue
        start = min(s)
        order = [start]
        w = s[start]
        while w != start:
            order.append(w)
            if w not in s or len(order) > len(s):
                raise InconsistentRotation(f"faces around vertex {v} do not close up")
            w = s[w]
        if len(order) != len(s):
            raise InconsistentRotation(f"vertex {v} is a pinch point of the face list")
        rot.append(tuple(order))
    return PlanarEmbedding(rot)


@dataclass(frozen=True)
class SemiMpg:
    """An embedding together with its designated outer facets.

    Every face that is not an outer facet must be a triangle.  An MPG has no
    outer facets; an ``n``-semi-MPG has exactly one.
    """

    embedding: PlanarEmbedding
    outer_facets: frozenset[int] = frozenset()
    allow_3gon_outer: bool = False
    allow_shared_outer_edges: bool = False
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "outer_facets", frozenset(self.outer_facets))
        emb = self.embedding
        for fid in self.outer_facets:
            if not 0 <= fid < len(emb.faces):
                raise NotACycle(f"no face with id {fid}")
        for fid, f in enumerate(emb.faces):
            if fid in self.outer_facets:
                if f.length < 3 or (f.length == 3 and not self.allow_3gon_outer):
                    raise ForbiddenSmallOuterFace(f"outer facet {f.vertices} has length {f.length}")
            elif f.length != 3:
                raise NonTriangleInnerFace(f"inner face {f.vertices} has length {f.length}")
        if not self.allow_shared_outer_edges and self.shared_outer_edges:
            raise ForbiddenSharedOuterEdge(f"edges {sorted(self.shared_outer_edges)} lie on two outer facets")

    def __repr__(self) -> str:
        return f"SemiMpg({self.kind}, V={self.n}, E={len(self.edges)})"

    @property
    def n(self) -> int:
        return self.embedding.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.embedding.edges

    @property
    def faces(self) -> tuple[Face, ...]:
        return self.embedding.faces

    @property
    def is_mpg(self) -> bool:
        return not self.outer_facets

    @property
    def one_piece(self) -> bool:
        return len(self.outer_facets) <= 1

    @property
    def kind(self) -> str:
        if self.is_mpg:
            return "MPG"
        sizes = sorted(self.faces[f].length for f in self.outer_facets)
        if len(sizes) == 1:
            return f"{sizes[0]}-semi-MPG"
        return "(" + ",".join(map(str, sizes)) + ")-semi-MPG"

    @cached_property
    def inner_faces(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.faces)) if i not in self.outer_facets)

    @cached_property
    def edge_triangles(self) -> tuple[tuple[int, ...], ...]:
        """Inner triangles on each edge, indexed by edge id."""
        emb = self.embedding
        out = []
        for e in emb.edges:
            out.append(tuple(f for f in emb.edge_faces(e) if f not in self.outer_facets))
        return tuple(out)

    @cached_property
    def shared_outer_edges(self) -> frozenset[Edge]:
        emb = self.embedding
        return frozenset(
            e for e in emb.edges if all(f in self.outer_facets for f in emb.edge_faces(e))
        )

    @cached_property
    def free_edges(self) -> tuple[int, ...]:
        """Edge ids lying on no inner triangle; their tiling color is unconstrained."""
        return tuple(i for i, ts in enumerate(self.edge_triangles) if not ts)

    @cached_property
    def omega(self) -> tuple[Edge, ...]:
        """Edges along outer facets; an edge shared by two of them appears twice."""
        return tuple(e for fid in sorted(self.outer_facets) for e in self.faces[fid].edges)

    def outer_cycles(self) -> list[tuple[int, ...]]:
        return [self.faces[f].vertices for f in sorted(self.outer_facets)]


def classify(
    embedding: PlanarEmbedding,
    outer_facets: Iterable = (),
    allow_3gon_outer: bool = False,
    allow_shared_outer_edges: bool = False,
) -> SemiMpg:
    """Wrap ``embedding`` as a semi-MPG.

    ``outer_facets`` may hold face ids or vertex cycles.
    """
    ids = set()
    for f in outer_facets:
        ids.add(f if isinstance(f, int) else embedding.face_of_cycle(list(f)))
    return SemiMpg(embedding, frozenset(ids), allow_3gon_outer, allow_shared_outer_edges)


def find_nontrivial_cycles3(m: SemiMpg) -> list[tuple[int, int, int]]:
    emb = m.embedding
    facial = {tuple(sorted(f.vertices)) for f in emb.faces if f.length == 3}
    adj = emb.adjacency()
    out = []
    for u, v in emb.edges:
        for w in sorted(adj[u] & adj[v]):
            if w > v and (u, v, w) not in facial:
                out.append((u, v, w))
    return out


class Cut(NamedTuple):
    inside: SemiMpg
    outside: SemiMpg


def _check_cycle(m: SemiMpg, cycle: Sequence[int]) -> None:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise NotACycle(f"{list(cycle)} is not a simple cycle")
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not m.embedding.has_edge(u, v):
            raise NotACycle(f"{u}-{v} is not an edge")
        if edge_key(u, v) in m.shared_outer_edges:
            raise CycleUsesSharedOuterEdge(f"{u}-{v} is shared by two outer facets")


def _side(m: SemiMpg, cycle: Sequence[int], left: bool) -> SemiMpg:
    emb = m.embedding
    k = len(cycle)
    cyc_darts = {(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    cyc_edges = {edge_key(*d) for d in cyc_darts}
    start = (cycle[0], cycle[1]) if left else (cycle[1], cycle[0])
    region = {emb.dart_face[start]}
    queue = deque(region)
    while queue:
        f = queue.popleft()
        for u, v in emb.faces[f].darts:
            if edge_key(u, v) in cyc_edges:
                continue
            g = emb.dart_face[(v, u)]
            if g not in region:
                region.add(g)
                queue.append(g)
    on_cycle = {v: i for i, v in enumerate(cycle)}
    verts = sorted(set(cycle) | {v for f in region for v in emb.faces[f].vertices})
    new = {v: i for i, v in enumerate(verts)}
    rot = []
    for v in verts:
        r = emb.rot[v]
        if v not in on_cycle:
            rot.append(tuple(new[w] for w in r))
            continue
        i = on_cycle[v]
        nxt, prv = cycle[(i + 1) % k], cycle[i - 1]
        a, b = (nxt, prv) if left else (prv, nxt)
        j = emb.rotation_index(v, a)
        wedge = [a]
        while wedge[-1] != b:
            j = (j + 1) % len(r)
            wedge.append(r[j])
        rot.append(tuple(new[w] for w in wedge))
    sub = PlanarEmbedding(rot)
    outer = set()
    # the cycle itself is the face on the other side of its darts
    d = (new[cycle[1]], new[cycle[0]]) if left else (new[cycle[0]], new[cycle[1]])
    outer.add(sub.dart_face[d])
    for f in region & m.outer_facets:
        u, v = emb.faces[f].darts[0]
        outer.add(sub.dart_face[(new[u], new[v])])
    shared = any(
        all(g in outer for g in sub.edge_faces(e)) for e in sub.edges
    )
    small = any(sub.faces[f].length == 3 for f in outer)
    return SemiMpg(sub, frozenset(outer), small or m.allow_3gon_outer, shared, labels=tuple(verts))


def cut_along_cycle(m: SemiMpg, cycle: Sequence[int]) -> Cut:
    """Split ``m`` along ``cycle`` into the part left of it and the part right of it.

    The cycle becomes a new outer facet of both halves (its edges are
    duplicated).  ``labels`` on each half maps new vertex ids back to ``m``.
    """
    cycle = list(cycle)
    _check_cycle(m, cycle)
    return Cut(_side(m, cycle, left=True), _side(m, cycle, left=False))


def _insert_after(r: list[int], anchor: int, w: int) -> None:
    r.insert(r.index(anchor) + 1, w)


def triangulate(g: PlanarEmbedding | SemiMpg) -> SemiMpg:
    """Add chords until every face is a triangle, never duplicating an edge.

    Each long face is fanned from its lowest-id corner; if a chord from that
    corner would duplicate an adjacency the next corner along the face is tried.
    """
    emb = g.embedding if isinstance(g, SemiMpg) else g
    if emb.n < 3:
        raise CannotTriangulateSimply("need at least 3 vertices")
    while True:
        long_faces = [f for f in emb.faces if f.length > 3]
        if not long_faces:
            return SemiMpg(emb)
        face = min(long_faces, key=lambda f: (min(f.vertices), f.vertices))
        vs = face.vertices
        k = len(vs)
        order = sorted(range(k), key=lambda i: (vs[i], i))
        start = order[0]
        chord = None
        for step in range(k):
            i = (start + step) % k
            a, b = vs[i], vs[(i + 2) % k]
            if a != b and not emb.has_edge(a, b):
                chord = i
                break
        if chord is None:
            raise CannotTriangulateSimply(f"no simple chord in face {vs}")
        i = chord
        a, mid, b, after = vs[i], vs[(i + 1) % k], vs[(i + 2) % k], vs[(i + 3) % k]
        rot = [list(r) for r in emb.rot]
        _insert_after(rot[a], mid, b)
        _insert_after(rot[b], after, a)
        emb = PlanarEmbedding(rot)


def _canonical_key(emb: PlanarEmbedding, outer: list[tuple[int, ...]], u: int, v: int, step: int):
    labels = {u: 0}
    order = [u]
    ref = {u: v}
    code = []
    i = 0
    while i < len(order):
        x = order[i]
        r = emb.rot[x]
        k = len(r)
        s = emb.rotation_index(x, ref[x])
        for j in range(k):
            y = r[(s + step * j) % k]
            if y not in labels:
                labels[y] = len(order)
                order.append(y)
                ref[y] = x
            code.append(labels[y] + 1)
        code.append(0)
        i += 1
    faces = tuple(sorted(cyclic_form([labels[w] for w in f]) for f in outer))
    return tuple(code), faces


def canonical_code(m: SemiMpg | PlanarEmbedding) -> bytes:
    """Relabeling-, rotation- and reflection-invariant byte code of a map.

    Outer facets are part of the code, so two semi-MPGs share a code exactly
    when some map isomorphism also matches their outer facets.
    """
    if isinstance(m, SemiMpg):
        emb, outer = m.embedding, m.outer_cycles()
    else:
        emb, outer = m, []
    best = None
    for u in range(emb.n):
        for v in emb.rot[u]:
            for step in (1, -1):
                key = _canonical_key(emb, outer, u, v, step)
                if best is None or key < best:
                    best = key
    code, faces = best
    out = bytearray(emb.n.to_bytes(2, "big"))
    for x in code:
        out += x.to_bytes(2, "big")
    out += b"\xff\xff"
    for f in faces:
        out += len(f).to_bytes(2, "big")
        for x in f:
            out += x.to_bytes(2, "big")
    return bytes(out)


def simple_cycles(m: SemiMpg | PlanarEmbedding, max_length: int | None = None) -> list[list[int]]:
    """All simple cycles (each once, as a vertex sequence) of the underlying graph."""
    emb = m.embedding if isinstance(m, SemiMpg) else m
    g = nx.Graph(list(emb.edges))
    return [list(c) for c in nx.simple_cycles(g, length_bound=max_length)]


def cycle_basis(m: SemiMpg | PlanarEmbedding) -> list[list[int]]:
    emb = m.embedding if isinstance(m, SemiMpg) else m
    return [list(c) for c in nx.cycle_basis(nx.Graph(list(emb.edges)), 0)]


def walk_edges(cycle: Sequence[int]) -> list[Edge]:
    k = len(cycle)
    return [edge_key(cycle[i], cycle[(i + 1) % k]) for i in range(k)]

