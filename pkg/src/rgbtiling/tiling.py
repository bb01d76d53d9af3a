"""R-tilings and RGB-tilings of semi-MPGs.

A tiling assigns every edge of its host one of four colors.  A single-color
tiling (an R-tiling when the color is red) puts exactly one colored edge on
every inner triangle; the other two edges count as black.  In an RGB-tiling
each inner triangle sees red, green and blue once each.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .embedding import Edge, SemiMpg, edge_key
from .errors import InvalidSingleColorTiling


class Color(str, Enum):
    RED = "R"
    GREEN = "G"
    BLUE = "B"
    BLACK = "K"

    @classmethod
    def parse(cls, s: "str | Color") -> "Color":
        if isinstance(s, Color):
            return s
        key = s.strip().upper()
        aliases = {"R": "R", "RED": "R", "G": "G", "GREEN": "G", "B": "B", "BLUE": "B",
                   "K": "K", "BL": "K", "BLACK": "K"}
        return cls(aliases[key])


RGB = (Color.RED, Color.GREEN, Color.BLUE)


@dataclass(frozen=True)
class Tiling:
    host: SemiMpg
    colors: tuple[Color, ...]

    def __post_init__(self):
        if len(self.colors) != len(self.host.edges):
            raise ValueError("one color per host edge required")

    @classmethod
    def from_edges(cls, host: SemiMpg, red=(), green=(), blue=()) -> "Tiling":
        idx = host.embedding.edge_index
        colors = [Color.BLACK] * len(host.edges)
        for c, es in ((Color.RED, red), (Color.GREEN, green), (Color.BLUE, blue)):
            for u, v in es:
                colors[idx[edge_key(u, v)]] = c
        return cls(host, tuple(colors))

    def color(self, u: int, v: int) -> Color:
        return self.colors[self.host.embedding.edge_index[edge_key(u, v)]]

    def edges_of(self, c: Color) -> list[Edge]:
        c = Color.parse(c)
        return [e for e, x in zip(self.host.edges, self.colors) if x == c]

    @property
    def red(self) -> frozenset[Edge]:
        return frozenset(self.edges_of(Color.RED))

    def restrict(self, c: Color) -> "Tiling":
        """Keep color ``c``, paint everything else black."""
        c = Color.parse(c)
        return Tiling(self.host, tuple(x if x == c else Color.BLACK for x in self.colors))

    def recolor(self, mapping: dict) -> "Tiling":
        return Tiling(self.host, tuple(mapping.get(x, x) for x in self.colors))

    def __repr__(self) -> str:
        counts = {c.value: self.colors.count(c) for c in Color}
        return f"Tiling({self.host.kind}, {counts})"


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    face: int
    vertices: tuple[int, ...]
    reason: str


@dataclass
class ValidationReport:
    ok: bool
    violations: list[Violation] = field(default_factory=list)

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.ok


def triangle_edge_ids(host: SemiMpg, face: int) -> tuple[int, int, int]:
    idx = host.embedding.edge_index
    return tuple(idx[e] for e in host.faces[face].edges)


def validate(t: Tiling, mode: str = "R", color: Color = Color.RED) -> ValidationReport:
    """Check the tiling rules on every inner triangle.

    ``mode="R"`` checks the single-color rule for ``color`` (all other colors
    read as black); ``mode="RGB"`` checks the three-color rule and that no
    edge of an inner triangle stays black.
    """
    host = t.host
    color = Color.parse(color)
    out = []
    for f in host.inner_faces:
        cs = [t.colors[e] for e in triangle_edge_ids(host, f)]
        verts = host.faces[f].vertices
        if mode.upper() == "R":
            k = cs.count(color)
            if k != 1:
                out.append(Violation(f, verts, f"{k} {color.name.lower()} edges"))
        elif mode.upper() == "RGB":
            if sorted(c.value for c in cs) != ["B", "G", "R"]:
                out.append(Violation(f, verts, "colors " + "".join(c.value for c in cs)))
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return ValidationReport(not out, out)


def require_single_color(t: Tiling, color: Color = Color.RED) -> None:
    rep = validate(t, "R", color)
    if not rep.ok:
        v = rep.first
        raise InvalidSingleColorTiling(f"triangle {v.vertices}: {v.reason}")


# ---------------------------------------------------------------------------
# enumeration


def triangle_order(host: SemiMpg) -> list[int]:
    """Inner triangles in breadth-first order across shared edges, from the lowest face id."""
    tri_of_edge = host.edge_triangles
    idx = host.embedding.edge_index
    order: list[int] = []
    seen: set[int] = set()
    for start in host.inner_faces:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            f = queue.popleft()
            order.append(f)
            for e in host.faces[f].edges:
                for g in tri_of_edge[idx[e]]:
                    if g not in seen:
                        seen.add(g)
                        queue.append(g)
    return order


def enumerate_r_tilings(
    m: SemiMpg,
    limit: int | None = None,
    color: Color = Color.RED,
    pinned: Iterable[Edge] = (),
    free: str = "black",
) -> Iterator[Tiling]:
    """Every single-color tiling of ``m``, each exactly once.

    Edges on no inner triangle are black unless listed in ``pinned``; with
    ``free="both"`` every red/black choice on them is enumerated as well.
    """
    color = Color.parse(color)
    idx = m.embedding.edge_index
    pinned_ids = {idx[edge_key(*e)] for e in pinned}
    order = triangle_order(m)
    tri_edges = [sorted(triangle_edge_ids(m, f)) for f in order]
    free_ids = [e for e in m.free_edges if e not in pinned_ids]
    nE = len(m.edges)
    emitted = 0

    def assignments():
        if free == "both":
            for bits in itertools.product((False, True), repeat=len(free_ids)):
                yield {e for e, b in zip(free_ids, bits) if b}
        else:
            yield set()

    for extra in assignments():
        state: list[bool | None] = [None] * nE
        for e in m.free_edges:
            state[e] = e in pinned_ids or e in extra
        for e in pinned_ids:
            state[e] = True

        def rec(i):
            if i == len(tri_edges):
                yield tuple(color if s else Color.BLACK for s in state)
                return
            es = tri_edges[i]
            reds = sum(1 for e in es if state[e] is True)
            if reds > 1:
                return
            open_ = [e for e in es if state[e] is None]
            if reds == 1:
                for e in open_:
                    state[e] = False
                yield from rec(i + 1)
                for e in open_:
                    state[e] = None
                return
            for c in open_:
                for e in open_:
                    state[e] = e == c
                yield from rec(i + 1)
                for e in open_:
                    state[e] = None

        for cols in rec(0):
            yield Tiling(m, cols)
            emitted += 1
            if limit is not None and emitted >= limit:
                return


# ---------------------------------------------------------------------------
# red structure


def _color_adjacency(t: Tiling, color: Color) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(t.host.n)]
    for (u, v), c in zip(t.host.edges, t.colors):
        if c == color:
            adj[u].append(v)
            adj[v].append(u)
    return adj


def red_components(t: Tiling, color: Color = Color.RED) -> list[list[int]]:
    """Vertex sets connected by ``color`` edges; isolated vertices are singletons."""
    adj = _color_adjacency(t, Color.parse(color))
    seen = [False] * t.host.n
    out = []
    for s in range(t.host.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def find_red_odd_cycle(t: Tiling, color: Color = Color.RED) -> list[int] | None:
    """A shortest odd cycle made of ``color`` edges, or ``None``."""
    adj = _color_adjacency(t, Color.parse(color))
    best = None
    for s in range(t.host.n):
        if not adj[s]:
            continue
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        found = None
        while queue and found is None:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= len(best):
                break
            for w in sorted(adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif dist[w] == dist[v] and w > v:
                    found = (v, w)
                    break
        if found is None:
            continue
        v, w = found
        pv, pw = [v], [w]
        while parent[pv[-1]] is not None:
            pv.append(parent[pv[-1]])
        while parent[pw[-1]] is not None:
            pw.append(parent[pw[-1]])
        cyc = pv[::-1] + pw[:-1]  # s ... v w ... (back to s)
        if best is None or len(cyc) < len(best):
            best = cyc
    if best is None:
        return None
    k = best.index(min(best))
    return best[k:] + best[:k]


# ---------------------------------------------------------------------------
# extension to RGB


def _extension_phases(t: Tiling):
    from .canal import build_canal_system  # canal imports this module

    require_single_color(t, Color.RED)
    system = build_canal_system(t, Color.RED)
    lines = []
    for line in system.lines:
        seq = line.black_edges
        if line.kind == "ring" and len(seq) % 2:
            return system, None
        lines.append(seq)
    return system, lines


def count_rgb_extensions(t: Tiling) -> int:
    system, lines = _extension_phases(t)
    if lines is None:
        return 0
    return 2 ** len(lines)


def extend_to_rgb(t: Tiling) -> Iterator[Tiling]:
    """All RGB-tilings whose red edges are exactly the red edges of ``t``.

    Along every canal line the crossed black edges alternate green/blue; a ring
    with an odd number of triangles admits no alternation.
    """
    system, lines = _extension_phases(t)
    if lines is None:
        return
    idx = t.host.embedding.edge_index
    base = [Color.RED if c == Color.RED else Color.BLACK for c in t.colors]
    for phases in itertools.product((0, 1), repeat=len(lines)):
        cols = list(base)
        for seq, p in zip(lines, phases):
            for k, e in enumerate(seq):
                cols[idx[e]] = (Color.GREEN, Color.BLUE)[(k + p) % 2]
        yield Tiling(t.host, tuple(cols))


def count_along(t: Tiling, cycle: Sequence[int]) -> dict[Color, int]:
    """How many edges of each color lie along a closed walk."""
    k = len(cycle)
    out = {c: 0 for c in Color}
    for i in range(k):
        out[t.color(cycle[i], cycle[(i + 1) % k])] += 1
    return out


def all_even_or_all_odd(counts: dict[Color, int], length: int) -> bool:
    par = length % 2
    return all(counts[c] % 2 == par for c in RGB)
