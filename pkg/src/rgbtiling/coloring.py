"""Vertex 4-colorings and their dictionary with RGB edge colorings.

Edge colors follow the vertex-color pair: 1-3 and 2-4 edges are red, 1-4 and
2-3 green, 1-2 and 3-4 blue.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .canal import is_grand
from .embedding import PlanarEmbedding, SemiMpg
from .errors import ColorOutOfRange, NotGrand, NotProper, RedOddCycle, ResourceLimit, VertexNotInPair
from .tiling import Color, Tiling, find_red_odd_cycle, red_components

PAIR_COLOR = {
    frozenset((1, 3)): Color.RED,
    frozenset((2, 4)): Color.RED,
    frozenset((1, 4)): Color.GREEN,
    frozenset((2, 3)): Color.GREEN,
    frozenset((1, 2)): Color.BLUE,
    frozenset((3, 4)): Color.BLUE,
}


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def is_proper(self, g) -> bool:
        adj = _adjacency(g)
        return all(self.colors[u] != self.colors[v] for u in range(len(adj)) for v in adj[u])


def _adjacency(g) -> list[set[int]]:
    if isinstance(g, SemiMpg):
        return g.embedding.adjacency()
    if isinstance(g, PlanarEmbedding):
        return g.adjacency()
    return [set(x) for x in g]


def _check_proper(m, f: Sequence[int]) -> None:
    adj = _adjacency(m)
    if len(f) != len(adj):
        raise ValueError("coloring length differs from vertex count")
    for v, c in enumerate(f):
        if c not in (1, 2, 3, 4):
            raise ColorOutOfRange(f"vertex {v} has color {c}")
    for u in range(len(adj)):
        for v in adj[u]:
            if f[u] == f[v]:
                raise NotProper(f"edge {u}-{v} joins two vertices colored {f[u]}")


def coloring_to_rgb(m: SemiMpg, f: Sequence[int] | VertexColoring) -> Tiling:
    f = tuple(f.colors if isinstance(f, VertexColoring) else f)
    _check_proper(m, f)
    return Tiling(m, tuple(PAIR_COLOR[frozenset((f[u], f[v]))] for u, v in m.edges))


def tiling_to_coloring(m: SemiMpg, t: Tiling, base: int = 0) -> VertexColoring:
    """Rebuild a 4-coloring from a grand R-tiling without red odd cycles.

    The part holding ``base`` takes colors {1, 3}, the other {2, 4}.  Inside a
    part each red component is 2-colored; the class of ``base`` (or else of the
    component's lowest vertex) takes the smaller color.
    """
    g = is_grand(t, Color.RED, base=base)
    if not g.grand:
        raise NotGrand(f"odd black cycle {g.witness.cycle}")
    odd = find_red_odd_cycle(t)
    if odd is not None:
        raise RedOddCycle(f"red odd cycle {odd}")
    red_adj: list[list[int]] = [[] for _ in range(m.n)]
    for (u, v), c in zip(m.edges, t.colors):
        if c == Color.RED:
            red_adj[u].append(v)
            red_adj[v].append(u)
    colors = [0] * m.n
    for comp in red_components(t):
        root = base if base in comp else comp[0]
        low, high = (1, 3) if root in g.partition.v13 else (2, 4)
        colors[root] = low
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in red_adj[v]:
                if not colors[w]:
                    colors[w] = high if colors[v] == low else low
                    queue.append(w)
    out = VertexColoring(tuple(colors))
    _check_proper(m, out.colors)
    return out


# ---------------------------------------------------------------------------
# Kempe chains


def kempe_component(m, f: Sequence[int], v: int, pair) -> set[int]:
    f = tuple(f.colors if isinstance(f, VertexColoring) else f)
    pair = set(pair)
    if f[v] not in pair:
        raise VertexNotInPair(f"vertex {v} has color {f[v]}, not in {sorted(pair)}")
    adj = _adjacency(m)
    comp = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in comp and f[y] in pair:
                comp.add(y)
                stack.append(y)
    return comp


def kempe_switch(m, f: Sequence[int], v: int, pair) -> VertexColoring:
    f = tuple(f.colors if isinstance(f, VertexColoring) else f)
    a, b = sorted(pair)
    comp = kempe_component(m, f, v, pair)
    return VertexColoring(tuple((b if c == a else a) if i in comp else c for i, c in enumerate(f)))


# ---------------------------------------------------------------------------
# brute force


def enumerate_4colorings(m, max_vertices: int = 16, colors: int = 4) -> Iterator[VertexColoring]:
    """Every proper coloring with colors 1..``colors`` (backtracking, small graphs only)."""
    adj = _adjacency(m)
    n = len(adj)
    if n > max_vertices:
        raise ResourceLimit(f"{n} vertices exceeds the brute-force limit of {max_vertices}")
    order = _search_order(adj)
    f = [0] * n

    def rec(i):
        if i == n:
            yield VertexColoring(tuple(f))
            return
        v = order[i]
        used = {f[w] for w in adj[v]}
        for c in range(1, colors + 1):
            if c not in used:
                f[v] = c
                yield from rec(i + 1)
        f[v] = 0

    yield from rec(0)


def _search_order(adj) -> list[int]:
    n = len(adj)
    order, seen = [], set()
    for s in range(n):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def count_4colorings(m, max_vertices: int = 16) -> int:
    return sum(1 for _ in enumerate_4colorings(m, max_vertices))


def find_4coloring(m, max_vertices: int = 64) -> VertexColoring | None:
    return next(iter(enumerate_4colorings(m, max_vertices)), None)


# ---------------------------------------------------------------------------
# degree-4 reduction


@dataclass
class Degree4Result:
    coloring: VertexColoring
    neighbors: tuple[int, ...]
    switched: tuple[int, int] | None
    disconnected_pairs: list[tuple[int, int]] = field(default_factory=list)


def _minus_vertex(m: SemiMpg, v: int) -> list[set[int]]:
    adj = m.embedding.adjacency()
    return [adj[u] - {v} if u != v else set() for u in range(m.n)]


def _disconnected_pairs(rest, f, nbrs) -> list[tuple[int, int]]:
    out = []
    for p, q in ((nbrs[0], nbrs[2]), (nbrs[1], nbrs[3])):
        if p not in kempe_component(rest, f, q, (f[p], f[q])):
            out.append((p, q))
    return out


def degree4_reduction_demo(
    m: SemiMpg, v: int, start: Sequence[int] | VertexColoring | None = None
) -> Degree4Result:
    """Extend a 4-coloring of ``m - v`` to ``m`` for a degree-4 vertex ``v``.

    The neighbours ``v1..v4`` are taken in rotation order.  Without ``start``
    the oracle picks the first coloring of ``m - v`` that spends all four
    colors on them, if there is one.  The coloring is renamed so that ``v_i``
    has color ``i``; then ``v1, v3`` (or else ``v2, v4``) are not joined by a
    two-colored chain, and switching that chain at the second vertex frees a
    color for ``v``.
    """
    nbrs = tuple(m.embedding.rot[v])
    if len(nbrs) != 4:
        raise ValueError(f"vertex {v} has degree {len(nbrs)}")
    rest = _minus_vertex(m, v)
    if start is None:
        first = None
        for c in enumerate_4colorings(rest, max_vertices=64):
            first = first or c
            if len({c[u] for u in nbrs}) == 4:
                first = c
                break
        start = first
    f = list(start.colors if isinstance(start, VertexColoring) else start)
    f[v] = 0
    used = {f[u] for u in nbrs}
    if len(used) < 4:
        f[v] = min({1, 2, 3, 4} - used)
        return Degree4Result(VertexColoring(tuple(f)), nbrs, None)
    rename = {f[u]: i + 1 for i, u in enumerate(nbrs)}
    f = [rename.get(c, c) for c in f]
    disconnected = _disconnected_pairs(rest, f, nbrs)
    p, q = disconnected[0]
    old = f[q]
    g = list(kempe_switch(rest, f, q, (f[p], f[q])).colors)
    g[v] = old
    out = VertexColoring(tuple(g))
    _check_proper(m, out.colors)
    return Degree4Result(out, nbrs, (p, q), disconnected)


def degree4_disconnection_profile(m: SemiMpg, v: int, max_vertices: int = 12) -> dict[int, int]:
    """How many diagonal pairs are chain-disconnected, tallied over every coloring of ``m - v``
    that spends all four colors on the neighbours of ``v``."""
    nbrs = tuple(m.embedding.rot[v])
    rest = _minus_vertex(m, v)
    tally = {0: 0, 1: 0, 2: 0}
    for c in enumerate_4colorings(rest, max_vertices=max_vertices):
        if c[v] != 1 or len({c[u] for u in nbrs}) < 4:
            continue
        tally[len(_disconnected_pairs(rest, c.colors, nbrs))] += 1
    return tally
