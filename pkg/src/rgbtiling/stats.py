"""Degree statistics of MPGs and of the quadrangulation left by deleting one tiling color."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .embedding import PlanarEmbedding, SemiMpg
from .errors import NonQuadFace
from .tiling import Color, Tiling, validate


@dataclass
class DegreeTable:
    v_k: dict[int, int]
    V: int
    E: int
    F: int

    def __getitem__(self, k: int) -> int:
        return self.v_k.get(k, 0)

    def rows(self) -> list[tuple[int, int]]:
        if not self.v_k:
            return []
        return [(k, self[k]) for k in range(min(self.v_k), max(self.v_k) + 1)]


def degree_table(g: SemiMpg | PlanarEmbedding) -> DegreeTable:
    emb = g.embedding if isinstance(g, SemiMpg) else g
    counts = Counter(emb.degree(v) for v in range(emb.n))
    return DegreeTable(dict(sorted(counts.items())), emb.n, len(emb.edges), len(emb.faces))


def euler_degree_residual(table: DegreeTable) -> int:
    lhs = 4 * table[2] + 3 * table[3] + 2 * table[4] + table[5]
    rhs = 12 + sum((k - 6) * c for k, c in table.v_k.items() if k >= 7)
    return lhs - rhs


def verify_euler_degree_identity(m: SemiMpg) -> int:
    """``4V2 + 3V3 + 2V4 + V5 - 12 - sum_{k>=7} (k-6) Vk``; zero on every MPG."""
    if not m.is_mpg:
        raise ValueError("identity is stated for MPGs")
    return euler_degree_residual(degree_table(m))


@dataclass
class Quadrangulation:
    embedding: PlanarEmbedding
    dropped: Color
    table: DegreeTable
    residual: int
    counts_ok: bool


def quad_residual(table: DegreeTable) -> int:
    lhs = 2 * table[2] + table[3]
    rhs = 8 + sum((j - 4) * c for j, c in table.v_k.items() if j >= 5)
    return lhs - rhs


def black_quadrangulation(m: SemiMpg, t: Tiling, drop: Color = Color.RED) -> Quadrangulation:
    """Delete the ``drop`` edges of an RGB tiling; every face left must be a 4-gon."""
    drop = Color.parse(drop)
    if not m.is_mpg:
        raise ValueError("quadrangulation is taken on MPGs")
    rep = validate(t, "RGB")
    if not rep.ok:
        raise NonQuadFace(f"not an RGB tiling: triangle {rep.first.vertices} has {rep.first.reason}")
    gone = {e for e, c in zip(m.edges, t.colors) if c == drop}
    rot = [[w for w in r if (min(v, w), max(v, w)) not in gone] for v, r in enumerate(m.embedding.rot)]
    emb = PlanarEmbedding(rot)
    for f in emb.faces:
        if f.length != 4:
            raise NonQuadFace(f"face {f.vertices} has length {f.length}")
    table = degree_table(emb)
    ok = table.V == m.n and 3 * table.E == 2 * len(m.edges) and 2 * table.F == len(m.faces)
    return Quadrangulation(emb, drop, table, quad_residual(table), ok)


@dataclass
class RedDegreeTable:
    """Vertices by degree and by how many of their edges carry ``color`` (or avoid it)."""

    color: Color
    v_kj_bar: dict[tuple[int, int], int] = field(default_factory=dict)
    v_ki_red: dict[tuple[int, int], int] = field(default_factory=dict)

    def cross_identity_holds(self) -> bool:
        return all(self.v_ki_red[(k, i)] == self.v_kj_bar[(k, k - i)] for k, i in self.v_ki_red)

    def row_sums(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (k, _), c in self.v_ki_red.items():
            out[k] = out.get(k, 0) + c
        return out


def red_degree_table(m: SemiMpg, t: Tiling, color: Color = Color.RED) -> RedDegreeTable:
    """Row-complete counts: every ``(k, i)`` with ``0 <= i <= k`` for each degree ``k`` present."""
    color = Color.parse(color)
    colored = Counter()
    for (u, v), c in zip(m.edges, t.colors):
        if c == color:
            colored[u] += 1
            colored[v] += 1
    out = RedDegreeTable(color)
    degrees = sorted({m.embedding.degree(v) for v in range(m.n)})
    for k in degrees:
        for i in range(k + 1):
            out.v_ki_red[(k, i)] = 0
            out.v_kj_bar[(k, i)] = 0
    for v in range(m.n):
        k, i = m.embedding.degree(v), colored[v]
        out.v_ki_red[(k, i)] += 1
        out.v_kj_bar[(k, k - i)] += 1
    return out


@dataclass(frozen=True)
class BoundViolation:
    vertex: int
    color: Color
    degree: int
    colored_degree: int


def check_degree_bounds(m: SemiMpg, t: Tiling) -> list[BoundViolation]:
    """Per color: ``deg(v) % 2 <= deg_c(v) <= deg(v) // 2`` at every vertex.

    Equivalently ``ceil(deg/2) <= deg - deg_c <= deg - deg % 2`` for the edges
    avoiding the color.
    """
    out = []
    for c in (Color.RED, Color.GREEN, Color.BLUE):
        counts = Counter()
        for (u, v), x in zip(m.edges, t.colors):
            if x == c:
                counts[u] += 1
                counts[v] += 1
        for v in range(m.n):
            k = m.embedding.degree(v)
            if not (k % 2 <= counts[v] <= k // 2):
                out.append(BoundViolation(v, c, k, counts[v]))
    return out
