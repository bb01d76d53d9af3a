"""Canal systems dual to a single-color tiling, and the grandness checks built on them.

Inner triangles are the nodes of a canal system.  Every triangle has exactly
two black edges; crossing them links it to its neighbours, so the triangles
fall into rings and into paths that enter and leave through black edges on
outer facets.

Sides are measured against the traversal direction: the face of a dart lies
on its left, so when a line enters a triangle through one of its edges and
leaves through the next edge of the face walk, the corner between the two
edges is on its right and the colored edge on its left.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property

from .embedding import Edge, PlanarEmbedding, SemiMpg, cycle_basis, edge_key, simple_cycles, walk_edges
from .errors import HostNotSingleOuterFacet, NotARing, SharedOuterEdgesPresent
from .tiling import Color, Tiling, require_single_color, triangle_edge_ids


@dataclass(frozen=True)
class CanalLine:
    """A ring or path of triangles.

    ``black_edges[i]`` is the edge through which the line enters
    ``triangles[i]`` when traversed forward; a path carries one extra edge, its
    exit.  For a ring the entry of ``triangles[0]`` is the exit of the last one.
    """

    kind: str
    triangles: tuple[int, ...]
    black_edges: tuple[Edge, ...]
    orientation: str = "unset"

    @property
    def entrance(self) -> Edge | None:
        return self.black_edges[0] if self.kind == "path" else None

    @property
    def exit(self) -> Edge | None:
        return self.black_edges[-1] if self.kind == "path" else None

    @property
    def crossings(self) -> tuple[Edge, ...]:
        if self.kind == "path":
            return self.black_edges[1:-1]
        return self.black_edges[1:] + self.black_edges[:1]

    def steps(self) -> list[tuple[int, Edge, Edge]]:
        """``(triangle, in_edge, out_edge)`` in traversal order."""
        k = len(self.triangles)
        be = self.black_edges
        fwd = [(self.triangles[i], be[i], be[(i + 1) % len(be)]) for i in range(k)]
        if self.orientation == "reverse":
            return [(t, b, a) for t, a, b in reversed(fwd)]
        return fwd


@dataclass
class CanalSystem:
    tiling: Tiling
    color: Color
    lines: list[CanalLine]

    @property
    def host(self) -> SemiMpg:
        return self.tiling.host

    @cached_property
    def line_of_triangle(self) -> dict[int, int]:
        return {t: i for i, line in enumerate(self.lines) for t in line.triangles}

    @cached_property
    def colored(self) -> frozenset[Edge]:
        return frozenset(self.tiling.edges_of(self.color))

    def colored_edge(self, tri: int) -> Edge:
        for e in self.host.faces[tri].edges:
            if e in self.colored:
                return e
        raise AssertionError("triangle without colored edge")

    def diamonds(self) -> list[tuple[Edge, int, int]]:
        """Colored edges with an inner triangle on both sides."""
        idx = self.host.embedding.edge_index
        out = []
        for e in sorted(self.colored):
            ts = self.host.edge_triangles[idx[e]]
            if len(ts) == 2:
                out.append((e, ts[0], ts[1]))
        return out


def build_canal_system(t: Tiling, color: Color = Color.RED) -> CanalSystem:
    color = Color.parse(color)
    require_single_color(t, color)
    host = t.host
    idx = host.embedding.edge_index
    black: dict[int, tuple[Edge, Edge]] = {}
    for f in host.inner_faces:
        es = [e for e in host.faces[f].edges if t.colors[idx[e]] != color]
        black[f] = tuple(sorted(es))

    def other_side(e: Edge, f: int) -> int | None:
        ts = host.edge_triangles[idx[e]]
        rest = [g for g in ts if g != f]
        return rest[0] if rest else None

    used: set[int] = set()
    lines = []
    boundary = sorted(
        {e for f, es in black.items() for e in es if len(host.edge_triangles[idx[e]]) == 1}
    )
    seen_boundary: set[Edge] = set()
    for e0 in boundary:
        if e0 in seen_boundary:
            continue
        f = host.edge_triangles[idx[e0]][0]
        tris, edges = [], [e0]
        cur_in = e0
        while True:
            tris.append(f)
            used.add(f)
            a, b = black[f]
            out = b if a == cur_in else a
            edges.append(out)
            nxt = other_side(out, f)
            if nxt is None:
                break
            f, cur_in = nxt, out
        seen_boundary.update((e0, edges[-1]))
        lines.append(CanalLine("path", tuple(tris), tuple(edges)))
    for start in host.inner_faces:
        if start in used:
            continue
        tris, edges = [], []
        f = start
        cur_in = black[start][0]
        while True:
            tris.append(f)
            edges.append(cur_in)
            used.add(f)
            a, b = black[f]
            out = b if a == cur_in else a
            f = other_side(out, f)
            cur_in = out
            if f == start:
                break
        lines.append(CanalLine("ring", tuple(tris), tuple(edges)))
    return CanalSystem(t, color, lines)


def triangle_sides(host: SemiMpg, tri: int, in_edge: Edge, out_edge: Edge):
    """Return ``(right_vertices, left_vertices, colored_on_right)`` for one step."""
    face = host.faces[tri]
    es = face.edges
    i, j = es.index(in_edge), es.index(out_edge)
    apex = (set(in_edge) & set(out_edge)).pop()
    others = tuple(v for v in face.vertices if v != apex)
    if (i + 1) % 3 == j:
        return (apex,), others, False
    return others, (apex,), True


def deja_vu_edges(system: CanalSystem, line: CanalLine | int) -> list[Edge]:
    """Colored edges whose two triangles both lie on ``line`` (seen once from each side)."""
    if isinstance(line, int):
        line = system.lines[line]
    tris = set(line.triangles)
    return [e for e, a, b in system.diamonds() if a in tris and b in tris]


@dataclass
class Banks:
    right: list[Edge]
    left: list[Edge]
    right_vertices: set[int]
    left_vertices: set[int]


def banks(system: CanalSystem, line: CanalLine) -> Banks:
    """Colored edges (one entry per triangle) and vertices on each side of ``line``."""
    host = system.host
    right, left, rv, lv = [], [], set(), set()
    for tri, a, b in line.steps():
        r, l, on_right = triangle_sides(host, tri, a, b)
        rv.update(r)
        lv.update(l)
        (right if on_right else left).append(system.colored_edge(tri))
    return Banks(right, left, rv, lv)


@dataclass
class BankReport:
    """Triangles along a ring against red edges on its two banks.

    ``right``/``left`` list the colored edge met in each triangle; the bank
    counts take each distinct edge once, deja-vu edges twice.
    """

    triangles: int
    right: list[Edge]
    left: list[Edge]
    deja_vu: list[Edge]

    def _bank(self, seen: list[Edge]) -> int:
        distinct = set(seen)
        return len(distinct) + len(distinct & set(self.deja_vu))

    @property
    def e_right(self) -> int:
        return self._bank(self.right)

    @property
    def e_left(self) -> int:
        return self._bank(self.left)

    @property
    def bank_total(self) -> int:
        return self.e_right + self.e_left

    @property
    def polygon_sum(self) -> int:
        return self.bank_total - 2 * len(self.deja_vu)

    @property
    def holds(self) -> bool:
        return self.triangles == self.bank_total and self.triangles % 2 == self.polygon_sum % 2


def bank_triangle_identity(system: CanalSystem, line: CanalLine | int) -> BankReport:
    if isinstance(line, int):
        line = system.lines[line]
    if line.kind != "ring":
        raise NotARing("bank identity is stated for rings")
    b = banks(system, line)
    return BankReport(len(line.triangles), b.right, b.left, deja_vu_edges(system, line))


@dataclass
class BoundaryMatching:
    order: list[Edge]
    pairs: list[tuple[Edge, Edge]]
    non_crossing: bool


def boundary_matching(system: CanalSystem) -> BoundaryMatching:
    host = system.host
    if len(host.outer_facets) != 1:
        raise HostNotSingleOuterFacet(f"host is {host.kind}")
    (fid,) = host.outer_facets
    idx = host.embedding.edge_index
    order = []
    for e in host.faces[fid].edges:
        if system.tiling.colors[idx[e]] != system.color:
            if e not in order:
                order.append(e)
    pos = {e: i for i, e in enumerate(order)}
    pairs = []
    for line in system.lines:
        if line.kind == "path" and line.entrance in pos and line.exit in pos:
            pairs.append((line.entrance, line.exit))
    spans = [tuple(sorted((pos[a], pos[b]))) for a, b in pairs]
    ok = True
    for (a, b) in spans:
        for (c, d) in spans:
            if a < c < b < d:
                ok = False
    return BoundaryMatching(order, pairs, ok)


# ---------------------------------------------------------------------------
# grandness


@dataclass(frozen=True)
class Partition1324:
    v13: frozenset[int]
    v24: frozenset[int]

    def swapped(self) -> "Partition1324":
        return Partition1324(self.v24, self.v13)

    def same_up_to_swap(self, other: "Partition1324") -> bool:
        return self == other or self == other.swapped()


@dataclass
class Witness:
    """A closed walk carrying an odd number of black edges."""

    cycle: list[int]
    black_edges: list[Edge]
    kind: str  # "odd_black_cycle" or "red_edge_across"


@dataclass
class GrandResult:
    grand: bool
    partition: Partition1324 | None = None
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.grand


def is_grand(t: Tiling, color: Color = Color.RED, base: int = 0) -> GrandResult:
    """Decide whether black edges 2-color the vertices with colored edges inside parts.

    ``base`` lands in ``v13``.
    """
    color = Color.parse(color)
    require_single_color(t, color)
    host = t.host
    adj: list[list[tuple[int, int]]] = [[] for _ in range(host.n)]
    for (u, v), c in zip(host.edges, t.colors):
        p = 0 if c == color else 1
        adj[u].append((v, p))
        adj[v].append((u, p))
    side = [-1] * host.n
    parent: list[int | None] = [None] * host.n
    depth = [0] * host.n
    for s in [base] + [v for v in range(host.n) if v != base]:
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, p in sorted(adj[u]):
                if side[w] == -1:
                    side[w] = side[u] ^ p
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] != side[u] ^ p:
                    cyc = _tree_cycle(parent, depth, u, w)
                    black = [e for e in walk_edges(cyc) if t.colors[host.embedding.edge_index[e]] != color]
                    kind = "red_edge_across" if p == 0 else "odd_black_cycle"
                    return GrandResult(False, witness=Witness(cyc, black, kind))
    v13 = frozenset(v for v in range(host.n) if side[v] == 0)
    v24 = frozenset(v for v in range(host.n) if side[v] == 1)
    return GrandResult(True, partition=Partition1324(v13, v24))


def _tree_cycle(parent, depth, u, w) -> list[int]:
    a, b = [u], [w]
    while depth[a[-1]] > depth[b[-1]]:
        a.append(parent[a[-1]])
    while depth[b[-1]] > depth[a[-1]]:
        b.append(parent[b[-1]])
    while a[-1] != b[-1]:
        a.append(parent[a[-1]])
        b.append(parent[b[-1]])
    # a: u .. lca, b: w .. lca ; cycle u .. lca .. w (edge w-u closes it)
    return a + b[-2::-1]


@dataclass
class OrientedCanalSystem:
    feasible: bool
    lines: list[CanalLine]
    right_vertices: frozenset[int] = frozenset()
    left_vertices: frozenset[int] = frozenset()
    conflict: list[Edge] | None = None
    banks_consistent: bool = True

    def __bool__(self) -> bool:
        return self.feasible

    @property
    def partition(self) -> Partition1324 | None:
        if not self.feasible or not self.banks_consistent:
            return None
        return Partition1324(self.right_vertices, self.left_vertices)


def _step_signs(system: CanalSystem):
    """Forward-orientation side (+1 right, -1 left) of each triangle's colored edge and vertices."""
    host = system.host
    edge_sign = {}
    vertex_sign: dict[int, list[tuple[int, int]]] = {}
    for li, line in enumerate(system.lines):
        fwd = replace(line, orientation="forward")
        for tri, a, b in fwd.steps():
            r, l, on_right = triangle_sides(host, tri, a, b)
            edge_sign[tri] = 1 if on_right else -1
            for v in r:
                vertex_sign.setdefault(v, []).append((li, 1))
            for v in l:
                vertex_sign.setdefault(v, []).append((li, -1))
    return edge_sign, vertex_sign


def orient_canal_system(system: CanalSystem, base: int = 0) -> OrientedCanalSystem:
    """Orient every line so the currents on the two sides of each colored diamond are antiparallel.

    Antiparallel currents see their shared colored edge on the same hand, which
    makes this a parity problem on the lines.  Lines left free by the diamonds
    are aligned through shared bank vertices, and finally ``base`` is put on
    the right.
    """
    host = system.host
    if host.shared_outer_edges:
        raise SharedOuterEdgesPresent("orientation form needs hosts without shared outer edges")
    nl = len(system.lines)
    edge_sign, vertex_sign = _step_signs(system)
    # constraint graph: (other line, relative sign, diamond edge)
    cons: list[list[tuple[int, int, Edge]]] = [[] for _ in range(nl)]
    lot = system.line_of_triangle
    for e, t1, t2 in system.diamonds():
        l1, l2 = lot[t1], lot[t2]
        rel = edge_sign[t1] * edge_sign[t2]
        cons[l1].append((l2, rel, e))
        cons[l2].append((l1, rel, e))
    sign = [0] * nl
    via: list[tuple[int, Edge] | None] = [None] * nl
    comp = [-1] * nl
    ncomp = 0
    for s in range(nl):
        if sign[s]:
            continue
        sign[s] = 1
        comp[s] = ncomp
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b, rel, e in cons[a]:
                want = sign[a] * rel
                if not sign[b]:
                    sign[b] = want
                    via[b] = (a, e)
                    comp[b] = ncomp
                    queue.append(b)
                elif sign[b] != want:
                    chain = _chain(via, a) + [e] + _chain(via, b)[::-1]
                    return OrientedCanalSystem(False, list(system.lines), conflict=chain)
        ncomp += 1
    # align components through shared vertices
    flip = [0] * ncomp
    if nl:
        flip[comp[0]] = 1
    changed = True
    while changed:
        changed = False
        for v, occ in vertex_sign.items():
            known = [(li, s) for li, s in occ if flip[comp[li]]]
            if not known:
                continue
            li0, s0 = known[0]
            target = s0 * sign[li0] * flip[comp[li0]]
            for li, s in occ:
                c = comp[li]
                if not flip[c]:
                    flip[c] = target * s * sign[li]
                    changed = True
    for li in range(nl):
        sign[li] *= flip[comp[li]] or 1
    right, left = set(), set()
    for v, occ in vertex_sign.items():
        for li, s in occ:
            (right if s * sign[li] > 0 else left).add(v)
    if base in left and base not in right:
        sign = [-x for x in sign]
        right, left = left, right
    lines = [
        replace(line, orientation="forward" if sign[i] > 0 else "reverse")
        for i, line in enumerate(system.lines)
    ]
    return OrientedCanalSystem(
        True, lines, frozenset(right), frozenset(left), None, not (right & left)
    )


def _chain(via, a) -> list[Edge]:
    out = []
    while via[a] is not None:
        a, e = via[a]
        out.append(e)
    return out


# ---------------------------------------------------------------------------
# shared outer edges


def b1_repair(t: Tiling, color: Color = Color.RED) -> Tiling:
    """Give every colored edge shared by two outer facets a new half-tile.

    A new vertex is placed in the outer facet on the left of the edge and
    joined to both ends by black edges, so the edge now borders an inner
    triangle.  Returns the tiling on the enlarged host.
    """
    color = Color.parse(color)
    host = t.host
    emb = host.embedding
    targets = [e for e in sorted(host.shared_outer_edges) if t.color(*e) == color]
    if not targets:
        return t
    rot = [list(r) for r in emb.rot]
    inner_darts = {d for f in host.inner_faces for d in emb.faces[f].darts}
    new_edges = []
    for a, b in targets:
        w = len(rot)
        rot.append([a, b])
        rot[a].insert(rot[a].index(b) + 1, w)
        rot[b].insert(rot[b].index(a), w)
        inner_darts.add((a, b))
        new_edges += [edge_key(a, w), edge_key(b, w)]
    new = PlanarEmbedding(rot)
    outer = {i for i, f in enumerate(new.faces) if not (set(f.darts) & inner_darts)}
    m2 = SemiMpg(new, frozenset(outer), True, True)
    old = dict(zip(host.edges, t.colors))
    cols = tuple(old.get(e, Color.BLACK) for e in new.edges)
    return Tiling(m2, cols)


# ---------------------------------------------------------------------------
# parity equivalence


@dataclass
class ParityReport:
    cycles_even: bool
    outer_faces_even: bool
    grand: bool
    method: str
    cycles_checked: int
    odd_cycle: list[int] | None = None
    b1_grand: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        vals = {self.cycles_even, self.outer_faces_even, self.grand}
        if self.b1_grand is not None:
            vals.add(self.b1_grand)
        return len(vals) == 1


def black_count(t: Tiling, cycle, color: Color = Color.RED) -> int:
    idx = t.host.embedding.edge_index
    return sum(1 for e in walk_edges(cycle) if t.colors[idx[e]] != color)


def parity_cycles(m: SemiMpg, all_cycles_up_to: int = 12) -> tuple[list[list[int]], str]:
    """Every simple cycle on small hosts, a cycle basis on larger ones."""
    if m.n <= all_cycles_up_to:
        return simple_cycles(m), "all-cycles"
    return cycle_basis(m), "cycle-basis"


def cycle_black_parity_equivalence(
    m: SemiMpg,
    t: Tiling,
    color: Color = Color.RED,
    all_cycles_up_to: int = 12,
    cycles: tuple[list[list[int]], str] | None = None,
) -> ParityReport:
    """Evaluate: every cycle has an even number of black edges / every outer face does / grand.

    ``cycles`` lets callers reuse the output of :func:`parity_cycles` across tilings.
    """
    color = Color.parse(color)
    cycles, method = cycles or parity_cycles(m, all_cycles_up_to)
    black = {e for e, c in zip(m.edges, t.colors) if c != color}
    odd = None
    for c in cycles:
        if sum(1 for e in walk_edges(c) if e in black) % 2:
            odd = c
            break
    outer_even = all(
        sum(1 for e in m.faces[f].edges if t.color(*e) != color) % 2 == 0 for f in m.outer_facets
    )
    g = is_grand(t, color)
    rep = ParityReport(odd is None, outer_even, g.grand, method, len(cycles), odd)
    if m.shared_outer_edges:
        rep.b1_grand = is_grand(b1_repair(t, color), color).grand
        rep.notes.append("shared outer edges: grandness also decided on the B1-repaired host")
    return rep
