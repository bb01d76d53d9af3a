"""Exhaustive small-scale verification over generated and hand-built corpora.

Every verifier walks a corpus of ``(name, host)`` pairs and returns a
:class:`TheoremReport`.  Work is split per host, so ``jobs > 1`` farms hosts out
to a process pool; results are merged back in corpus order, which keeps the
JSON reports byte-stable.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator, Sequence

from .canal import (
    Partition1324,
    b1_repair,
    bank_triangle_identity,
    banks,
    boundary_matching,
    build_canal_system,
    cycle_black_parity_equivalence,
    deja_vu_edges,
    is_grand,
    orient_canal_system,
    parity_cycles,
)
from .coloring import (
    coloring_to_rgb,
    degree4_disconnection_profile,
    find_4coloring,
    tiling_to_coloring,
)
from .constructions import annulus, annulus_words, bipyramid, icosahedron, octahedron
from .embedding import Edge, PlanarEmbedding, SemiMpg, canonical_code, classify, cut_along_cycle, cycle_basis, find_nontrivial_cycles3, simple_cycles, walk_edges
from .errors import DomainError
from .formats import graph_to_dict, tiling_to_dict
from .generator import enumerate_mpgs
from .stats import black_quadrangulation, check_degree_bounds, red_degree_table, verify_euler_degree_identity
from .tiling import RGB, Color, Tiling, count_along, count_rgb_extensions, enumerate_r_tilings, extend_to_rgb, find_red_odd_cycle, red_components, validate

log = logging.getLogger(__name__)

Corpus = list[tuple[str, SemiMpg]]


# ---------------------------------------------------------------------------
# reports


@dataclass
class TheoremReport:
    theorem: str
    hosts: int = 0
    instances: int = 0
    passed: int = 0
    failed: int = 0
    one_piece_failed: int = 0
    first_counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)
    tallies: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hosts": self.hosts,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "one_piece_failed": self.one_piece_failed,
            "first_counterexample": self.first_counterexample,
            "notes": list(self.notes),
            "tallies": dict(sorted(self.tallies.items())),
        }


@dataclass
class _Outcome:
    instances: int = 0
    failed: int = 0
    first: dict | None = None
    tallies: Counter = field(default_factory=Counter)

    def check(self, ok: bool, detail: Callable[[], dict]) -> None:
        self.instances += 1
        if not ok:
            self.failed += 1
            if self.first is None:
                self.first = detail()


def _merge(theorem: str, outcomes: Iterable[_Outcome], corpus: Corpus) -> TheoremReport:
    rep = TheoremReport(theorem, hosts=len(corpus))
    tallies: Counter = Counter()
    for (_, m), o in zip(corpus, outcomes):
        rep.instances += o.instances
        rep.failed += o.failed
        if m.one_piece:
            rep.one_piece_failed += o.failed
        if rep.first_counterexample is None and o.first is not None:
            rep.first_counterexample = o.first
        tallies.update(o.tallies)
    rep.passed = rep.instances - rep.failed
    rep.tallies = dict(tallies)
    return rep


def _map(fn, items: Sequence, jobs: int = 1) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _run(theorem: str, fn, corpus: Corpus, jobs: int) -> TheoremReport:
    return _merge(theorem, _map(fn, corpus, jobs), corpus)


def host_artifact(name: str, m: SemiMpg) -> dict:
    return {"host": name, "graph": graph_to_dict(m)}


def tiling_artifact(name: str, t: Tiling, **extra) -> dict:
    return {"host": name, "graph": graph_to_dict(t.host), "tiling": tiling_to_dict(t), **extra}


# ---------------------------------------------------------------------------
# corpora


def mpg_corpus(max_n: int = 7, min_n: int = 4) -> Corpus:
    run = enumerate_mpgs(max_n)
    return [
        (f"mpg-n{n}-{i}", g)
        for n in range(min_n, max_n + 1)
        for i, g in enumerate(run.classes_per_n[n])
    ]


def cut_corpus(max_n: int = 7, max_cycle: int = 5, mpgs: Corpus | None = None) -> Corpus:
    """Single-facet pieces cut from small MPGs, one per isomorphism class.

    Cycles used: every vertex link, every non-facial triangle, and every
    simple cycle up to ``max_cycle`` long.
    """
    mpgs = mpg_corpus(max_n) if mpgs is None else mpgs
    seen: set[bytes] = set()
    out: Corpus = []
    for name, m in mpgs:
        cycles = [list(m.embedding.rot[v]) for v in range(m.n)]
        cycles += [list(c) for c in find_nontrivial_cycles3(m)]
        cycles += [c for c in simple_cycles(m, max_cycle) if len(c) >= 4]
        for cyc in cycles:
            try:
                halves = cut_along_cycle(m, cyc)
            except DomainError:
                continue
            for side, piece in zip(("in", "out"), halves):
                if piece.n > max_n or len(piece.inner_faces) < 2:
                    continue
                code = canonical_code(piece)
                if code in seen:
                    continue
                seen.add(code)
                out.append((f"cut-{name}-{'.'.join(map(str, cyc))}-{side}", piece))
    return out


def insert_in_triangle(m: SemiMpg, face: int) -> SemiMpg:
    """Put a new degree-3 vertex in an inner triangle of a semi-MPG."""
    emb = m.embedding
    x, y, z = emb.faces[face].vertices
    w = emb.n
    rot = [list(r) for r in emb.rot] + [[x, y, z]]
    rot[x].insert(rot[x].index(y) + 1, w)
    rot[y].insert(rot[y].index(z) + 1, w)
    rot[z].insert(rot[z].index(x) + 1, w)
    new = PlanarEmbedding(rot)
    return classify(new, m.outer_cycles(), m.allow_3gon_outer, m.allow_shared_outer_edges)


def annulus_corpus(
    shapes: Sequence[tuple[int, int]] = ((5, 5), (5, 7)), max_vertices: int = 12, insert: bool = True
) -> Corpus:
    """Two-facet bands, plus (optionally) each band with one extra inner vertex."""
    seen: set[bytes] = set()
    out: Corpus = []

    def add(name, g):
        if g.n > max_vertices:
            return
        code = canonical_code(g)
        if code not in seen:
            seen.add(code)
            out.append((name, g))

    for n1, n2 in shapes:
        for word in annulus_words(n1, n2):
            try:
                base = annulus(word)
            except DomainError:
                continue  # the band would repeat an edge
            add(f"annulus-{n1}-{n2}-{word}", base)
            if insert and base.n < max_vertices:
                for f in base.inner_faces:
                    add(f"annulus-{n1}-{n2}-{word}+{f}", insert_in_triangle(base, f))
    return out


def shared_edge_corpus() -> Corpus:
    """Hosts whose two 3-gon outer facets share an edge."""
    out: Corpus = []
    for name, g in (("octahedron", octahedron()), ("bipyramid5", bipyramid(5)), ("icosahedron", icosahedron())):
        emb = g.embedding
        f0 = emb.faces[0]
        a, b = f0.edges[0]
        other = next(i for i in emb.edge_faces((a, b)) if i != 0)
        out.append((f"shared-{name}", classify(emb, [0, other], True, True)))
    return out


# ---------------------------------------------------------------------------
# tiling helpers


def r_tilings(m: SemiMpg) -> Iterator[Tiling]:
    """Every R-tiling, letting edges on no inner triangle be red or black."""
    return enumerate_r_tilings(m, free="both")


def rgb_tilings(m: SemiMpg) -> Iterator[Tiling]:
    """Every RGB tiling: each R-tiling extended, leftover black edges taken green or blue."""
    for t in r_tilings(m):
        for ext in extend_to_rgb(t):
            loose = [i for i, c in enumerate(ext.colors) if c == Color.BLACK]
            for pick in itertools.product((Color.GREEN, Color.BLUE), repeat=len(loose)):
                cols = list(ext.colors)
                for i, c in zip(loose, pick):
                    cols[i] = c
                yield Tiling(m, tuple(cols))


def facet_rule(t: Tiling) -> bool:
    """On every outer facet the red, green and blue counts share the parity of its length."""
    m = t.host
    for f in m.outer_facets:
        cyc = m.faces[f].vertices
        counts = count_along(t, cyc)
        if not all(counts[c] % 2 == len(cyc) % 2 for c in RGB):
            return False
    return True


def cycle_rule(t: Tiling, basis: list[list[int]] | None = None) -> bool:
    """All-even/all-odd along every cycle.

    For a fixed color the rule says the other edges along the cycle are even in
    number, which adds up under symmetric difference; a cycle basis suffices.
    """
    basis = cycle_basis(t.host) if basis is None else basis
    for cyc in basis:
        counts = count_along(t, cyc)
        if not all(counts[c] % 2 == len(cyc) % 2 for c in RGB):
            return False
    return True


# ---------------------------------------------------------------------------
# peeling


@dataclass
class PeelStage:
    line: int
    kind: str
    orientation: str
    inherits: str  # "none", "right", "left" or "both"
    marked: list[int]
    deleted_black: list[Edge]
    deleted_red: list[Edge]


@dataclass
class PeelTrace:
    ok: bool
    case: str
    stages: list[PeelStage]
    partition: Partition1324 | None = None
    conflict: int | None = None


def peel_trace(t: Tiling, base: int = 0) -> PeelTrace:
    """Mark vertices line by line, the way the grandness proof peels a One Piece.

    The first line (a path if there is one) puts its right bank in ``v13`` and
    its left bank in ``v24``.  Each later line touches marked vertices; its
    orientation is chosen so its banks agree with the inherited marks, and the
    rest of its banks are marked accordingly.  The black edges it crosses and
    its deja-vu edges are then deleted.  A bank vertex carrying the wrong mark
    ends the trace.
    """
    system = build_canal_system(t, Color.RED)
    host = t.host
    if host.is_mpg:
        case = "B"
    else:
        bl = sum(1 for e in host.omega if t.color(*e) != Color.RED)
        case = "A1" if bl == 0 else "A2"
    lines = system.lines
    sides = []
    for line in lines:
        b = banks(system, replace(line, orientation="forward"))
        sides.append((b.right_vertices, b.left_vertices))
    on_line: dict[int, list[int]] = {}
    for i, (r, l) in enumerate(sides):
        for v in r | l:
            on_line.setdefault(v, []).append(i)

    mark: dict[int, int] = {}  # 0 = v13, 1 = v24
    stages: list[PeelStage] = []
    done = [False] * len(lines)
    paths = [i for i, line in enumerate(lines) if line.kind == "path"]
    seeds = paths + [i for i in range(len(lines)) if i not in paths]
    # put the base vertex on the right of the first line it lies on
    first = next((i for i in seeds if base in sides[i][0] | sides[i][1]), seeds[0] if seeds else None)
    queue = [first] if first is not None else []
    pending = list(seeds)
    while queue or pending:
        if not queue:
            nxt = next(i for i in pending if not done[i])
            queue.append(nxt)
        i = queue.pop(0)
        pending = [j for j in pending if j != i]
        if done[i]:
            continue
        done[i] = True
        r, l = sides[i]
        inh_r = {v: mark[v] for v in r if v in mark}
        inh_l = {v: mark[v] for v in l if v in mark}
        inherits = {(False, False): "none", (True, False): "right", (False, True): "left", (True, True): "both"}[
            (bool(inh_r), bool(inh_l))
        ]
        if inh_r:
            flip = inh_r[min(inh_r)]
        elif inh_l:
            flip = 1 - inh_l[min(inh_l)]
        else:
            flip = 0 if (base in r or base not in l) else 1
        marked = []
        for group, want in ((r, flip), (l, 1 - flip)):
            for v in sorted(group):
                if v in mark:
                    if mark[v] != want:
                        stages.append(PeelStage(i, lines[i].kind, "forward" if flip == 0 else "reverse", inherits, marked, [], []))
                        return PeelTrace(False, case, stages, None, v)
                else:
                    mark[v] = want
                    marked.append(v)
        stages.append(
            PeelStage(
                i,
                lines[i].kind,
                "forward" if flip == 0 else "reverse",
                inherits,
                marked,
                sorted(set(lines[i].black_edges)),
                deja_vu_edges(system, lines[i]),
            )
        )
        for v in r | l:
            for j in on_line[v]:
                if not done[j] and j not in queue:
                    queue.append(j)
    for v in range(host.n):
        if v not in mark:
            mark[v] = 0  # vertex on no inner triangle
    v13 = frozenset(v for v, s in mark.items() if s == 0)
    v24 = frozenset(v for v, s in mark.items() if s == 1)
    # every edge must respect the marks: black across, red within
    for (u, v), c in zip(host.edges, t.colors):
        if (mark[u] != mark[v]) != (c != Color.RED):
            return PeelTrace(False, case, stages, None, u)
    part = Partition1324(v13, v24)
    if base in part.v24:
        part = part.swapped()
    return PeelTrace(True, case, stages, part)


# ---------------------------------------------------------------------------
# verifiers: fundamental theorem v1


def _fundamental_v1(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    a = find_4coloring(m) is not None
    b = any(count_rgb_extensions(t) > 0 for t in r_tilings(m))
    c = any(find_red_odd_cycle(t) is None for t in r_tilings(m))
    o.tallies[f"abc={int(a)}{int(b)}{int(c)}"] += 1
    o.check(a == b == c, lambda: {**host_artifact(name, m), "a": a, "b": b, "c": c})
    return o


def verify_fundamental_v1(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """4-colorable == has an RGB tiling == has an R-tiling without red odd cycles."""
    return _run("fundamental-v1", _fundamental_v1, corpus, jobs)


# ---------------------------------------------------------------------------
# one piece grandness


def _one_piece(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    for t in r_tilings(m):
        g = is_grand(t)
        p = peel_trace(t)
        agree = g.grand and p.ok and p.partition.same_up_to_swap(g.partition)
        for s in p.stages[1:]:
            o.tallies[f"inherits-{s.inherits}"] += 1
        o.tallies[f"case-{p.case}"] += 1
        o.check(
            agree,
            lambda: tiling_artifact(
                name, t, grand=g.grand, peel_ok=p.ok, witness=g.witness.cycle if g.witness else None
            ),
        )
    return o


def verify_one_piece_grand(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """Every R-tiling of a One Piece host is grand, and the peeling reaches the same partition."""
    rep = _run("one-piece-grand", _one_piece, [(n, m) for n, m in corpus if m.one_piece], jobs)
    skipped = sum(1 for _, m in corpus if not m.one_piece)
    if skipped:
        rep.notes.append(f"{skipped} hosts with several outer facets skipped")
    rep.notes.append("tallies inherits-*: which banks of each later line already carried marks")
    return rep


# ---------------------------------------------------------------------------
# fundamental theorem v2


def _fundamental_v2(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    a = find_4coloring(m) is not None
    basis = cycle_basis(m)
    b = c = False
    for t in rgb_tilings(m):
        c = c or facet_rule(t)
        b = b or cycle_rule(t, basis)
        if b and c:
            break
    d = d_b1 = False
    for t in r_tilings(m):
        if find_red_odd_cycle(t) is not None:
            continue
        if is_grand(t).grand:
            d = True
            if m.shared_outer_edges:
                d_b1 = is_grand(b1_repair(t)).grand
            break
    if m.shared_outer_edges:
        o.tallies["b1-agrees"] += int(d_b1 == d)
    key = f"abcd={int(a)}{int(b)}{int(c)}{int(d)}"
    o.tallies[key] += 1
    o.check(a == b == c == d, lambda: {**host_artifact(name, m), "a": a, "b": b, "c": c, "d": d})
    # the route through (d) must actually produce a coloring
    if d:
        for t in r_tilings(m):
            if find_red_odd_cycle(t) is None and is_grand(t).grand:
                f = tiling_to_coloring(m, t)
                o.check(f.is_proper(m), lambda: tiling_artifact(name, t, coloring=list(f.colors)))
                break
    return o


def verify_fundamental_v2(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """4-colorable == cycle-parity RGB tiling == facet-parity RGB tiling == grand odd-cycle-free R-tiling."""
    rep = _run("fundamental-v2", _fundamental_v2, corpus, jobs)
    rep.notes.append("cycle condition checked on a cycle basis, which is exact for parity conditions")
    return rep


# ---------------------------------------------------------------------------
# canal lemmas


def _banks(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    for t in r_tilings(m):
        system = build_canal_system(t)
        for i, line in enumerate(system.lines):
            if line.kind != "ring":
                continue
            r = bank_triangle_identity(system, i)
            o.check(r.holds, lambda: tiling_artifact(name, t, line=i, triangles=r.triangles, banks=r.bank_total))
    return o


def verify_banks(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """Triangles along a ring equal its bank edges, deja-vu edges counted twice."""
    return _run("bank-triangles", _banks, corpus, jobs)


def _parity(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    cycles = parity_cycles(m)
    for t in r_tilings(m):
        r = cycle_black_parity_equivalence(m, t, cycles=cycles)
        o.tallies[f"grand={int(r.grand)}"] += 1
        o.check(r.agree, lambda: tiling_artifact(name, t, cycles_even=r.cycles_even, outer_even=r.outer_faces_even, grand=r.grand))
    return o


def verify_parity(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """Even black count on every cycle == on every outer face == grand."""
    return _run("black-parity", _parity, corpus, jobs)


def _boundary(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    for t in r_tilings(m):
        bl = sum(1 for e in m.omega if t.color(*e) != Color.RED)
        o.check(bl % 2 == 0, lambda: tiling_artifact(name, t, boundary_black=bl))
        if len(m.outer_facets) == 1:
            bm = boundary_matching(build_canal_system(t))
            o.check(bm.non_crossing, lambda: tiling_artifact(name, t, pairs=bm.pairs))
    return o


def verify_matching(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """Black boundary edges are even in number and canal paths pair them without crossings."""
    return _run("boundary-matching", _boundary, [(n, m) for n, m in corpus if not m.is_mpg], jobs)


def _omega_parity(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    for t in rgb_tilings(m):
        counts = {c: 0 for c in RGB}
        for e in m.omega:
            c = t.color(*e)
            if c in counts:
                counts[c] += 1
        par = len(m.omega) % 2
        o.check(all(v % 2 == par for v in counts.values()), lambda: tiling_artifact(name, t))
        if len(m.outer_facets) > 1:
            o.tallies["facet-rule-fails"] += int(not facet_rule(t))
            o.tallies["rgb-tilings"] += 1
    return o


def verify_rgb_boundary(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """Along all outer facets together, red, green and blue share the parity of the total length."""
    rep = _run("rgb-boundary", _omega_parity, [(n, m) for n, m in corpus if not m.is_mpg], jobs)
    rep.notes.append("facet-rule-fails counts RGB tilings breaking the per-facet rule; recorded, not asserted")
    return rep


def _extensions(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    for t in r_tilings(m):
        k = count_rgb_extensions(t)
        exts = list(extend_to_rgb(t))
        ok = k == len(exts) and all(validate(e, "RGB").ok for e in exts)
        o.check(ok, lambda: tiling_artifact(name, t, count=k, materialized=len(exts)))
    return o


def verify_extensions(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    return _run("rgb-extensions", _extensions, corpus, jobs)


def _stats(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    if not m.is_mpg:
        return o
    res = verify_euler_degree_identity(m)
    o.check(res == 0, lambda: {**host_artifact(name, m), "residual": res})
    for t in enumerate_r_tilings(m):
        for ext in extend_to_rgb(t):
            for drop in RGB:
                q = black_quadrangulation(m, ext, drop)
                o.check(q.residual == 0 and q.counts_ok, lambda: tiling_artifact(name, ext, drop=drop.value))
                o.check(red_degree_table(m, ext, drop).cross_identity_holds(), lambda: tiling_artifact(name, ext))
            bad = check_degree_bounds(m, ext)
            o.check(not bad, lambda: tiling_artifact(name, ext, vertex=bad[0].vertex))
    return o


def verify_stats(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    return _run("degree-identities", _stats, corpus, jobs)


def _round_trip(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    for t in r_tilings(m):
        if find_red_odd_cycle(t) is not None or not is_grand(t).grand:
            continue
        f = tiling_to_coloring(m, t)
        back = coloring_to_rgb(m, f)
        o.check(back.red == t.red, lambda: tiling_artifact(name, t, coloring=list(f.colors)))
    return o


def verify_round_trip(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """Colorings rebuilt from grand odd-cycle-free R-tilings give back the same red edges."""
    return _run("coloring-round-trip", _round_trip, corpus, jobs)


def _orientation(item) -> _Outcome:
    name, m = item
    o = _Outcome()
    if m.shared_outer_edges:
        return o
    for t in r_tilings(m):
        g = is_grand(t)
        ori = orient_canal_system(build_canal_system(t))
        ok = ori.feasible == g.grand
        if ok and g.grand:
            ok = ori.partition is not None and ori.partition.same_up_to_swap(g.partition)
        o.check(ok, lambda: tiling_artifact(name, t, grand=g.grand, oriented=ori.feasible))
    return o


def verify_orientation(corpus: Corpus, jobs: int = 1) -> TheoremReport:
    """Antiparallel orientation exists exactly for grand tilings, with v13 on the right banks."""
    return _run("orientation", _orientation, corpus, jobs)


# ---------------------------------------------------------------------------
# counterexamples on annuli


@dataclass
class HuntInstance:
    host_name: str
    tiling: Tiling
    witness_cycle: list[int]
    witness_black: list[Edge]
    red_components: int
    components_in_loop: int

    def to_dict(self) -> dict:
        return tiling_artifact(
            self.host_name,
            self.tiling,
            witness_cycle=self.witness_cycle,
            witness_black=[list(e) for e in self.witness_black],
            red_components=self.red_components,
            components_in_loop=self.components_in_loop,
        )


@dataclass
class HuntResult:
    hosts: int
    tilings: int
    instances: list[HuntInstance]

    @property
    def found(self) -> bool:
        return bool(self.instances)


def _components_in_loop(t: Tiling, cycle: list[int]) -> int:
    comp = {}
    for i, c in enumerate(red_components(t)):
        for v in c:
            comp[v] = i
    return len({comp[v] for v in cycle})


def _hunt(item) -> tuple[int, list[HuntInstance]]:
    name, m, per_host = item
    seen, found = 0, []
    for t in r_tilings(m):
        seen += 1
        if find_red_odd_cycle(t) is not None:
            continue
        g = is_grand(t)
        if g.grand:
            continue
        cyc = g.witness.cycle
        found.append(
            HuntInstance(
                name,
                t,
                cyc,
                g.witness.black_edges,
                len(red_components(t)),
                _components_in_loop(t, cyc),
            )
        )
        if per_host is not None and len(found) >= per_host:
            break
    return seen, found


def hunt_counterexample(
    shapes: Sequence[tuple[int, int]] = ((5, 5), (5, 7)),
    max_vertices: int = 12,
    insert: bool = False,
    per_host: int | None = 1,
    limit: int | None = None,
    corpus: Corpus | None = None,
    jobs: int = 1,
) -> HuntResult:
    """R-tilings without red odd cycles that still fail to be grand.

    Each instance carries the odd-black closed walk from :func:`is_grand` and
    the number of red components that walk threads through.
    """
    corpus = annulus_corpus(shapes, max_vertices, insert) if corpus is None else corpus
    results = _map(_hunt, [(n, m, per_host) for n, m in corpus], jobs)
    tilings = sum(r[0] for r in results)
    inst = [x for r in results for x in r[1]]
    if limit is not None:
        inst = inst[:limit]
    return HuntResult(len(corpus), tilings, inst)


def conquer_pair(m: SemiMpg) -> tuple[Tiling, Tiling] | None:
    """A non-grand and a grand R-tiling on the same host, both free of red odd cycles."""
    bad = good = None
    for t in r_tilings(m):
        if find_red_odd_cycle(t) is not None:
            continue
        if is_grand(t).grand:
            good = good or t
        else:
            bad = bad or t
        if bad and good:
            return bad, good
    return None


# ---------------------------------------------------------------------------
# frequency logs


def degree4_exactly_one(corpus: Corpus) -> dict[str, int]:
    """Tally of chain-disconnected diagonal pairs around degree-4 vertices."""
    tally = Counter()
    for _, m in corpus:
        if not m.is_mpg or m.n > 10:
            continue
        for v in range(m.n):
            if m.embedding.degree(v) == 4:
                for k, c in degree4_disconnection_profile(m, v).items():
                    tally[f"disconnected={k}"] += c
    return dict(sorted(tally.items()))


# ---------------------------------------------------------------------------
# suites

SUITES = {
    "v1": ("mpg+cut", [verify_fundamental_v1]),
    "one-piece": ("mpg+cut", [verify_one_piece_grand]),
    "v2": ("all", [verify_fundamental_v2]),
    "banks": ("all", [verify_banks]),
    "parity": ("all", [verify_parity]),
    "matching": ("all", [verify_matching, verify_rgb_boundary]),
    "extensions": ("mpg+cut", [verify_extensions, verify_round_trip, verify_orientation]),
    "stats": ("mpg", [verify_stats]),
}


@dataclass
class SuiteRun:
    reports: list[TheoremReport]
    one_piece_failures: list[str]
    logs: dict[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.one_piece_failures

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "one_piece_failures": self.one_piece_failures,
            "reports": [r.to_dict() for r in self.reports],
            "logs": self.logs,
        }


def run_suite(suite: str = "all", max_n: int = 8, jobs: int = 1, annuli: bool = True) -> SuiteRun:
    names = list(SUITES) if suite == "all" else [suite]
    for s in names:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}")
    mpgs = mpg_corpus(max_n)
    cuts = cut_corpus(max_n, mpgs=mpgs)
    extra = (annulus_corpus(insert=False) if annuli else []) + shared_edge_corpus()
    pools = {"mpg": mpgs, "mpg+cut": mpgs + cuts, "all": mpgs + cuts + extra}
    reports = []
    failures = []
    for s in names:
        pool, fns = SUITES[s]
        corpus = pools[pool]
        for fn in fns:
            log.info("suite %s: %s over %d hosts", s, fn.__name__, len(corpus))
            rep = fn(corpus, jobs)
            reports.append(rep)
            if rep.one_piece_failed:
                failures.append(rep.theorem)
    logs = {}
    if suite == "all":
        logs["degree4-disconnected-pairs"] = degree4_exactly_one(mpgs)
    return SuiteRun(reports, failures, logs)
