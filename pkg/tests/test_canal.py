import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rgbtiling.canal import (
    b1_repair,
    bank_triangle_identity,
    boundary_matching,
    build_canal_system,
    cycle_black_parity_equivalence,
    deja_vu_edges,
    is_grand,
    orient_canal_system,
    triangle_sides,
)
from rgbtiling.constructions import annulus, k4, k4_minus_edge, octahedron, wheel
from rgbtiling.embedding import classify, walk_edges
from rgbtiling.errors import HostNotSingleOuterFacet, NotARing, SharedOuterEdgesPresent
from rgbtiling.generator import enumerate_mpgs
from rgbtiling.tiling import Color, Tiling, enumerate_r_tilings, validate

import oracles

RUN = enumerate_mpgs(8)
K4_T = lambda: Tiling.from_edges(k4(), red=[(0, 2), (1, 3)])


def rim_tiling(k):
    return Tiling.from_edges(wheel(k), red=[(1 + i, 1 + (i + 1) % k) for i in range(k)])


def check_line_structure(sys):
    host = sys.host
    seen = []
    for line in sys.lines:
        assert len(set(line.triangles)) == len(line.triangles)
        seen += line.triangles
        for tri, a, b in line.steps():
            es = host.faces[tri].edges
            assert a in es and b in es and a != b
            assert sys.colored_edge(tri) not in (a, b)
        if line.kind == "ring":
            assert len(line.black_edges) == len(line.triangles)
        else:
            assert len(line.black_edges) == len(line.triangles) + 1
    assert sorted(seen) == sorted(host.inner_faces)


def test_k4_single_ring():
    sys = build_canal_system(K4_T())
    assert [(l.kind, len(l.triangles)) for l in sys.lines] == [("ring", 4)]
    check_line_structure(sys)


def test_mpgs_have_only_rings():
    for g in RUN.all():
        for t in enumerate_r_tilings(g):
            sys = build_canal_system(t)
            assert all(l.kind == "ring" for l in sys.lines)
            check_line_structure(sys)


def test_paths_end_on_boundary_black_edges(cuts7):
    for _, m in cuts7:
        for t in enumerate_r_tilings(m):
            sys = build_canal_system(t)
            check_line_structure(sys)
            for line in sys.lines:
                if line.kind == "path":
                    for e in (line.entrance, line.exit):
                        assert e in m.omega and t.color(*e) == Color.BLACK


def test_deja_vu():
    sys = build_canal_system(K4_T())
    assert sorted(deja_vu_edges(sys, 0)) == [(0, 2), (1, 3)]
    # each deja-vu edge has both its triangles on the line, and conversely
    for g in RUN.all(6, 8):
        for t in enumerate_r_tilings(g):
            sys = build_canal_system(t)
            for i, line in enumerate(sys.lines):
                tris = set(line.triangles)
                want = [e for e, a, b in sys.diamonds() if a in tris and b in tris]
                assert deja_vu_edges(sys, i) == want


def test_line_with_four_deja_vu_edges_exists():
    found = any(
        len(deja_vu_edges(build_canal_system(t), i)) == 4
        for g in RUN.all(6, 8)
        for t in enumerate_r_tilings(g)
        for i in range(len(build_canal_system(t).lines))
    )
    assert found


def test_boundary_matching():
    m = k4_minus_edge()
    for t in enumerate_r_tilings(m):
        sys = build_canal_system(t)
        bm = boundary_matching(sys)
        assert len(bm.order) in (2, 4)
        assert len(bm.pairs) == len(bm.order) // 2
        assert bm.non_crossing
    empty = boundary_matching(build_canal_system(rim_tiling(6)))
    assert empty.order == [] and empty.pairs == []


def test_boundary_matching_hexagon():
    w = wheel(6)
    spokes = [t for t in enumerate_r_tilings(w) if sum(t.color(*e) == Color.BLACK for e in w.omega) == 4]
    assert spokes
    for t in spokes:
        bm = boundary_matching(build_canal_system(t))
        assert len(bm.pairs) == 2 and bm.non_crossing
        assert {e for p in bm.pairs for e in p} == set(bm.order)


def test_boundary_matching_property(cuts7):
    for _, m in cuts7:
        for t in enumerate_r_tilings(m):
            bm = boundary_matching(build_canal_system(t))
            assert bm.non_crossing
            assert sorted(e for p in bm.pairs for e in p) == sorted(bm.order)


def test_boundary_matching_rejects_other_hosts():
    with pytest.raises(HostNotSingleOuterFacet):
        boundary_matching(build_canal_system(K4_T()))
    a = annulus("IOIOIOIOIO")
    with pytest.raises(HostNotSingleOuterFacet):
        boundary_matching(build_canal_system(next(enumerate_r_tilings(a))))


def test_grand_examples():
    g = is_grand(K4_T())
    assert g.grand and g.partition.v13 == {0, 2} and g.partition.v24 == {1, 3}
    assert is_grand(K4_T(), base=1).partition.v13 == {1, 3}
    for k in (4, 5, 6):
        assert is_grand(rim_tiling(k)).grand


def test_grand_matches_signed_coloring_oracle(annuli, cuts7):
    hosts = [m for _, m in annuli[:8]] + [m for _, m in cuts7[:20]] + RUN.all(4, 7)
    non_grand = 0
    for m in hosts:
        for t in enumerate_r_tilings(m):
            g = is_grand(t)
            black = [e for e in m.edges if t.color(*e) != Color.RED]
            side = oracles.signed_two_coloring(m.n, t.red, black)
            assert g.grand == (side is not None)
            if g.grand:
                part = g.partition
                for u, v in m.edges:
                    assert ((u in part.v13) == (v in part.v13)) == (t.color(u, v) == Color.RED)
            else:
                non_grand += 1
                w = g.witness
                k = len(w.cycle)
                assert len(w.black_edges) % 2 == 1 or w.kind == "red_edge_across"
                assert all(m.embedding.has_edge(w.cycle[i], w.cycle[(i + 1) % k]) for i in range(k))
    assert non_grand > 0


def same_hand(sys, signs):
    """Brute check of the antiparallel rule for a full assignment of line directions."""
    from dataclasses import replace

    hand = {}
    for line, s in zip(sys.lines, signs):
        ol = replace(line, orientation="forward" if s > 0 else "reverse")
        for tri, a, b in ol.steps():
            hand[tri] = triangle_sides(sys.host, tri, a, b)[2]
    return all(hand[a] == hand[b] for _, a, b in sys.diamonds())


def brute_orientations(sys):
    return [s for s in itertools.product((1, -1), repeat=len(sys.lines)) if same_hand(sys, s)]


def test_orient_k4():
    sys = build_canal_system(K4_T())
    assert len(brute_orientations(sys)) == 2
    o = orient_canal_system(sys)
    assert o.feasible and o.partition.v13 == {0, 2}
    assert orient_canal_system(sys, base=1).partition.v13 == {1, 3}


def test_orient_matches_brute_force_and_grandness(annuli):
    hosts = RUN.all(4, 7) + [m for _, m in annuli[:6]]
    for m in hosts:
        for t in enumerate_r_tilings(m):
            sys = build_canal_system(t)
            if len(sys.lines) > 10:
                continue
            o = orient_canal_system(sys)
            assert o.feasible == bool(brute_orientations(sys))
            assert o.feasible == is_grand(t).grand
            if o.feasible:
                signs = [1 if l.orientation == "forward" else -1 for l in o.lines]
                assert same_hand(sys, signs)
                assert o.partition.same_up_to_swap(is_grand(t).partition)
            else:
                assert o.conflict


def test_orient_octahedron_banks():
    for t in enumerate_r_tilings(octahedron()):
        o = orient_canal_system(build_canal_system(t))
        assert o.feasible and o.banks_consistent
        assert o.partition == is_grand(t).partition


def test_orient_rejects_shared_outer_edges():
    emb = octahedron().embedding
    b = emb.edge_faces(emb.faces[0].edges[0])[1]
    m = classify(emb, [0, b], True, True)
    with pytest.raises(SharedOuterEdgesPresent):
        orient_canal_system(build_canal_system(next(enumerate_r_tilings(m))))


def test_bank_identity_k4():
    rep = bank_triangle_identity(build_canal_system(K4_T()), 0)
    assert rep.triangles == 4
    assert (rep.e_right, rep.e_left) == (2, 2)
    assert rep.holds


def test_bank_identity_on_all_rings():
    for g in RUN.all():
        for t in enumerate_r_tilings(g):
            sys = build_canal_system(t)
            for i in range(len(sys.lines)):
                rep = bank_triangle_identity(sys, i)
                assert rep.holds
                assert rep.triangles == rep.bank_total


def test_bank_identity_rejects_paths():
    t = next(enumerate_r_tilings(k4_minus_edge()))
    sys = build_canal_system(t)
    path = next(i for i, l in enumerate(sys.lines) if l.kind == "path")
    with pytest.raises(NotARing):
        bank_triangle_identity(sys, path)


def test_parity_equivalence():
    for g in RUN.all(4, 7):
        for t in enumerate_r_tilings(g):
            rep = cycle_black_parity_equivalence(g, t)
            assert rep.cycles_even and rep.outer_faces_even and rep.grand and rep.agree


def test_parity_on_non_grand_annulus(annuli):
    bad = 0
    for _, m in annuli[:8]:
        for t in enumerate_r_tilings(m):
            rep = cycle_black_parity_equivalence(m, t)
            assert rep.agree
            if not rep.grand:
                bad += 1
                blacks = sum(1 for e in walk_edges(rep.odd_cycle) if t.color(*e) != Color.RED)
                assert blacks % 2 == 1
    assert bad


def test_parity_all_red_boundary():
    for k in (4, 5):
        t = rim_tiling(k)
        rep = cycle_black_parity_equivalence(t.host, t)
        assert rep.outer_faces_even and rep.cycles_even and rep.grand


def test_b1_repair():
    emb = octahedron().embedding
    b = emb.edge_faces(emb.faces[0].edges[0])[1]
    m = classify(emb, [0, b], True, True)
    (e,) = m.shared_outer_edges
    for t in enumerate_r_tilings(m, free="both"):
        r = b1_repair(t)
        if t.color(*e) == Color.RED:
            assert r.host.n == m.n + 1 and not r.host.free_edges
            assert validate(r).ok
        else:
            assert r is t
        rep = cycle_black_parity_equivalence(m, t)
        assert rep.b1_grand is not None and rep.agree


@settings(max_examples=25, deadline=None)
@given(st.integers(0, len(RUN.all(5, 8)) - 1), st.integers(0, 10_000), st.integers(0, 7))
def test_partition_independent_of_base(i, k, base):
    m = RUN.all(5, 8)[i]
    ts = list(enumerate_r_tilings(m))
    t = ts[k % len(ts)]
    base %= m.n
    p = is_grand(t, base=base).partition
    assert base in p.v13
    assert p.same_up_to_swap(is_grand(t).partition)
