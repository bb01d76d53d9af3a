import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rgbtiling.constructions import annulus, cube, cycle_graph, icosahedron, k4, k4_minus_edge, octahedron, stacked_k4, wheel
from rgbtiling.embedding import (
    PlanarEmbedding,
    SemiMpg,
    build_embedding,
    canonical_code,
    classify,
    cut_along_cycle,
    find_nontrivial_cycles3,
    triangulate,
)
from rgbtiling.errors import (
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
from rgbtiling.generator import enumerate_mpgs, insert_vertex

import oracles

RUN = enumerate_mpgs(9)


def vef(m):
    emb = m.embedding if isinstance(m, SemiMpg) else m
    return emb.n, len(emb.edges), len(emb.faces)


@pytest.mark.parametrize(
    "host, expected",
    [(k4, (4, 6, 4)), (octahedron, (6, 12, 8)), (icosahedron, (12, 30, 20))],
)
def test_named_solids(host, expected):
    m = host()
    assert vef(m) == expected
    assert all(f.length == 3 for f in m.faces)


def test_build_from_rotations():
    emb = build_embedding([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
    assert vef(emb) == (4, 6, 4)


def test_rejects_self_loop_and_repeat():
    with pytest.raises(NotSimple):
        PlanarEmbedding([[0, 1], [0]])
    with pytest.raises(NotSimple):
        PlanarEmbedding([[1, 1], [0, 0]])


def test_rejects_one_sided_pair():
    with pytest.raises(InconsistentRotation):
        PlanarEmbedding([[1, 2], [0, 2], [1]])


def test_rejects_disconnected():
    with pytest.raises(NotConnected):
        PlanarEmbedding([[1], [0], [3], [2]])


def test_rejects_torus_rotation():
    # K5 has no sphere embedding: any rotation system fails Euler
    rot = [[j for j in range(5) if j != i] for i in range(5)]
    with pytest.raises(NotPlanarEmbedding):
        PlanarEmbedding(rot)


def test_classify_examples():
    m = classify(k4().embedding)
    assert m.kind == "MPG" and m.one_piece
    s = k4_minus_edge()
    assert s.kind == "4-semi-MPG" and s.one_piece
    a = annulus("IOIOIOIOIO")
    assert a.kind == "(5,5)-semi-MPG" and not a.one_piece
    assert len(a.omega) == 10


def test_classify_errors():
    emb = cube()
    with pytest.raises(NonTriangleInnerFace):
        classify(emb, [])
    with pytest.raises(ForbiddenSmallOuterFace):
        classify(k4().embedding, [0])
    emb = octahedron().embedding
    a, b = 0, emb.edge_faces(emb.faces[0].edges[0])[1]
    with pytest.raises(ForbiddenSharedOuterEdge):
        classify(emb, [a, b], allow_3gon_outer=True)
    shared = classify(emb, [a, b], allow_3gon_outer=True, allow_shared_outer_edges=True)
    assert len(shared.shared_outer_edges) == 1
    assert len(shared.omega) == 6


def test_nontrivial_triangles():
    assert find_nontrivial_cycles3(icosahedron()) == []
    assert find_nontrivial_cycles3(k4()) == []
    assert find_nontrivial_cycles3(stacked_k4()) == [(0, 1, 2)]


def test_nontrivial_triangles_brute_force():
    for m in RUN.all(4, 8):
        adj = m.embedding.adjacency()
        faces = {frozenset(f.vertices) for f in m.faces}
        brute = [
            t for t in itertools.combinations(range(m.n), 3)
            if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]] and frozenset(t) not in faces
        ]
        assert sorted(find_nontrivial_cycles3(m)) == brute


def test_cut_octahedron_equator():
    cut = cut_along_cycle(octahedron(), [1, 2, 3, 4])
    for side in cut:
        assert side.kind == "4-semi-MPG"
        assert len(side.inner_faces) == 4


def test_cut_facial_triangle():
    m = k4()
    inside, outside = cut_along_cycle(m, list(m.faces[0].vertices))
    assert len(inside.inner_faces) == 1
    assert len(outside.inner_faces) == 3


def test_cut_stacked_triangle():
    a, b = cut_along_cycle(stacked_k4(), [0, 1, 2])
    assert a.kind == b.kind == "3-semi-MPG"
    assert len(a.inner_faces) + len(b.inner_faces) == 6
    assert len(a.inner_faces) == len(b.inner_faces) == 3


def test_cut_errors():
    with pytest.raises(NotACycle):
        cut_along_cycle(octahedron(), [1, 3, 2])
    emb = octahedron().embedding
    a, b = 0, emb.edge_faces(emb.faces[0].edges[0])[1]
    shared = classify(emb, [a, b], True, True)
    u, v = emb.faces[0].edges[0]
    w = next(x for x in emb.adjacency()[u] & emb.adjacency()[v])
    third = next(x for x in range(emb.n) if x in emb.adjacency()[u] and x in emb.adjacency()[v] and x != w)
    with pytest.raises(CycleUsesSharedOuterEdge):
        cut_along_cycle(shared, [u, v, third])


@pytest.mark.parametrize("m", RUN.all(6, 7), ids=str)
def test_cut_partitions_faces(m):
    for cyc in oracles.all_simple_cycles(m.n, m.edges):
        inside, outside = cut_along_cycle(m, cyc)
        tri = lambda s: sorted(tuple(sorted(s.faces[f].vertices)) for f in s.inner_faces)
        lab = lambda s, t: tuple(sorted(s.labels[v] for v in t))
        got = sorted([lab(inside, t) for t in tri(inside)] + [lab(outside, t) for t in tri(outside)])
        assert got == sorted(tuple(sorted(f.vertices)) for f in m.faces)
        edges = sorted(
            [tuple(sorted((inside.labels[u], inside.labels[v]))) for u, v in inside.edges]
            + [tuple(sorted((outside.labels[u], outside.labels[v]))) for u, v in outside.edges]
        )
        k = len(cyc)
        cyc_edges = sorted(tuple(sorted((cyc[i], cyc[(i + 1) % k]))) for i in range(k))
        assert edges == sorted(list(m.edges) + cyc_edges)


def test_triangulate_examples():
    t = triangulate(cycle_graph(4))
    assert canonical_code(t) == canonical_code(k4())
    c = triangulate(cube())
    assert vef(c) == (8, 18, 12) and c.is_mpg
    assert set(cube().edges) <= set(c.edges)
    ico = icosahedron()
    assert triangulate(ico).embedding == ico.embedding
    with pytest.raises(CannotTriangulateSimply):
        triangulate(PlanarEmbedding([[1], [0]]))


def test_triangulate_wheels_and_cycles():
    for k in range(3, 9):
        t = triangulate(cycle_graph(k))
        assert t.is_mpg and len(t.edges) == 3 * k - 6
        w = wheel(k)
        tw = triangulate(w.embedding)
        assert set(w.edges) <= set(tw.edges)


def test_canonical_code_examples():
    a, b = RUN.classes_per_n[6]
    assert canonical_code(a) != canonical_code(b)
    other = insert_vertex(stacked_k4(), 0)  # has a degree-3 vertex, unlike the octahedron
    codes = {canonical_code(octahedron()), canonical_code(other)}
    assert codes == {canonical_code(a), canonical_code(b)}
    for g in RUN.classes_per_n[9]:
        assert canonical_code(SemiMpg(g.embedding.mirror())) == canonical_code(g)


def test_canonical_code_relabeled_k4():
    for perm in itertools.permutations(range(4)):
        assert canonical_code(SemiMpg(k4().embedding.relabel(perm))) == canonical_code(k4())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, len(RUN.all(4, 9)) - 1), st.randoms(use_true_random=False), st.booleans())
def test_canonical_code_invariant(i, rnd, mirror):
    m = RUN.all(4, 9)[i]
    perm = list(range(m.n))
    rnd.shuffle(perm)
    emb = m.embedding.relabel(perm)
    if mirror:
        emb = emb.mirror()
    assert canonical_code(SemiMpg(emb)) == canonical_code(m)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(RUN.all(4, 9)) - 1))
def test_euler_and_face_lengths(i):
    m = RUN.all(4, 9)[i]
    V, E, F = vef(m)
    assert V - E + F == 2
    assert sum(f.length for f in m.faces) == 2 * E
    assert E == 3 * V - 6 and F == 2 * V - 4


@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(RUN.all(5, 8)) - 1), st.randoms(use_true_random=False))
def test_triangulate_after_edge_deletion(i, rnd):
    m = RUN.all(5, 8)[i]
    edges = list(m.edges)
    rnd.shuffle(edges)
    rot = [list(r) for r in m.embedding.rot]
    kept = set(edges)
    for u, v in edges[: len(edges) // 3]:
        rot2 = [list(r) for r in rot]
        rot2[u].remove(v)
        rot2[v].remove(u)
        try:
            PlanarEmbedding(rot2)
        except Exception:
            continue
        rot = rot2
        kept.discard((u, v))
    g = PlanarEmbedding(rot)
    t = triangulate(g)
    assert t.is_mpg
    assert set(g.edges) <= set(t.edges)
