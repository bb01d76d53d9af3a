import pytest

from rgbtiling.constructions import k4, k4_minus_edge, octahedron
from rgbtiling.embedding import canonical_code, find_nontrivial_cycles3
from rgbtiling.errors import BoundaryEdge, NotFlippable, ResourceLimit
from rgbtiling.generator import enumerate_mpgs, flip_edge, flippable_edges, insert_vertex, _flip_closure

import oracles

RUN = enumerate_mpgs(9)


def test_counts_match_oeis():
    assert RUN.counts() == {n: oracles.A000109[n] for n in range(4, 10)}


def test_counts_match_networkx_enumeration():
    assert oracles.networkx_mpg_classes(8) == {n: RUN.counts()[n] for n in range(4, 9)}


def test_n4_is_k4():
    (g,) = RUN.classes_per_n[4]
    assert canonical_code(g) == canonical_code(k4())


def test_every_class_is_valid_mpg():
    for g in RUN.all():
        assert g.is_mpg
        assert len(g.edges) == 3 * g.n - 6
        assert min(g.embedding.degree(v) for v in range(g.n)) >= 3


def test_codes_distinct_within_size():
    for n, graphs in RUN.classes_per_n.items():
        assert len({canonical_code(g) for g in graphs}) == len(graphs)


def test_flip_octahedron_gives_other_class():
    o = octahedron()
    other = {canonical_code(g) for g in RUN.classes_per_n[6]} - {canonical_code(o)}
    for e in o.edges:
        assert canonical_code(flip_edge(o, e)) in other


def test_k4_not_flippable():
    m = k4()
    assert flippable_edges(m) == []
    for e in m.edges:
        with pytest.raises(NotFlippable):
            flip_edge(m, e)


def test_flip_non_edge():
    with pytest.raises(NotFlippable):
        flip_edge(octahedron(), (0, 5))


def test_flip_on_semi_mpg_rejected():
    with pytest.raises(BoundaryEdge):
        flip_edge(k4_minus_edge(), (0, 2))


def test_flip_involution():
    for g in RUN.all(5, 8):
        for e in flippable_edges(g):
            h = flip_edge(g, e)
            u, v = e
            a = g.embedding.next_dart(u, v)[1]
            b = g.embedding.next_dart(v, u)[1]
            assert canonical_code(flip_edge(h, (min(a, b), max(a, b)))) == canonical_code(g)


def test_insert_vertex():
    m = insert_vertex(k4(), 0)
    assert canonical_code(m) == canonical_code(RUN.classes_per_n[5][0])
    twice = insert_vertex(m, len(m.faces) - 1)
    assert (twice.n, len(twice.edges), len(twice.faces)) == (6, 12, 8)
    assert find_nontrivial_cycles3(twice)


def test_flip_closure_from_single_class():
    for n in (7, 8):
        for seed in RUN.classes_per_n[n]:
            assert len(_flip_closure([seed], None)) == len(RUN.classes_per_n[n])


def test_resource_limit():
    with pytest.raises(ResourceLimit):
        enumerate_mpgs(9, max_classes=20)
