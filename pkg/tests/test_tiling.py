import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rgbtiling.coloring import coloring_to_rgb, enumerate_4colorings
from rgbtiling.constructions import annulus, k4, k4_minus_edge, octahedron, wheel
from rgbtiling.embedding import classify, simple_cycles
from rgbtiling.errors import InvalidSingleColorTiling
from rgbtiling.generator import enumerate_mpgs
from rgbtiling.tiling import (
    RGB,
    Color,
    Tiling,
    all_even_or_all_odd,
    count_along,
    count_rgb_extensions,
    enumerate_r_tilings,
    extend_to_rgb,
    find_red_odd_cycle,
    red_components,
    require_single_color,
    validate,
)

import frozen
import oracles

RUN = enumerate_mpgs(8)


def red_sets(m, **kw):
    return [t.red for t in enumerate_r_tilings(m, **kw)]


def test_k4_tilings_are_perfect_matchings():
    got = set(red_sets(k4()))
    assert got == {
        frozenset({(0, 1), (2, 3)}),
        frozenset({(0, 2), (1, 3)}),
        frozenset({(0, 3), (1, 2)}),
    }


@pytest.mark.parametrize(
    "name, host",
    [("k4", k4), ("octahedron", octahedron), ("k4_minus_edge", k4_minus_edge), ("annulus_IOIOIOIOIO", lambda: annulus("IOIOIOIOIO"))],
)
def test_counts_match_brute_force(name, host):
    m = host()
    got = red_sets(m)
    assert len(got) == len(set(got)) == frozen.R_TILINGS[name]
    assert set(got) == oracles.brute_r_tilings(m)


def test_counts_by_size():
    for n, total in frozen.R_TILINGS_BY_N.items():
        assert sum(len(red_sets(g)) for g in RUN.classes_per_n[n]) == total


def test_icosahedron_matches_dual_matchings():
    from rgbtiling.constructions import icosahedron

    m = icosahedron()
    assert len(red_sets(m)) == frozen.R_TILINGS["icosahedron"] == oracles.dual_perfect_matchings(m)


def test_every_small_mpg_has_a_tiling():
    for g in RUN.all():
        assert next(enumerate_r_tilings(g), None) is not None


def test_cut_pieces_match_brute_force(cuts7):
    for _, m in cuts7[:30]:
        assert set(red_sets(m)) == oracles.brute_r_tilings(m)


def test_limit_and_determinism():
    m = octahedron()
    assert len(red_sets(m, limit=4)) == 4
    assert red_sets(m) == red_sets(m)


def test_free_edges_both_ways():
    emb = octahedron().embedding
    a, b = 0, emb.edge_faces(emb.faces[0].edges[0])[1]
    m = classify(emb, [a, b], True, True)
    assert len(m.free_edges) == 1
    assert set(red_sets(m, free="both")) == oracles.brute_r_tilings(m, free_black=False)
    assert set(red_sets(m)) == oracles.brute_r_tilings(m)
    e = m.edges[m.free_edges[0]]
    assert all(e in r for r in red_sets(m, pinned=[e]))


def test_validate_examples():
    m = k4()
    assert validate(Tiling.from_edges(m, red=[(0, 2), (1, 3)])).ok
    rep = validate(Tiling.from_edges(m, red=[(0, 1), (0, 2)]))
    assert not rep.ok and set(rep.first.vertices) == {0, 1, 2}
    t = Tiling.from_edges(m, red=[(0, 2), (1, 3)], green=[(0, 3), (1, 2)], blue=[(0, 1), (2, 3)])
    assert validate(t, "RGB").ok
    assert not validate(Tiling.from_edges(m, red=[(0, 2), (1, 3)]), "RGB").ok
    with pytest.raises(InvalidSingleColorTiling):
        require_single_color(Tiling.from_edges(m, red=[(0, 1), (0, 2)]))


def test_red_components():
    t = Tiling.from_edges(k4(), red=[(0, 2), (1, 3)])
    assert red_components(t) == [[0, 2], [1, 3]]
    for t in enumerate_r_tilings(octahedron()):
        assert red_components(t) == oracles.union_find_components(6, t.red)


def test_red_components_singletons():
    m = annulus("IOIOIOIOIO")
    t = next(enumerate_r_tilings(m))
    comps = red_components(t)
    touched = {v for e in t.red for v in e}
    assert [c for c in comps if len(c) == 1] == [[v] for v in range(m.n) if v not in touched]


def rim_tiling(k):
    w = wheel(k)
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return Tiling.from_edges(w, red=rim)


def test_red_odd_cycle():
    assert find_red_odd_cycle(Tiling.from_edges(k4(), red=[(0, 2), (1, 3)])) is None
    t = rim_tiling(5)
    assert validate(t).ok
    assert find_red_odd_cycle(t) == [1, 2, 3, 4, 5]
    assert find_red_odd_cycle(rim_tiling(6)) is None


def test_red_odd_cycle_against_bipartite_oracle(annuli):
    for _, m in annuli[:6]:
        for t in enumerate_r_tilings(m):
            cyc = find_red_odd_cycle(t)
            assert (cyc is None) == oracles.is_bipartite(m.n, t.red)
            if cyc is not None:
                assert len(cyc) % 2 == 1
                k = len(cyc)
                assert all(t.color(cyc[i], cyc[(i + 1) % k]) == Color.RED for i in range(k))


def test_extension_examples():
    t = Tiling.from_edges(k4(), red=[(0, 2), (1, 3)])
    assert count_rgb_extensions(t) == 2 == oracles.brute_rgb_extension_count(t.host, t.red)
    odd = rim_tiling(5)
    assert count_rgb_extensions(odd) == 0 == oracles.brute_rgb_extension_count(odd.host, odd.red)
    assert list(extend_to_rgb(odd)) == []


def test_extensions_against_brute_force():
    for g in RUN.all(4, 7):
        for t in enumerate_r_tilings(g):
            exts = list(extend_to_rgb(t))
            assert count_rgb_extensions(t) == len(exts) == oracles.brute_rgb_extension_count(g, t.red)
            assert len({e.colors for e in exts}) == len(exts)
            for e in exts:
                assert validate(e, "RGB").ok
                assert e.red == t.red


def test_third_color_is_determined():
    m = octahedron()
    for f in itertools.islice(enumerate_4colorings(m), 0, 96, 7):
        t = coloring_to_rgb(m, f)
        exts = list(extend_to_rgb(t.restrict(Color.RED)))
        assert t.colors in {e.colors for e in exts}
        fixed = [e for e in exts if e.edges_of(Color.GREEN) == t.edges_of(Color.GREEN)]
        assert [e.colors for e in fixed] == [t.colors]


def test_boundary_black_parity(cuts7):
    for _, m in cuts7:
        for t in enumerate_r_tilings(m):
            black = sum(1 for e in m.omega if t.color(*e) != Color.RED)
            assert black % 2 == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(RUN.all(4, 7)) - 1), st.integers(0, 10_000))
def test_rgb_cycle_parity_on_mpgs(i, k):
    m = RUN.all(4, 7)[i]
    rgbs = [e for t in enumerate_r_tilings(m) for e in extend_to_rgb(t)]
    if not rgbs:
        return
    t = rgbs[k % len(rgbs)]
    for cyc in simple_cycles(m):
        assert all_even_or_all_odd(count_along(t, cyc), len(cyc))


def test_count_along_k4_triangle():
    t = Tiling.from_edges(k4(), red=[(0, 2), (1, 3)], green=[(0, 3), (1, 2)], blue=[(0, 1), (2, 3)])
    c = count_along(t, [0, 1, 2])
    assert [c[x] for x in RGB] == [1, 1, 1]
    assert all_even_or_all_odd(c, 3)
