import json

import pytest

from rgbtiling.coloring import coloring_to_rgb
from rgbtiling.constructions import annulus, bipyramid, icosahedron, k4, k4_minus_edge, octahedron
from rgbtiling.embedding import canonical_code, classify
from rgbtiling.formats import (
    coloring_from_dict,
    coloring_to_dict,
    dumps,
    graph_from_dict,
    graph_to_dict,
    read_json,
    read_planar_code,
    tiling_from_dict,
    tiling_to_dict,
    to_dot,
    write_atomic,
    write_planar_code,
)
from rgbtiling.generator import enumerate_mpgs
from rgbtiling.tiling import enumerate_r_tilings


def shared_host():
    emb = octahedron().embedding
    b = emb.edge_faces(emb.faces[0].edges[0])[1]
    return classify(emb, [0, b], True, True)


@pytest.mark.parametrize("host", [k4, octahedron, k4_minus_edge, lambda: annulus("IOIOIOIOIO"), shared_host])
def test_graph_json_round_trip(host):
    m = host()
    d = json.loads(dumps(graph_to_dict(m)))
    back = graph_from_dict(d)
    assert back.embedding == m.embedding
    assert back.outer_facets == m.outer_facets
    assert back.kind == m.kind
    assert dumps(graph_to_dict(back)) == dumps(d)


def test_graph_json_rejects_wrong_n():
    d = graph_to_dict(k4())
    d["n"] = 5
    with pytest.raises(ValueError):
        graph_from_dict(d)


def test_tiling_and_coloring_json():
    m = octahedron()
    for t in enumerate_r_tilings(m):
        assert tiling_from_dict(m, json.loads(dumps(tiling_to_dict(t)))).colors == t.colors
    assert coloring_from_dict(coloring_to_dict((1, 2, 3, 4))) == (1, 2, 3, 4)
    with pytest.raises(ValueError):
        tiling_from_dict(k4_minus_edge(), {"edges": [[0, 1, "R"]]})


def test_planar_code_round_trip():
    graphs = enumerate_mpgs(8).all()
    data = write_planar_code(graphs)
    back = list(read_planar_code(data))
    assert [b for b in back] == [g.embedding for g in graphs]
    assert write_planar_code(back) == data


def test_planar_code_is_clockwise():
    data = write_planar_code([k4()])
    (emb,) = read_planar_code(data)
    assert emb == k4().embedding
    # first vertex's list on disk is its counter-clockwise rotation reversed
    start = data.index(b"\x04", 0) + 1
    assert list(data[start:start + 3]) == [w + 1 for w in reversed(k4().embedding.rot[0])]


@pytest.mark.parametrize("endian", ["le", "be"])
def test_planar_code_wide(endian):
    big = bipyramid(300)
    data = write_planar_code([big, icosahedron()], endian=endian)
    a, b = read_planar_code(data)
    assert a == big.embedding and b == icosahedron().embedding
    assert write_planar_code([a, b], endian=endian) == data


def test_planar_code_preserves_canonical_class():
    for g in enumerate_mpgs(7).all():
        (emb,) = read_planar_code(write_planar_code([g]))
        assert canonical_code(classify(emb)) == canonical_code(g)


def test_atomic_write(tmp_path):
    p = tmp_path / "sub" / "out.json"
    write_atomic(p, dumps({"a": 1}))
    assert read_json(p) == {"a": 1}
    write_atomic(p, b"raw")
    assert p.read_bytes() == b"raw"
    assert sorted(x.name for x in p.parent.iterdir()) == ["out.json"]


def test_dot_export():
    m = k4()
    f = (1, 2, 3, 4)
    t = coloring_to_rgb(m, f)
    dot = to_dot(m, t, f)
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert dot.count("penwidth=3") == 3
    assert dot.count("// face") == 4
    assert "color=red" in dot and "color=green" in dot and "color=blue" in dot
    plain = to_dot(m)
    assert "color=" not in plain and "penwidth" not in plain
