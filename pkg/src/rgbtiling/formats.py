"""Reading and writing graphs, tilings and colorings.

JSON is the native format.  ``planar_code`` is the binary format of common
triangulation generators: a header, then per graph the vertex count and each
vertex's neighbours (1-based, clockwise, zero-terminated).  Rotations here run
counter-clockwise, so lists are reversed on the way in and out.
"""

from __future__ import annotations

import json
import os
import struct
import tempfile
from pathlib import Path
from typing import Iterable, Iterator

from .embedding import PlanarEmbedding, SemiMpg, classify, edge_key
from .tiling import Color, Tiling

HEADER = b">>planar_code<<"
HEADER_LE = b">>planar_code le<<"
HEADER_BE = b">>planar_code be<<"


# ---------------------------------------------------------------------------
# JSON


def graph_to_dict(m: SemiMpg | PlanarEmbedding) -> dict:
    if isinstance(m, PlanarEmbedding):
        m = SemiMpg(m)
    out = {
        "n": m.n,
        "rot": [list(r) for r in m.embedding.rot],
        "outer": [list(c) for c in m.outer_cycles()],
    }
    if m.allow_3gon_outer:
        out["allow_3gon_outer"] = True
    if m.allow_shared_outer_edges:
        out["allow_shared_outer_edges"] = True
    return out


def graph_from_dict(d: dict) -> SemiMpg:
    rot = d["rot"]
    if "n" in d and d["n"] != len(rot):
        raise ValueError(f"n={d['n']} but {len(rot)} rotations given")
    emb = PlanarEmbedding(rot)
    outer = [tuple(c) for c in d.get("outer", [])]
    three = d.get("allow_3gon_outer", any(len(c) == 3 for c in outer))
    return classify(emb, outer, three, d.get("allow_shared_outer_edges", False))


def tiling_to_dict(t: Tiling) -> dict:
    return {"edges": [[u, v, c.value] for (u, v), c in zip(t.host.edges, t.colors)]}


def tiling_from_dict(host: SemiMpg, d: dict) -> Tiling:
    """Edges not listed are black."""
    idx = host.embedding.edge_index
    cols = [Color.BLACK] * len(host.edges)
    for u, v, c in d["edges"]:
        e = edge_key(u, v)
        if e not in idx:
            raise ValueError(f"{u}-{v} is not an edge of the host")
        cols[idx[e]] = Color.parse(c)
    return Tiling(host, tuple(cols))


def coloring_to_dict(colors: Iterable[int]) -> dict:
    return {"colors": [int(c) for c in colors]}


def coloring_from_dict(d: dict) -> tuple[int, ...]:
    return tuple(int(c) for c in d["colors"])


def read_json(path: str | os.PathLike) -> dict:
    with open(path) as fh:
        return json.load(fh)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_atomic(path: str | os.PathLike, data: str | bytes) -> None:
    """Write through a temporary file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, mode) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# planar_code


def write_planar_code(graphs: Iterable[SemiMpg | PlanarEmbedding], endian: str | None = None) -> bytes:
    """Encode embeddings; ``endian`` ("le"/"be") is only needed for graphs past 255 vertices."""
    graphs = [g.embedding if isinstance(g, SemiMpg) else g for g in graphs]
    big = any(g.n > 255 for g in graphs)
    if big and endian is None:
        endian = "le"
    header = {None: HEADER, "le": HEADER_LE, "be": HEADER_BE}[endian]
    out = bytearray(header)
    fmt = "<H" if endian != "be" else ">H"
    for g in graphs:
        if g.n > 255 or (endian and big):
            out += b"\x00" + struct.pack(fmt, g.n)
            for r in g.rot:
                for w in reversed(r):
                    out += struct.pack(fmt, w + 1)
                out += struct.pack(fmt, 0)
        else:
            out.append(g.n)
            for r in g.rot:
                out += bytes(w + 1 for w in reversed(r))
                out.append(0)
    return bytes(out)


def read_planar_code(data: bytes) -> Iterator[PlanarEmbedding]:
    fmt = "<H"
    if data.startswith(HEADER_LE):
        pos = len(HEADER_LE)
    elif data.startswith(HEADER_BE):
        pos, fmt = len(HEADER_BE), ">H"
    elif data.startswith(HEADER):
        pos = len(HEADER)
    else:
        pos = 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        wide = n == 0
        if wide:
            (n,) = struct.unpack_from(fmt, data, pos)
            pos += 2
        rot = []
        for _ in range(n):
            nb = []
            while True:
                if wide:
                    (w,) = struct.unpack_from(fmt, data, pos)
                    pos += 2
                else:
                    w = data[pos]
                    pos += 1
                if w == 0:
                    break
                nb.append(w - 1)
            rot.append(nb[::-1])
        yield PlanarEmbedding(rot)


# ---------------------------------------------------------------------------
# DOT

_DOT_COLOR = {Color.RED: "red", Color.GREEN: "green", Color.BLUE: "blue", Color.BLACK: "black"}


def to_dot(m: SemiMpg, t: Tiling | None = None, coloring=None) -> str:
    """Graphviz text; faces are listed as comments, edges touching color 1 are drawn thick."""
    lines = ["graph G {"]
    for i, f in enumerate(m.faces):
        tag = "outer" if i in m.outer_facets else "inner"
        lines.append(f"  // face {i} ({tag}): {' '.join(map(str, f.vertices))}")
    for v in range(m.n):
        label = f"{v}" if coloring is None else f"{v}:{coloring[v]}"
        lines.append(f'  {v} [label="{label}"];')
    for k, (u, v) in enumerate(m.edges):
        attrs = []
        if t is not None:
            attrs.append(f"color={_DOT_COLOR[t.colors[k]]}")
        if coloring is not None and 1 in (coloring[u], coloring[v]):
            attrs.append("penwidth=3")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
