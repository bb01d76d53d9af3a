"""Hand-built hosts used by tests, demos and the verification corpus."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .embedding import PlanarEmbedding, SemiMpg, classify, from_faces


def k4() -> SemiMpg:
    return SemiMpg(from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]))


def octahedron() -> SemiMpg:
    # 0 top, 1..4 equator, 5 bottom
    faces = []
    for i in range(4):
        a, b = 1 + i, 1 + (i + 1) % 4
        faces.append((0, a, b))
        faces.append((5, b, a))
    return SemiMpg(from_faces(faces))


def icosahedron() -> SemiMpg:
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    faces = []
    for i in range(5):
        u0, u1 = 1 + i, 1 + (i + 1) % 5
        l0, l1 = 6 + i, 6 + (i + 1) % 5
        faces += [(0, u0, u1), (u0, l0, u1), (u1, l0, l1), (11, l1, l0)]
    return SemiMpg(from_faces(faces))


def bipyramid(k: int) -> SemiMpg:
    """Double wheel over a ``k``-cycle (``k + 2`` vertices)."""
    faces = []
    for i in range(k):
        a, b = 1 + i, 1 + (i + 1) % k
        faces.append((0, a, b))
        faces.append((k + 1, b, a))
    return SemiMpg(from_faces(faces))


def stacked_k4() -> SemiMpg:
    """K4 with a fifth vertex (4) inserted in face 0-1-2; the triangle 0-1-2 becomes separating."""
    return SemiMpg(from_faces([(0, 2, 3), (0, 3, 1), (1, 3, 2), (0, 1, 4), (1, 2, 4), (2, 0, 4)]))


def cycle_graph(k: int) -> PlanarEmbedding:
    return from_faces([tuple(range(k)), tuple(reversed(range(k)))])


def cube() -> PlanarEmbedding:
    # bottom square 0..3, top square 4..7
    faces = [
        (0, 3, 2, 1),
        (4, 5, 6, 7),
        (0, 1, 5, 4),
        (1, 2, 6, 5),
        (2, 3, 7, 6),
        (3, 0, 4, 7),
    ]
    return from_faces(faces)


def k4_minus_edge() -> SemiMpg:
    """K4 without edge 0-1, as a 4-semi-MPG with outer facet 0-2-1-3."""
    emb = from_faces([(0, 2, 3), (1, 3, 2), (0, 3, 1, 2)])
    return classify(emb, [(0, 3, 1, 2)])


def wheel(k: int) -> SemiMpg:
    """Hub 0 with rim 1..k, as a ``k``-semi-MPG (rim is the outer facet)."""
    faces = [(0, 1 + i, 1 + (i + 1) % k) for i in range(k)]
    rim = tuple(1 + (i % k) for i in range(k, 0, -1))
    emb = from_faces(faces + [rim])
    return classify(emb, [rim], allow_3gon_outer=(k == 3))


def annulus(steps: Sequence[str]) -> SemiMpg:
    """Band of triangles between an inner and an outer cycle.

    ``steps`` is a cyclic word over ``"I"`` / ``"O"``: each ``I`` adds a
    triangle with its base on the inner cycle, each ``O`` one with its base on
    the outer cycle.  Inner vertices are ``0..n1-1``, outer ``n1..n1+n2-1``.
    """
    n1 = steps.count("I")
    n2 = steps.count("O")
    a = lambda i: i % n1
    b = lambda j: n1 + j % n2
    faces = [tuple(a(i) for i in range(n1)), tuple(b(j) for j in reversed(range(n2)))]
    i = j = 0
    for s in steps:
        if s == "I":
            faces.append((a(i + 1), a(i), b(j)))
            i += 1
        else:
            faces.append((b(j), b(j + 1), a(i)))
            j += 1
    emb = from_faces(faces)
    return classify(emb, faces[:2], allow_3gon_outer=min(n1, n2) == 3)


def annulus_words(n1: int, n2: int) -> list[str]:
    """All cyclic I/O words with ``n1`` I's and ``n2`` O's, one per rotation class."""
    total = n1 + n2
    seen = set()
    out = []
    for pos in combinations(range(total), n1):
        w = "".join("I" if k in pos else "O" for k in range(total))
        key = min(w[k:] + w[:k] for k in range(total))
        if key not in seen:
            seen.add(key)
            out.append(key)
    return sorted(out)
