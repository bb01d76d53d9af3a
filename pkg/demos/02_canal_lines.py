"""
Canal lines through an R-tiling
===============================

Every inner triangle holds exactly one red edge, so a current entering through
a black edge has exactly one black edge to leave by.  The triangles fall into
rings and paths.  On a maximal planar graph every line is a ring, and the
number of RGB extensions is 2 to the number of lines, or 0 if a ring is odd.
"""

from rgbtiling import build_canal_system, count_rgb_extensions, enumerate_r_tilings, is_grand
from rgbtiling.canal import bank_triangle_identity, deja_vu_edges, orient_canal_system
from rgbtiling.constructions import octahedron

m = octahedron()
tilings = list(enumerate_r_tilings(m))
print(f"octahedron: {len(tilings)} R-tilings")

for k, t in enumerate(tilings[:4]):
    system = build_canal_system(t)
    shape = [len(line.triangles) for line in system.lines]
    print(f"\ntiling {k}: red {sorted(t.red)}")
    print(f"  rings of length {shape}, {count_rgb_extensions(t)} RGB extensions")
    for i, line in enumerate(system.lines):
        rep = bank_triangle_identity(system, i)
        print(f"  ring {i}: {rep.triangles} triangles = {rep.e_right} right + {rep.e_left} left,"
              f" deja-vu {deja_vu_edges(system, i)}")

    # orienting the rings so neighbouring currents run antiparallel
    # splits the vertices into the two banks
    ori = orient_canal_system(system)
    print("  right bank:", sorted(ori.right_vertices), " left bank:", sorted(ori.left_vertices))
    print("  matches the direct 2-coloring:", ori.partition == is_grand(t).partition)
