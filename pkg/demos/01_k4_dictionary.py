"""
Vertex colorings and RGB tilings on K4
======================================

Each pair of vertex colors fixes an edge color, so a proper 4-coloring of a
triangulation paints every triangle with one red, one green and one blue edge.
Going back needs the red edges only.
"""

from rgbtiling import Color, coloring_to_rgb, tiling_to_coloring, validate
from rgbtiling.constructions import k4
from rgbtiling.tiling import RGB

m = k4()

# the identity coloring and a shuffled one
for f in [(1, 2, 3, 4), (4, 3, 1, 2)]:
    t = coloring_to_rgb(m, f)
    print(f"coloring {f}")
    for c in RGB:
        print(f"  {c.name.lower():5s}", sorted(t.edges_of(c)))
    print("  rainbow triangles:", validate(t, "RGB").ok)

# swapping 1<->3 and 2<->4 gives the same edges
t = coloring_to_rgb(m, (1, 2, 3, 4))
print("swap-invariant:", t.colors == coloring_to_rgb(m, (3, 4, 1, 2)).colors)

# keep only red, then rebuild a coloring; vertex 0 gets color 1
red_only = t.restrict(Color.RED)
f = tiling_to_coloring(m, red_only)
print("rebuilt coloring:", f.colors)
print("same red edges:", coloring_to_rgb(m, f).red == red_only.red)
