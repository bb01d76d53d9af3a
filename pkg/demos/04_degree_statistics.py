"""
Degree counts and the quadrangulation left by one color
=======================================================

Euler's formula on a triangulation forces 4V2 + 3V3 + 2V4 + V5 to equal
12 plus the excess of the high-degree vertices.  Dropping one color from an
RGB tiling merges each pair of triangles into a square, and a similar
identity holds there with 8 in place of 12.
"""

from rgbtiling import black_quadrangulation, degree_table, enumerate_mpgs, verify_euler_degree_identity
from rgbtiling.coloring import coloring_to_rgb, find_4coloring
from rgbtiling.constructions import icosahedron, k4, octahedron
from rgbtiling.stats import red_degree_table
from rgbtiling.tiling import Color

for name, m in [("tetrahedron", k4()), ("octahedron", octahedron()), ("icosahedron", icosahedron())]:
    print(f"{name:12s} degrees {degree_table(m).rows()}  residual {verify_euler_degree_identity(m)}")

run = enumerate_mpgs(9)
worst = max(abs(verify_euler_degree_identity(g)) for g in run.all())
print(f"\n{len(run.all())} triangulations up to 9 vertices, largest residual {worst}")

m = icosahedron()
t = coloring_to_rgb(m, find_4coloring(m))
for drop in (Color.RED, Color.GREEN, Color.BLUE):
    q = black_quadrangulation(m, t, drop)
    print(f"\ndrop {drop.name.lower()}: V={q.table.V} E={q.table.E} F={q.table.F}, residual {q.residual}")
    print("  degrees left:", q.table.rows())

# every degree-5 vertex keeps one or two red edges
tab = red_degree_table(m, t)
print("\ndegree-5 vertices by red degree:", {i: tab.v_ki_red[(5, i)] for i in range(6) if tab.v_ki_red[(5, i)]})
