"""
When red odd cycles are not the only obstruction
================================================

With a single outer facet every R-tiling is grand.  An annulus has two, and
there an R-tiling can be free of red odd cycles and still admit no 4-coloring:
some closed walk crosses an odd number of black edges.
"""

from rgbtiling.canal import cycle_black_parity_equivalence
from rgbtiling.coloring import tiling_to_coloring
from rgbtiling.errors import NotGrand
from rgbtiling.harness import conquer_pair, hunt_counterexample

res = hunt_counterexample(shapes=((5, 5), (5, 7)), max_vertices=12)
print(f"searched {res.hosts} annuli, {res.tilings} R-tilings, {len(res.instances)} hits")

inst = res.instances[0]
t = inst.tiling
print(f"\n{inst.host_name}: {t.host.kind}")
print("  red edges:", sorted(t.red))
print("  odd-black closed walk:", inst.witness_cycle)
print("  black edges on it:", inst.witness_black)
print(f"  it threads {inst.components_in_loop} of {inst.red_components} red components")

rep = cycle_black_parity_equivalence(t.host, t)
print("  every cycle even:", rep.cycles_even, " outer faces even:", rep.outer_faces_even, " grand:", rep.grand)

try:
    tiling_to_coloring(t.host, t)
except NotGrand as e:
    print("  no coloring from this tiling:", e)

# the same host often carries a grand tiling too
pair = conquer_pair(t.host)
if pair:
    bad, good = pair
    f = tiling_to_coloring(good.host, good)
    print("\nanother R-tiling of the same host is grand; coloring:", f.colors)

loops3 = [i for i in hunt_counterexample(shapes=((5, 7),), per_host=None).instances if i.components_in_loop == 3]
print(f"(5,7) hits where the walk runs through three red components: {len(loops3)}")
