# The plane relative to its toric boundary, counted with tropical curves.
#
# A maximally tangent rational curve of degree d meets each of the three
# toric lines in a single point.  Tropically this is a tree with three
# unbounded edges of weight d in directions (-1,0), (0,-1), (1,1).  Two
# generic points cut the family down to finitely many curves.

from pathlib import Path

from lgw import svg, tropical

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# With three leaves there is only one tree: a single trivalent vertex.
print(len(list(tropical.tree_topologies(3))), "topology with 3 leaves")

# Enumerate for small d.  The same curve is found every time, with a
# vertex of weight d^2.
for d in range(1, 7):
    deg, curves = tropical.enumerate_generic(tropical.p2_leaves(d), 2, seed=1)
    (curve, mult), = curves
    v = curve.type.vertices[0]
    print(f"d={d}: vertex at {tuple(map(str, curve.positions[v]))}, multiplicity {mult}")

# Moving the points does not change the count.
print([str(tropical.count_p2_toric(3, seed=s)) for s in (1, 2, 3, 4)])

# A picture of the degree-3 curve through its two points.
deg, curves = tropical.enumerate_generic(tropical.p2_leaves(3), 2, seed=1)
(out / "p2_degree3.svg").write_text(svg.curves_svg([c for c, _ in curves], deg.points))
print("wrote", out / "p2_degree3.svg")
