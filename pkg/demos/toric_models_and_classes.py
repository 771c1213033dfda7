# Toric models and curve classes.
#
# A fan of a smooth complete toric surface is determined, up to SL(2,Z),
# by its list of self-intersection numbers.  Blowing up a corner inserts
# the sum of the two neighbouring rays; blowing down removes a (-1)-ray.

from pathlib import Path

from lgw import chow, svg, toric

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)


def show(name, f):
    print(f"{name:13s}", list(zip(f.labels, f.rays, toric.self_intersections(f))))


# Line plus conic: blow up twice at the tangency point, blow down L, shear.
for name, f in toric.line_conic_toric_model().items():
    show(name, f)

# Nodal cubic: blow up the node, then once on each branch, blow down both
# lines through the node.
stages = toric.nodal_cubic_toric_model()
for name in ("plane", "modification", "hirzebruch", "model"):
    show(name, stages[name])
print("matrix", stages["matrix"])

# Only the numbers matter.
f = toric.fan_from_self_intersections([0, -3, 0, 3])
print(toric.sl2_equivalence(f, stages["model"]))

for name in ("line_conic", "nodal_cubic"):
    model = getattr(toric, f"{name}_toric_model")()["model"]
    (out / f"{name}_fan.svg").write_text(svg.fan_svg(model))

# Classes on the two-fold blow-up of the plane.
for rel, (got, want, ok) in chow.chow_verify_blowup_plane().items():
    print(f"{rel:28s} {ok}")

# Specialisation of the hyperplane class to the glued surface F_2 u Y.
print(chow.specialize_H(), chow.specialize_H().gluing_degrees())
