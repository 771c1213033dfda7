# Relative invariants of the plane and a nodal cubic, from scattering.
#
# The toric model has two walls, (-1,0) carrying 1 + t1/x and (1,3)
# carrying 1 + t2*x*y^3.  Their determinant is 3, so scattering does not
# stop after one ray.  We complete order by order and read the invariants
# off the ray in direction (0,1).

import time
from pathlib import Path

from lgw import scattering as sc, svg
from lgw.acceptance import nodal_cubic_rhs, pentagon_diagram
from lgw.series import log1p

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# The simplest case first: two walls of determinant 1 need one extra ray.
pent = sc.complete(pentagon_diagram(6))
print([(w.direction, str(w.function)) for w in pent.rays])

# Now the nodal cubic.
start = time.perf_counter()
d8 = sc.complete(sc.build_nodal_cubic_diagram(8))
print(f"{len(d8.walls)} walls after completion to order 8 "
      f"({time.perf_counter() - start:.2f}s)")
print("consistent:", sc.loop_product(d8).is_identity())

central = sc.ray_function(d8, (0, 1))
print("central ray:", central)
print("log:", log1p(central))

# The exponent (0,3) is three times the primitive direction, and that
# factor appears in the log of the central function.
print("invariants  ", [str(n) for n in sc.nodal_cubic_invariants(4, d8)])
print("sum d N_d x^d", [str(c) for c in
                        [d * n for d, n in enumerate(sc.nodal_cubic_invariants(4, d8), 1)]])
print("3 log A(x)  ", [str(c) for c in nodal_cubic_rhs(4)])

# Every ray function has integer coefficients.
print(all(c.denominator == 1 for w in d8.walls for _, c in w.function.items()))

(out / "nodal_cubic_walls.svg").write_text(svg.diagram_svg(d8))
print("wrote", out / "nodal_cubic_walls.svg")
