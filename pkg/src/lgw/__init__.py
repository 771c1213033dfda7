"""Exact computations of log Gromov-Witten invariants of plane pairs.

Three routes are implemented: tropical curve counts, a degeneration sum over
partitions, and consistent completion of 2d scattering diagrams.
"""
from .series import Series, Monomial
from .scattering import ScatteringDiagram, Wall, complete, loop_product, nodal_cubic_invariants
from .tropical import count_f2, count_p2_toric
from .degeneration import line_conic_invariant, line_conic_invariants
from .toric import Fan, self_intersections

__all__ = [
    "Series", "Monomial", "ScatteringDiagram", "Wall", "complete", "loop_product",
    "nodal_cubic_invariants", "count_f2", "count_p2_toric", "line_conic_invariant",
    "line_conic_invariants", "Fan", "self_intersections",
]
