"""
Genus-0 tropical curves in R^2 and their exhaustive enumeration.

A curve type is a labelled trivalent tree whose leaves are unbounded edges
with prescribed primitive direction and weight.  On a tree the weighted
direction of every bounded edge is forced by balancing, so enumeration only
ranges over tree topologies and over which edge carries each point
condition.  Vertex positions are then the solution of a square linear
system over Q.
"""
from __future__ import annotations

import itertools
import logging
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod

log = logging.getLogger(__name__)

Vector = tuple[int, int]
Point = tuple[Fraction, Fraction]

DEFAULT_SEED = 20231
MAX_REDRAWS = 5


def default_seed() -> int:
    return int(os.environ.get("LGW_SEED", DEFAULT_SEED))


class DegenerateConfiguration(RuntimeError):
    """The point/line data is not generic for some curve type."""


class BoundsExceeded(RuntimeError):
    pass


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _primitive(v) -> tuple[Vector, int]:
    g = gcd(int(v[0]), int(v[1]))
    if g == 0:
        raise ValueError("zero vector")
    return (int(v[0]) // g, int(v[1]) // g), g


@dataclass(frozen=True)
class Leaf:
    direction: Vector
    weight: int = 1
    fixed: bool = False

    def __post_init__(self):
        u = tuple(int(c) for c in self.direction)
        object.__setattr__(self, "direction", u)
        if gcd(*u) != 1:
            raise ValueError(f"leaf direction {u} is not primitive")
        if self.weight < 1:
            raise ValueError("leaf weight must be positive")

    @property
    def vector(self) -> Vector:
        return (self.weight * self.direction[0], self.weight * self.direction[1])


@dataclass(frozen=True)
class DegreeData:
    """Leaves plus the generic constraints of an enumerative problem.

    ``points`` are the interior point conditions; ``line_offsets`` holds, for
    each fixed leaf in leaf order, the value ``det(u, r)`` shared by all points
    ``r`` of its prescribed line.
    """

    leaves: tuple[Leaf, ...]
    points: tuple[Point, ...] = ()
    line_offsets: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(self.leaves))
        total = [sum(l.vector[i] for l in self.leaves) for i in (0, 1)]
        if total != [0, 0]:
            raise ValueError(f"weighted leaf directions sum to {tuple(total)}, not 0")
        nfixed = sum(l.fixed for l in self.leaves)
        if len(self.line_offsets) != nfixed:
            raise ValueError(f"{nfixed} fixed leaves but {len(self.line_offsets)} line offsets")

    @property
    def point_count(self) -> int:
        return len(self.points)

    @property
    def fixed_leaves(self) -> list[int]:
        return [i for i, l in enumerate(self.leaves) if l.fixed]

    @classmethod
    def generic(cls, leaves, point_count: int, rng: random.Random) -> "DegreeData":
        """Draw points and fixed-line offsets with large random denominators."""
        leaves = tuple(leaves)

        def draw():
            den = rng.randrange(10**6, 2 * 10**6)
            return Fraction(rng.randrange(-10**7, 10**7), den)

        points = tuple((draw(), draw()) for _ in range(point_count))
        offsets = tuple(draw() for l in leaves if l.fixed)
        return cls(leaves, points, offsets)

    def expected_dimension_ok(self) -> bool:
        L = len(self.leaves)
        return L - 1 == self.point_count + len(self.fixed_leaves)


@dataclass(frozen=True)
class TropicalCurveType:
    """A tree with leaf data and, optionally, point marks on its edges.

    Nodes ``0 .. L-1`` are the far ends of the leaves, higher nodes are the
    vertices.  ``weights[e]`` is the weight of edge ``e``; for a leaf edge it is
    the leaf weight.
    """

    leaves: tuple[Leaf, ...]
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]
    point_marks: tuple[int, ...] = ()

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    @property
    def vertices(self) -> list[int]:
        nodes = {n for e in self.edges for n in e}
        return sorted(n for n in nodes if n >= self.n_leaves)

    def leaf_edge(self, i: int) -> int:
        for k, (a, b) in enumerate(self.edges):
            if i in (a, b):
                return k
        raise KeyError(i)

    def is_leaf_edge(self, k: int) -> bool:
        a, b = self.edges[k]
        return min(a, b) < self.n_leaves

    def incident(self, v: int) -> list[int]:
        return [k for k, e in enumerate(self.edges) if v in e]

    def is_tree(self) -> bool:
        nodes = {n for e in self.edges for n in e}
        if len(self.edges) != len(nodes) - 1:
            return False
        adj = {n: [] for n in nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        start = next(iter(nodes))
        seen = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for m in adj[n]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        return len(seen) == len(nodes)

    def canonical_key(self):
        return (tuple(sorted(tuple(sorted(e)) for e in self.edges)), self.point_marks)


def forced_edge_vectors(leaves, edges) -> dict[tuple[int, int], Vector]:
    """Weighted direction of every oriented edge (a, b), pointing from a to b.

    Balancing forces it to be the sum of the weighted leaf directions on the
    b-side of the tree.
    """
    L = len(leaves)
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    memo: dict[tuple[int, int], Vector] = {}

    def flux(a, b):
        # total weighted leaf direction beyond b, seen from a
        if (a, b) in memo:
            return memo[(a, b)]
        if b < L:
            v = leaves[b].vector
        else:
            sx = sy = 0
            for c in adj[b]:
                if c != a:
                    fx, fy = flux(b, c)
                    sx += fx
                    sy += fy
            v = (sx, sy)
        memo[(a, b)] = v
        return v

    out = {}
    for a, b in edges:
        out[(a, b)] = flux(a, b)
        out[(b, a)] = flux(b, a)
    return out


def tree_topologies(n_leaves: int):
    """All trivalent trees with ``n_leaves`` labelled leaves, as edge tuples.

    Built by inserting leaf k into every edge of each tree on k leaves, which
    produces each of the (2L-5)!! topologies exactly once.
    """
    if n_leaves < 3:
        raise ValueError("a trivalent tree needs at least 3 leaves")
    L = n_leaves
    first = L  # first internal vertex label

    def grow(edges, k, next_vertex):
        if k == L:
            yield tuple(edges)
            return
        for i, (a, b) in enumerate(edges):
            w = next_vertex
            new = edges[:i] + edges[i + 1:] + [(a, w), (w, b), (k, w)]
            yield from grow(new, k + 1, next_vertex + 1)

    yield from grow([(0, first), (1, first), (2, first)], 3, first + 1)


def build_type(leaves, edges, point_marks=()) -> TropicalCurveType | None:
    """Attach forced weights to a tree; None if some edge is forced to be contracted."""
    vecs = forced_edge_vectors(leaves, edges)
    weights = []
    for a, b in edges:
        v = vecs[(a, b)]
        if v == (0, 0):
            return None
        weights.append(gcd(*v))
    return TropicalCurveType(tuple(leaves), tuple(edges), tuple(weights), tuple(point_marks))


@dataclass(frozen=True)
class TropicalCurve:
    type: TropicalCurveType
    positions: dict[int, Point] = field(hash=False)

    def outgoing(self, v: int) -> list[tuple[int, Vector]]:
        """(weight, primitive outgoing direction) of each edge at vertex ``v``."""
        out = []
        t = self.type
        for k in t.incident(v):
            a, b = t.edges[k]
            other = b if a == v else a
            if other < t.n_leaves:
                out.append((t.weights[k], t.leaves[other].direction))
            else:
                p, q = self.positions[v], self.positions[other]
                d = (q[0] - p[0], q[1] - p[1])
                out.append((t.weights[k], _rational_direction(d)))
        return out

    def edge_length(self, k: int) -> Fraction:
        """Length of a bounded edge in units of its primitive direction."""
        a, b = self.type.edges[k]
        p, q = self.positions[a], self.positions[b]
        d = (q[0] - p[0], q[1] - p[1])
        u = _rational_direction(d)
        return d[0] / u[0] if u[0] else d[1] / u[1]


def _rational_direction(d) -> Vector:
    """Primitive integer vector along a non-zero rational vector."""
    dx, dy = Fraction(d[0]), Fraction(d[1])
    if dx == 0 and dy == 0:
        raise ValueError("edge of length zero")
    den = dx.denominator * dy.denominator
    return _primitive((int(dx * den), int(dy * den)))[0]


def check_balancing(c: TropicalCurve) -> bool:
    for v in c.type.vertices:
        sx = sy = 0
        for w, u in c.outgoing(v):
            sx += w * u[0]
            sy += w * u[1]
        if (sx, sy) != (0, 0):
            return False
    return True


def vertex_multiplicity(c: TropicalCurve, v: int) -> int:
    vecs = [(w * u[0], w * u[1]) for w, u in c.outgoing(v)]
    if len(vecs) != 3:
        raise ValueError(f"vertex {v} has valence {len(vecs)}, not 3")
    pairs = [abs(_det(vecs[i], vecs[j])) for i, j in ((0, 1), (0, 2), (1, 2))]
    nonzero = {p for p in pairs if p}
    if len(nonzero) > 1:
        raise AssertionError(f"vertex {v} multiplicity depends on the edge pair: {pairs}")
    return nonzero.pop() if nonzero else 0


def curve_multiplicity(c: TropicalCurve) -> Fraction:
    """Product of vertex multiplicities, divided by the weight of every fixed leaf."""
    m = Fraction(prod(vertex_multiplicity(c, v) for v in c.type.vertices))
    for leaf in c.type.leaves:
        if leaf.fixed:
            m /= leaf.weight
    return m


# -- exact linear algebra ---------------------------------------------------

def solve_exact(A: list[list[Fraction]], b: list[Fraction]):
    """Solve a square system over Q.

    Returns ``(solution, status)`` where status is ``"unique"``,
    ``"inconsistent"`` or ``"degenerate"`` (rank deficient but consistent).
    """
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(A, b)]
    cols = len(A[0]) if A else 0
    r = 0
    pivots = []
    for col in range(cols):
        piv = next((i for i in range(r, n) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][col]
        M[r] = [x * inv for x in M[r]]
        for i in range(n):
            if i != r and M[i][col] != 0:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
    if any(M[i][-1] != 0 for i in range(r, n)):
        return None, "inconsistent"
    if r < cols:
        return None, "degenerate"
    x = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        x[col] = M[i][-1]
    return x, "unique"


# -- enumeration --------------------------------------------------------------

@dataclass
class SearchBounds:
    max_leaves: int = 9
    max_systems: int = 2_000_000


def _solve_type(deg: DegreeData, ctype: TropicalCurveType):
    """Positions for one curve type with point marks; None if no valid curve.

    Raises DegenerateConfiguration on non-generic data.
    """
    t = ctype
    L = t.n_leaves
    verts = t.vertices
    root = verts[0]
    bounded = [k for k in range(len(t.edges)) if not t.is_leaf_edge(k)]
    # unknowns: root x, root y, then one length per bounded edge
    col = {k: 2 + i for i, k in enumerate(bounded)}
    nvar = 2 + len(bounded)
    vecs = forced_edge_vectors(t.leaves, t.edges)

    # affine expression of each vertex position: (coeff rows for x, y), constant = 0
    expr: dict[int, tuple[list[Fraction], list[Fraction]]] = {}
    ex = [Fraction(0)] * nvar
    ey = [Fraction(0)] * nvar
    ex[0] = Fraction(1)
    ey[1] = Fraction(1)
    expr[root] = (ex, ey)
    stack = [root]
    while stack:
        a = stack.pop()
        for k in t.incident(a):
            if k not in col:
                continue
            u, v = t.edges[k]
            b = v if u == a else u
            if b in expr:
                continue
            vec = vecs[(a, b)]
            # pos_b = pos_a + lambda_k * flux(a -> b); flux(b -> a) is its negative
            bx = list(expr[a][0])
            by = list(expr[a][1])
            bx[col[k]] += vec[0]
            by[col[k]] += vec[1]
            expr[b] = (bx, by)
            stack.append(b)

    def det_row(u, vertex):
        # coefficients of det(u, pos_vertex) = u0*y - u1*x
        px, py = expr[vertex]
        return [u[0] * cy - u[1] * cx for cx, cy in zip(px, py)]

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    offsets = iter(deg.line_offsets)
    for i, leaf in enumerate(t.leaves):
        if leaf.fixed:
            a = _leaf_vertex(t, i)
            rows.append(det_row(leaf.direction, a))
            rhs.append(next(offsets))
    for p, k in zip(deg.points, t.point_marks):
        a, b = t.edges[k]
        if t.is_leaf_edge(k):
            leaf_i, a = (a, b) if a < L else (b, a)
            u = t.leaves[leaf_i].direction
        else:
            u = vecs[(a, b)]
        rows.append(det_row(u, a))
        rhs.append(_det(u, p))

    if len(rows) != nvar:
        raise ValueError(f"{len(rows)} conditions for {nvar} unknowns")
    sol, status = solve_exact(rows, rhs)
    if status == "inconsistent":
        return None
    if status == "degenerate":
        raise DegenerateConfiguration("rank-deficient but consistent position system")

    def pos(vertex):
        px, py = expr[vertex]
        return (sum(c * s for c, s in zip(px, sol)), sum(c * s for c, s in zip(py, sol)))

    for k in bounded:
        lam = sol[col[k]]
        if lam == 0:
            raise DegenerateConfiguration(f"bounded edge {t.edges[k]} has length 0")
        if lam < 0:
            return None
    positions = {v: pos(v) for v in verts}
    for p, k in zip(deg.points, t.point_marks):
        a, b = t.edges[k]
        if t.is_leaf_edge(k):
            leaf_i, a = (a, b) if a < L else (b, a)
            u = t.leaves[leaf_i].direction
            s = _param(p, positions[a], u)
            if s == 0:
                raise DegenerateConfiguration("point sits on a vertex")
            if s < 0:
                return None
        else:
            u = vecs[(a, b)]
            s = _param(p, positions[a], u)
            lam = sol[col[k]]
            # s in units of vec; the edge runs from a (s=0) to b (s=lam)
            if s == 0 or s == lam:
                raise DegenerateConfiguration("point sits on a vertex")
            if not (0 < s < lam):
                return None
    return TropicalCurve(ctype, positions)


def _leaf_vertex(t: TropicalCurveType, i: int) -> int:
    a, b = t.edges[t.leaf_edge(i)]
    return b if a == i else a


def _param(p: Point, base: Point, u) -> Fraction:
    d = (p[0] - base[0], p[1] - base[1])
    return d[0] / u[0] if u[0] else d[1] / u[1]


def enumerate_curves(deg: DegreeData, bounds: SearchBounds | None = None
                     ) -> list[tuple[TropicalCurve, Fraction]]:
    """All rigid tropical curves of the given degree through the given constraints."""
    bounds = bounds or SearchBounds()
    L = len(deg.leaves)
    if L > bounds.max_leaves:
        raise BoundsExceeded(f"max_leaves: {L} leaves > {bounds.max_leaves}")
    if not deg.expected_dimension_ok():
        raise ValueError(
            f"{deg.point_count} points and {len(deg.fixed_leaves)} fixed leaves do not cut "
            f"the {L - 1}-dimensional space of curves with {L} leaves to a finite set"
        )
    n_edges = 2 * L - 3
    n_types = 1
    for k in range(2 * L - 5, 0, -2):
        n_types *= k
    systems = n_types * n_edges ** deg.point_count
    if systems > bounds.max_systems:
        raise BoundsExceeded(f"max_systems: {systems} linear systems > {bounds.max_systems}")

    found: list[tuple[TropicalCurve, Fraction]] = []
    for edges in tree_topologies(L):
        base = build_type(deg.leaves, edges)
        if base is None:
            continue
        if any(_zero_vertex(deg.leaves, edges, v) for v in base.vertices):
            continue
        for marks in itertools.product(range(n_edges), repeat=deg.point_count):
            ctype = TropicalCurveType(base.leaves, base.edges, base.weights, marks)
            curve = _solve_type(deg, ctype)
            if curve is not None:
                found.append((curve, curve_multiplicity(curve)))
    found.sort(key=lambda cm: cm[0].type.canonical_key())
    return found


def _zero_vertex(leaves, edges, v) -> bool:
    vecs = forced_edge_vectors(leaves, edges)
    out = [vecs[(a, b)] for (a, b) in vecs if a == v]
    return _det(out[0], out[1]) == 0


def enumerate_generic(leaves, point_count: int, seed: int | None = None,
                      bounds: SearchBounds | None = None):
    """Draw generic constraints and enumerate, re-drawing on degenerate data."""
    rng = random.Random(default_seed() if seed is None else seed)
    last = None
    for attempt in range(MAX_REDRAWS + 1):
        deg = DegreeData.generic(leaves, point_count, rng)
        try:
            return deg, enumerate_curves(deg, bounds)
        except DegenerateConfiguration as exc:
            log.info("degenerate draw %d (%s); re-drawing", attempt, exc)
            last = exc
    raise DegenerateConfiguration(f"no generic draw after {MAX_REDRAWS} re-draws: {last}")


def p2_leaves(d: int) -> tuple[Leaf, ...]:
    return (Leaf((-1, 0), d), Leaf((0, -1), d), Leaf((1, 1), d))


def f2_leaves(d: int, m) -> tuple[Leaf, ...]:
    """Leaves for N_m(F_2) in the fan with rays (1,2), (0,1), (-1,0), (0,-1)."""
    m = tuple(m)
    if sum(l * ml for l, ml in enumerate(m, start=1)) != d or any(ml < 0 for ml in m):
        raise ValueError(f"{m} is not a partition of {d}")
    leaves = [Leaf((0, -1), 2 * d), Leaf((1, 2), d)]
    for l, ml in enumerate(m, start=1):
        leaves += [Leaf((-1, 0), l, fixed=True)] * ml
    return tuple(leaves)


def count_p2_toric(d: int, seed: int | None = None) -> Fraction:
    if d < 1:
        raise ValueError("degree must be at least 1")
    _, curves = enumerate_generic(p2_leaves(d), 2, seed)
    return sum((m for _, m in curves), Fraction(0))


def count_f2(d: int, m, seed: int | None = None) -> Fraction:
    _, curves = enumerate_generic(f2_leaves(d, m), 1, seed)
    return sum((mult for _, mult in curves), Fraction(0))
