"""
Two-dimensional scattering diagrams at the origin.

Walls are lines or rays through 0 in R^2 carrying a unit series in
``z^m = x^m[0] y^m[1]`` (coefficients over t1, t2).  Crossing a wall with
primitive direction ``m`` counterclockwise acts by

    z^m'  ->  z^m' * f^<n, m'>,    n = (-m[1], m[0]),

and the loop product composes the crossings met by a counterclockwise loop.
:func:`complete` inserts rays order by order until that loop product is the
identity modulo the truncation order.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

from .series import Key, Series, exp, int_pow, log1p, mul

log = logging.getLogger(__name__)

Vector = tuple[int, int]


class ScatteringError(RuntimeError):
    """Raised when completion meets an error term no ray can cancel."""


def _det(u: Vector, v: Vector) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: Vector, v: Vector) -> int:
    return u[0] * v[0] + u[1] * v[1]


def is_primitive(m: Vector) -> bool:
    return gcd(m[0], m[1]) == 1


def primitive_part(m: Vector) -> tuple[Vector, int]:
    """Split ``m`` as ``k * m'`` with ``m'`` primitive and ``k >= 1``."""
    g = gcd(m[0], m[1])
    if g == 0:
        raise ValueError("the zero vector has no direction")
    return (m[0] // g, m[1] // g), g


def primitive_normal(m: Vector) -> Vector:
    if not is_primitive(m):
        raise ValueError(f"{m} is not primitive")
    return (-m[1], m[0])


@dataclass(frozen=True)
class Wall:
    direction: Vector
    function: Series
    is_line: bool = False

    def __post_init__(self):
        m = tuple(int(v) for v in self.direction)
        object.__setattr__(self, "direction", m)
        if not is_primitive(m):
            raise ValueError(f"wall direction {m} is not primitive")
        f = self.function
        if not f.is_unit():
            raise ValueError(f"wall function must be 1 mod (t1, t2): {f}")
        for (a, b, p, q), _ in f.items():
            if (a, b, p, q) == (0, 0, 0, 0):
                continue
            k = _multiple_of(m, (a, b))
            if k is None or k < 1:
                raise ValueError(
                    f"exponent {(a, b)} of the wall function is not a positive "
                    f"multiple of the direction {m}"
                )

    def to_json(self) -> dict:
        return {"dir": list(self.direction), "line": self.is_line, "f": self.function.to_json()}

    @classmethod
    def from_json(cls, obj) -> "Wall":
        return cls(tuple(obj["dir"]), Series.from_json(obj["f"]), bool(obj.get("line", False)))


def _multiple_of(m: Vector, v: Vector) -> int | None:
    if _det(m, v) != 0:
        return None
    if m[0]:
        if v[0] % m[0]:
            return None
        return v[0] // m[0]
    if v[1] % m[1]:
        return None
    return v[1] // m[1]


@dataclass(frozen=True)
class AutoAction:
    """Ring automorphism given by the images of x and y."""

    image_x: Series
    image_y: Series

    @classmethod
    def identity(cls, order: int) -> "AutoAction":
        return cls(Series.monomial((1, 0), order=order), Series.monomial((0, 1), order=order))

    @property
    def order(self) -> int:
        return min(self.image_x.order, self.image_y.order)

    def units(self) -> tuple[Series, Series]:
        """(image_x / x, image_y / y)."""
        return (_shift(self.image_x, (-1, 0)), _shift(self.image_y, (0, -1)))

    def is_identity(self) -> bool:
        ux, uy = self.units()
        return ux == 1 and uy == 1

    def apply(self, g: Series) -> Series:
        """Substitute x -> image_x, y -> image_y into ``g``."""
        ux, uy = self.units()
        cache: dict[tuple[int, int], Series] = {}

        def unit_power(a, b):
            if (a, b) not in cache:
                cache[(a, b)] = mul(int_pow(ux, a), int_pow(uy, b))
            return cache[(a, b)]

        acc: dict[Key, Fraction] = {}
        order = min(g.order, self.order)
        for (a, b, p, q), c in g.items():
            if p + q > order:
                continue
            for (a2, b2, p2, q2), c2 in unit_power(a, b).items():
                if p + q + p2 + q2 > order:
                    continue
                k = (a + a2, b + b2, p + p2, q + q2)
                acc[k] = acc.get(k, 0) + c * c2
        return Series(acc, order)

    def compose(self, first: "AutoAction") -> "AutoAction":
        """``self`` after ``first``: the images of x, y under self(first(.))."""
        return AutoAction(self.apply(first.image_x), self.apply(first.image_y))


def _shift(f: Series, z: Vector) -> Series:
    return Series({(a + z[0], b + z[1], p, q): c for (a, b, p, q), c in f.items()}, f.order)


class _Crossing:
    """Applies z^m' -> z^m' f^(sign <n, m'>) with cached powers of f."""

    def __init__(self, wall: Wall, sign: int, order: int):
        self.normal = primitive_normal(wall.direction)
        self.sign = sign
        self.f = wall.function.truncate(order)
        self._pow: dict[int, Series] = {0: Series.one(self.f.order)}

    def power(self, k: int) -> Series:
        if k not in self._pow:
            self._pow[k] = int_pow(self.f, k)
        return self._pow[k]

    def apply(self, g: Series) -> Series:
        order = min(g.order, self.f.order)
        n = self.normal
        acc: dict[Key, Fraction] = {}
        for (a, b, p, q), c in g.items():
            e = self.sign * (n[0] * a + n[1] * b)
            if e == 0:
                k = (a, b, p, q)
                acc[k] = acc.get(k, 0) + c
                continue
            for (a2, b2, p2, q2), c2 in self.power(e).items():
                if p + q + p2 + q2 > order:
                    break
                k = (a + a2, b + b2, p + p2, q + q2)
                acc[k] = acc.get(k, 0) + c * c2
        return Series(acc, order)


def cross(wall: Wall, sign: int = 1, order: int | None = None) -> AutoAction:
    """The automorphism of crossing ``wall`` once (``sign = +1``: counterclockwise)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    order = wall.function.order if order is None else order
    n = primitive_normal(wall.direction)
    f = wall.function.truncate(order)
    ex = sign * n[0]
    ey = sign * n[1]
    return AutoAction(
        _shift(int_pow(f, ex), (1, 0)),
        _shift(int_pow(f, ey), (0, 1)),
    )


@dataclass(frozen=True)
class ScatteringDiagram:
    walls: tuple[Wall, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "walls", tuple(self.walls))

    def has_duplicate_directions(self) -> bool:
        """True if two walls overlap (same ray, or a line covering a ray)."""
        seen: set[Vector] = set()
        for w in self.walls:
            covered = [w.direction]
            if w.is_line:
                covered.append((-w.direction[0], -w.direction[1]))
            for c in covered:
                if c in seen:
                    return True
                seen.add(c)
        return False

    @property
    def lines(self) -> list[Wall]:
        return [w for w in self.walls if w.is_line]

    @property
    def rays(self) -> list[Wall]:
        return [w for w in self.walls if not w.is_line]

    def to_json(self) -> dict:
        return {"order": self.order, "walls": [w.to_json() for w in self.walls]}

    @classmethod
    def from_json(cls, obj) -> "ScatteringDiagram":
        order = int(obj["order"])
        walls = [Wall.from_json(w) for w in obj["walls"]]
        walls = [Wall(w.direction, w.function.truncate(order), w.is_line) for w in walls]
        return cls(tuple(walls), order)


def _events(d: ScatteringDiagram) -> list[tuple[Vector, Wall, int]]:
    """(crossing direction, wall, sign) for every half-wall of the diagram."""
    out = []
    for w in d.walls:
        out.append((w.direction, w, 1))
        if w.is_line:
            out.append(((-w.direction[0], -w.direction[1]), w, -1))
    return out


def _base_direction(directions: list[Vector]) -> Vector:
    """A direction just clockwise of (1, 0), off every given direction."""
    k = 1000
    while any(_det((k, -1), v) == 0 and _dot((k, -1), v) > 0 for v in directions):
        k += 1
    return (k, -1)


def _ccw_sorted(items, base: Vector, key=lambda item: item):
    """Sort by counterclockwise angle in (0, 2pi) measured from ``base``."""

    def half(v):
        c = _det(base, v)
        if c > 0 or (c == 0 and _dot(base, v) > 0):
            return 0
        return 1

    def cmp(i1, i2):
        u, v = key(i1), key(i2)
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        c = _det(u, v)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(items, key=cmp_to_key(cmp))


def loop_product(d: ScatteringDiagram, order: int | None = None) -> AutoAction:
    """Compose the crossings of a counterclockwise loop around the origin.

    The wall met first is applied first; the result is the automorphism
    theta_last o ... o theta_first.
    """
    if d.has_duplicate_directions():
        raise ValueError("diagram has two walls with the same direction; merge them first")
    order = d.order if order is None else order
    events = _events(d)
    base = _base_direction([e[0] for e in events])
    events = _ccw_sorted(events, base, key=lambda e: e[0])
    ix = Series.monomial((1, 0), order=order)
    iy = Series.monomial((0, 1), order=order)
    for _, wall, sign in events:
        c = _Crossing(wall, sign, order)
        ix = c.apply(ix)
        iy = c.apply(iy)
    return AutoAction(ix, iy)


def _deviation(theta: AutoAction, k: int) -> dict[tuple[int, int, int, int], tuple[Fraction, Fraction]]:
    """Order-k parts of (image_x/x - 1, image_y/y - 1), keyed by monomial."""
    ux, uy = theta.units()
    out: dict[Key, list] = {}
    for i, u in enumerate((ux, uy)):
        for key, c in u.homogeneous(k).items():
            out.setdefault(key, [Fraction(0), Fraction(0)])[i] = c
    return {key: (v[0], v[1]) for key, v in out.items()}


def hamiltonian_coefficient(key: Key, dx: Fraction, dy: Fraction) -> tuple[Vector, Fraction]:
    """Write an order-k error term as c * z^m acting through <n(m'), .>.

    Returns the primitive direction m' and c.  Raises if the pair (dx, dy)
    is not proportional to the normal of m'.
    """
    a, b = key[0], key[1]
    if (a, b) == (0, 0):
        raise ScatteringError(f"error term with z-exponent (0, 0) at {key}")
    mp, _ = primitive_part((a, b))
    n = primitive_normal(mp)
    if dx * n[1] != dy * n[0]:
        raise ScatteringError(
            f"error term {key} = ({dx}, {dy}) is not proportional to the normal {n}"
        )
    c = dx / n[0] if n[0] else dy / n[1]
    return mp, c


def _insert(walls: list[Wall], direction: Vector, factor: Series) -> list[Wall]:
    """Multiply ``factor`` into the ray in ``direction``, creating it if needed."""
    out = list(walls)
    for i, w in enumerate(out):
        if not w.is_line and w.direction == direction:
            out[i] = Wall(direction, mul(w.function, factor), False)
            return out
    out.append(Wall(direction, factor, False))
    return out


def complete(d: ScatteringDiagram, order: int | None = None) -> ScatteringDiagram:
    """Insert rays until the loop product is the identity mod t-degree order+1."""
    N = d.order if order is None else order
    if N < 0:
        raise ValueError("order must be non-negative")
    walls = [Wall(w.direction, w.function.truncate(N), w.is_line) for w in d.walls]
    if not walls or N == 0:
        return ScatteringDiagram(tuple(walls), N)
    current = ScatteringDiagram(tuple(walls), N)
    if current.has_duplicate_directions():
        raise ValueError("initial walls must have distinct directions")

    for k in range(1, N + 1):
        theta = loop_product(current, order=k)
        dev = _deviation(theta, k)
        if not dev:
            continue
        inserts: dict[Vector, Series] = {}
        for key, (dx, dy) in dev.items():
            if dx == 0 and dy == 0:
                continue
            mp, c = hamiltonian_coefficient(key, dx, dy)
            term = Series({key: c}, N)
            factor = _cancelling_factor(mp, term, key, (dx, dy), k)
            inserts[mp] = mul(inserts.get(mp, Series.one(N)), factor)
        for mp in sorted(inserts):
            walls = _insert(walls, mp, inserts[mp])
        current = ScatteringDiagram(tuple(walls), N)
        log.debug("order %d: %d error terms, %d walls", k, len(dev), len(walls))
        check = loop_product(current, order=k)
        if not check.is_identity():
            raise ScatteringError(f"order {k} deviation did not cancel")
    return current


def _cancelling_factor(mp: Vector, term: Series, key: Key, target, k: int) -> Series:
    """exp(-sigma * term) with sigma in {+1, -1} chosen so the crossing cancels ``target``."""
    for sigma in (1, -1):
        factor = exp(term * (-sigma))
        contribution = _deviation(cross(Wall(mp, factor), 1, order=k), k).get(key, (0, 0))
        if contribution[0] + target[0] == 0 and contribution[1] + target[1] == 0:
            return factor
    raise ScatteringError(f"neither sign cancels the error term at {key}")


def ray_function(d: ScatteringDiagram, m: Vector) -> Series:
    for w in d.walls:
        if w.direction == tuple(m):
            return w.function
    return Series.one(d.order)


def build_nodal_cubic_diagram(order: int) -> ScatteringDiagram:
    """Two lines: direction (-1, 0) with 1 + t1/x, direction (1, 3) with 1 + t2*x*y^3."""
    if order < 1:
        raise ValueError("order must be at least 1")
    f1 = Series({(0, 0, 0, 0): 1, (-1, 0, 1, 0): 1}, order)
    f2 = Series({(0, 0, 0, 0): 1, (1, 3, 0, 1): 1}, order)
    return ScatteringDiagram((Wall((-1, 0), f1, True), Wall((1, 3), f2, True)), order)


CENTRAL_DIRECTION = (0, 1)
# t1/x * t2*x*y^3 = t1*t2*y^3: the basic central monomial is 3 times (0, 1)
CENTRAL_EXPONENT = (0, 3)


def central_ray_log(max_degree: int, diagram: ScatteringDiagram | None = None) -> list[Fraction]:
    """[(t1 t2 y^3)^d] log f_central for d = 1 .. max_degree.

    ``diagram`` may be an already completed nodal-cubic diagram of order at
    least ``2 * max_degree``.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    if diagram is None:
        diagram = complete(build_nodal_cubic_diagram(2 * max_degree))
    if diagram.order < 2 * max_degree:
        raise ValueError(f"diagram order {diagram.order} < {2 * max_degree}")
    lf = log1p(ray_function(diagram, CENTRAL_DIRECTION))
    a, b = CENTRAL_EXPONENT
    return [lf.coefficient(((a * d, b * d), (d, d))) for d in range(1, max_degree + 1)]


def nodal_cubic_invariants(max_degree: int, diagram: ScatteringDiagram | None = None
                           ) -> list[Fraction]:
    """N_1 .. N_D for the plane relative to a nodal cubic, read off the central ray.

    With x = t1 t2 y^3 the central function has log equal to
    k * sum_d d N_d x^d, where k = 3 is the index of the exponent (0, 3) over
    the primitive direction (0, 1).
    """
    _, k = primitive_part(CENTRAL_EXPONENT)
    logs = central_ray_log(max_degree, diagram)
    return [c / (k * d) for d, c in enumerate(logs, start=1)]
