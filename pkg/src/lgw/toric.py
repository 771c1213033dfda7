"""
Fans of smooth complete toric surfaces.

Rays are kept in counterclockwise order.  For consecutive rays
``r[i-1], r[i], r[i+1]`` the toric divisor of ``r[i]`` has self-intersection
``a`` with ``r[i-1] + a * r[i] + r[i+1] = 0``, and this sequence determines the
fan up to SL(2, Z).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

Vector = tuple[int, int]
Matrix = tuple[tuple[int, int], tuple[int, int]]


class FanError(ValueError):
    pass


def _det(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _half(v) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = _det(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def sort_by_angle(vectors):
    return sorted(vectors, key=cmp_to_key(_angle_cmp))


@dataclass(frozen=True)
class Fan:
    """Cyclically ordered primitive rays, with optional labels and blow-up marks.

    ``marks[i]`` counts the interior blow-up points (drawn as a cross) on the
    divisor of ray ``i``.
    """

    rays: tuple[Vector, ...]
    labels: tuple[str, ...] = ()
    marks: tuple[int, ...] = ()

    def __post_init__(self):
        rays = tuple((int(r[0]), int(r[1])) for r in self.rays)
        object.__setattr__(self, "rays", rays)
        n = len(rays)
        labels = tuple(self.labels) or tuple(f"T{i + 1}" for i in range(n))
        marks = tuple(self.marks) or (0,) * n
        if len(labels) != n or len(marks) != n:
            raise FanError("labels and marks must match the number of rays")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "marks", marks)
        self.validate()

    def validate(self):
        n = len(self.rays)
        if n < 3:
            raise FanError("a complete fan needs at least 3 rays")
        for r in self.rays:
            if gcd(*r) != 1:
                raise FanError(f"ray {r} is not primitive")
        for i in range(n):
            u, v = self.rays[i], self.rays[(i + 1) % n]
            if _det(u, v) != 1:
                raise FanError(
                    f"cone between {u} and {v} is not smooth and counterclockwise "
                    f"(det = {_det(u, v)})"
                )
        # consecutive dets of +1 with total turning 2pi: one full turn
        turns = sum(1 for i in range(n) if _angle_cmp(self.rays[i], self.rays[(i + 1) % n]) > 0)
        if turns != 1:
            raise FanError("rays wind around the origin more than once")

    def __len__(self):
        return len(self.rays)

    @classmethod
    def from_rays(cls, rays, labels=(), marks=()) -> "Fan":
        """Sort rays by angle from the positive x-axis, carrying labels and marks."""
        n = len(rays)
        labels = tuple(labels) or tuple(f"T{i + 1}" for i in range(n))
        marks = tuple(marks) or (0,) * n
        order = sorted(range(n), key=cmp_to_key(lambda i, j: _angle_cmp(rays[i], rays[j])))
        return cls(tuple(tuple(rays[i]) for i in order),
                   tuple(labels[i] for i in order), tuple(marks[i] for i in order))

    def rotated(self, k: int) -> "Fan":
        k %= len(self)
        return Fan(self.rays[k:] + self.rays[:k], self.labels[k:] + self.labels[:k],
                   self.marks[k:] + self.marks[:k])

    def normalized(self) -> "Fan":
        """Same fan with rays listed from the positive x-axis."""
        return Fan.from_rays(self.rays, self.labels, self.marks)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays], "labels": list(self.labels),
                "marks": list(self.marks)}

    @classmethod
    def from_json(cls, obj) -> "Fan":
        return cls.from_rays([tuple(r) for r in obj["rays"]], obj.get("labels", ()),
                             obj.get("marks", ()))


def self_intersections(f: Fan) -> list[int]:
    n = len(f)
    out = []
    for i in range(n):
        prev, cur, nxt = f.rays[i - 1], f.rays[i], f.rays[(i + 1) % n]
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        # s = -a * cur
        a = -(s[0] // cur[0]) if cur[0] else -(s[1] // cur[1])
        if (s[0] + a * cur[0], s[1] + a * cur[1]) != (0, 0):
            raise FanError(f"relation fails at ray {cur}")
        out.append(a)
    return out


def fan_from_self_intersections(a, labels=()) -> Fan:
    """Rebuild a fan from self-intersections, starting from rays (1,0), (0,1)."""
    a = [int(x) for x in a]
    n = len(a)
    if n < 3:
        raise FanError("need at least 3 self-intersection numbers")
    rays = [(1, 0), (0, 1)]
    for i in range(1, n + 1):
        p, c = rays[i - 1], rays[i]
        rays.append((-p[0] - a[i % n] * c[0], -p[1] - a[i % n] * c[1]))
    if rays[n] != rays[0] or rays[n + 1] != rays[1]:
        raise FanError(f"self-intersections {a} do not close up into a fan")
    try:
        return Fan(tuple(rays[:n]), tuple(labels))
    except FanError as exc:
        raise FanError(f"self-intersections {a} do not give a complete fan: {exc}") from exc


def blow_up(f: Fan, corner: int, label: str = "E") -> Fan:
    """Insert r[corner] + r[corner+1] between the two rays."""
    n = len(f)
    i = corner % n
    u, v = f.rays[i], f.rays[(i + 1) % n]
    new = (u[0] + v[0], u[1] + v[1])
    rays = list(f.rays)
    labels = list(f.labels)
    marks = list(f.marks)
    rays.insert(i + 1, new)
    labels.insert(i + 1, label)
    marks.insert(i + 1, 0)
    return Fan(tuple(rays), tuple(labels), tuple(marks))


def blow_down(f: Fan, ray: int) -> Fan:
    i = ray % len(f)
    if self_intersections(f)[i] != -1:
        raise FanError(f"ray {f.rays[i]} ({f.labels[i]}) is not a (-1)-curve")
    keep = [k for k in range(len(f)) if k != i]
    return Fan(tuple(f.rays[k] for k in keep), tuple(f.labels[k] for k in keep),
               tuple(f.marks[k] for k in keep))


def apply_sl2(f: Fan, M) -> Fan:
    """Map every ray (as a column vector) by M, det M = 1."""
    (p, q), (r, s) = M
    if p * s - q * r != 1:
        raise FanError(f"matrix {M} does not have determinant 1")
    rays = [(p * x + q * y, r * x + s * y) for x, y in f.rays]
    return Fan.from_rays(rays, f.labels, f.marks)


def sl2_equivalence(f: Fan, g: Fan) -> Matrix | None:
    """An M in SL(2, Z) with M(f) = g as ray sets, if one exists."""
    if len(f) != len(g):
        return None
    n = len(f)
    r1, r2 = f.rays[0], f.rays[1]
    # [r1 r2] has det 1, so its inverse is integral
    inv = ((r2[1], -r2[0]), (-r1[1], r1[0]))
    target = set(g.rays)
    for k in range(n):
        s1, s2 = g.rays[k], g.rays[(k + 1) % n]
        # M = [s1 s2] @ inv
        M = ((s1[0] * inv[0][0] + s2[0] * inv[1][0], s1[0] * inv[0][1] + s2[0] * inv[1][1]),
             (s1[1] * inv[0][0] + s2[1] * inv[1][0], s1[1] * inv[0][1] + s2[1] * inv[1][1]))
        image = {(M[0][0] * x + M[0][1] * y, M[1][0] * x + M[1][1] * y) for x, y in f.rays}
        if image == target:
            return M
    return None


def cyclically_equal(a, b) -> bool:
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    return any(a[k:] + a[:k] == b for k in range(len(a)))


P2_FAN = Fan.from_rays([(1, 1), (-1, 0), (0, -1)])


def line_conic_toric_model() -> dict[str, Fan]:
    """Fans along the toric model of the plane with a line and a conic.

    Returns the intermediate fans keyed by stage.
    """
    plane = Fan.from_rays([(1, 1), (-1, 0), (0, -1)], ("D1", "L", "H"))
    # blow up the corner D1 n L (the point p), then the corner F1 n L
    s1 = blow_up(plane, plane.index("D1"), "F1")
    s2 = blow_up(s1, s1.index("F1"), "F2")
    s3 = blow_down(s2, s2.index("L"))
    # after the blow-down H has self-intersection 2: it is the conic D2
    labels = tuple("D2" if l == "H" else l for l in s3.labels)
    marks = tuple(1 if l == "F2" else 0 for l in labels)
    f2 = Fan(s3.rays, labels, marks)
    model = apply_sl2(f2, ((1, 0), (1, 1)))
    return {"plane": plane, "modification": s2, "hirzebruch": f2, "model": model}


def nodal_cubic_toric_model() -> dict[str, Fan]:
    """Fans along the toric model of the plane with a nodal cubic."""
    plane = Fan.from_rays([(1, 0), (0, 1), (-1, -1)], ("L1", "L2", "M"))
    s1 = blow_up(plane, plane.index("L1"), "E")          # node L1 n L2
    s2 = blow_up(s1, s1.index("L1"), "F1")               # E n L1
    s3 = blow_up(s2, s2.index("E"), "F2")                # E n L2
    s4 = blow_down(s3, s3.index("L1"))
    s5 = blow_down(s4, s4.index("L2"))
    labels = tuple("D3" if l == "M" else l for l in s5.labels)
    marks = tuple(1 if l in ("F1", "F2") else 0 for l in labels)
    f3 = Fan(s5.rays, labels, marks)
    # move F2 onto (-1, 0), E onto (0, 1)
    target = Fan.from_rays([(1, 3), (0, 1), (-1, 0), (0, -1)], ("F1", "E", "F2", "D3"))
    M = _label_matching(f3, target)
    return {"plane": plane, "modification": s3, "hirzebruch": f3,
            "model": apply_sl2(f3, M), "matrix": M}


def _label_matching(f: Fan, g: Fan) -> Matrix:
    """The SL(2, Z) matrix sending each ray of f to the ray of g with the same label."""
    a1, a2 = f.rays[0], f.rays[1]
    b1, b2 = g.rays[g.index(f.labels[0])], g.rays[g.index(f.labels[1])]
    inv = ((a2[1], -a2[0]), (-a1[1], a1[0]))
    M = ((b1[0] * inv[0][0] + b2[0] * inv[1][0], b1[0] * inv[0][1] + b2[0] * inv[1][1]),
         (b1[1] * inv[0][0] + b2[1] * inv[1][0], b1[1] * inv[0][1] + b2[1] * inv[1][1]))
    for r, lab in zip(f.rays, f.labels):
        img = (M[0][0] * r[0] + M[0][1] * r[1], M[1][0] * r[0] + M[1][1] * r[1])
        if img != g.rays[g.index(lab)]:
            raise FanError(f"no SL(2,Z) matrix matches the labels of {f} and {g}")
    return M
