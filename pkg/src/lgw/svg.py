"""Plain SVG drawings of fans, scattering diagrams and tropical curves."""
from __future__ import annotations

from html import escape
from math import hypot

from .scattering import ScatteringDiagram
from .toric import Fan, self_intersections
from .tropical import TropicalCurve

SIZE = 400


class _Canvas:
    """Maps a square world window [-r, r]^2 onto a SIZE x SIZE picture."""

    def __init__(self, radius: float, center=(0.0, 0.0)):
        self.r = radius
        self.cx, self.cy = center
        self.items: list[str] = []

    def xy(self, p):
        s = SIZE / (2 * self.r)
        return ((float(p[0]) - self.cx + self.r) * s, (self.r - float(p[1]) + self.cy) * s)

    def line(self, p, q, width=1.5, color="black"):
        (x1, y1), (x2, y2) = self.xy(p), self.xy(q)
        self.items.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{color}" stroke-width="{width}"/>'
        )

    def text(self, p, s, size=11):
        x, y = self.xy(p)
        self.items.append(
            f'<text x="{x:.2f}" y="{y:.2f}" font-size="{size}" font-family="sans-serif">'
            f"{escape(s)}</text>"
        )

    def dot(self, p, r=3):
        x, y = self.xy(p)
        self.items.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}"/>')

    def grid(self):
        lo, hi = int(-self.r + self.cx) - 1, int(self.r + self.cx) + 1
        for k in range(lo, hi + 1):
            self.line((k, self.cy - self.r), (k, self.cy + self.r), 0.3, "#bbb")
        lo, hi = int(-self.r + self.cy) - 1, int(self.r + self.cy) + 1
        for k in range(lo, hi + 1):
            self.line((self.cx - self.r, k), (self.cx + self.r, k), 0.3, "#bbb")

    def render(self) -> str:
        body = "\n  ".join(self.items)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">\n  {body}\n</svg>\n'
        )


def _unit(v):
    n = hypot(v[0], v[1])
    return (v[0] / n, v[1] / n)


def fan_svg(f: Fan, radius: float = 3.0) -> str:
    """Rays labelled with divisor name and self-intersection; marks drawn as x."""
    c = _Canvas(radius)
    c.grid()
    for ray, label, mark, a in zip(f.rays, f.labels, f.marks, self_intersections(f)):
        u = _unit(ray)
        end = (u[0] * radius, u[1] * radius)
        c.line((0, 0), end, 2)
        c.text((u[0] * radius * 0.7 + 0.1, u[1] * radius * 0.7 + 0.1), f"{label}({a})")
        for k in range(mark):
            c.text((u[0] * radius * (0.9 - 0.08 * k), u[1] * radius * (0.9 - 0.08 * k)), "x", 14)
    return c.render()


def diagram_svg(d: ScatteringDiagram, radius: float = 3.0, max_label: int = 40) -> str:
    """Walls as segments from the origin, each labelled by its function."""
    c = _Canvas(radius)
    c.grid()
    for w in d.walls:
        u = _unit(w.direction)
        end = (u[0] * radius, u[1] * radius)
        start = (-end[0], -end[1]) if w.is_line else (0, 0)
        c.line(start, end, 2 if w.is_line else 1)
        label = str(w.function)
        if len(label) > max_label:
            label = label[: max_label - 3] + "..."
        c.text((u[0] * radius * 0.55, u[1] * radius * 0.55), label, 9)
    return c.render()


def curves_svg(curves: list[TropicalCurve], points=(), fan: Fan | None = None) -> str:
    """Tropical curves with edge weights; leaves run off to the window edge."""
    pts = [p for cv in curves for p in cv.positions.values()] + list(points)
    xs = [float(p[0]) for p in pts] or [0.0]
    ys = [float(p[1]) for p in pts] or [0.0]
    center = ((max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2)
    radius = max(max(xs) - min(xs), max(ys) - min(ys), 1.0) * 0.75
    c = _Canvas(radius, center)
    if fan is not None:
        for ray in fan.rays:
            u = _unit(ray)
            c.line((0, 0), (u[0] * 3 * radius, u[1] * 3 * radius), 0.8, "#888")
    for cv in curves:
        t = cv.type
        for k, (a, b) in enumerate(t.edges):
            w = t.weights[k]
            if t.is_leaf_edge(k):
                leaf, v = (a, b) if a < t.n_leaves else (b, a)
                p = cv.positions[v]
                u = _unit(t.leaves[leaf].direction)
                q = (float(p[0]) + u[0] * 3 * radius, float(p[1]) + u[1] * 3 * radius)
                mid = (float(p[0]) + u[0] * radius * 0.5, float(p[1]) + u[1] * radius * 0.5)
            else:
                p, q = cv.positions[a], cv.positions[b]
                mid = ((float(p[0]) + float(q[0])) / 2, (float(p[1]) + float(q[1])) / 2)
            c.line(p, q, 1 + 0.5 * min(w, 4))
            c.text(mid, str(w))
    for p in points:
        c.dot(p)
    return c.render()
