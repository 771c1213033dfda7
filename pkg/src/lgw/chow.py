"""
Curve classes on the surfaces of the line-plus-conic degeneration.

Classes are integer vectors in a fixed basis with an explicit intersection
matrix.  The two-fold blow-up of the plane uses the basis (H, e1, e2) with
pairing diag(1, -1, -1), where e2 is the class of the second, infinitely
near, exceptional curve:

    D1 = H - e1,  L = H - e1 - e2,  D2 = 2H - e1 - e2,  F1 = e1 - e2,  F2 = e2.

The special fibre is F_2 glued to Y = Bl_pt(P^1 x P^1) along the fibre F2 of
F_2, which is identified with a divisor of class H1 on Y.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Lattice:
    name: str
    basis: tuple[str, ...]
    pairing: tuple[tuple[int, ...], ...]

    def cls(self, **coords) -> "DivisorClass":
        unknown = set(coords) - set(self.basis)
        if unknown:
            raise KeyError(f"{sorted(unknown)} not in basis {self.basis}")
        return DivisorClass(self, tuple(coords.get(b, 0) for b in self.basis))

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * len(self.basis))


@dataclass(frozen=True)
class DivisorClass:
    lattice: Lattice
    coords: tuple[int, ...]

    def _check(self, other: "DivisorClass"):
        if other.lattice is not self.lattice:
            raise ValueError(f"classes live on {self.lattice.name} and {other.lattice.name}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(-a for a in self.coords))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(k * a for a in self.coords))

    def dot(self, other: "DivisorClass") -> int:
        self._check(other)
        Q = self.lattice.pairing
        return sum(a * Q[i][j] * b
                   for i, a in enumerate(self.coords)
                   for j, b in enumerate(other.coords))

    def __repr__(self) -> str:
        terms = [f"{c}*{b}" for c, b in zip(self.coords, self.lattice.basis) if c]
        return f"{self.lattice.name}[{' + '.join(terms) or '0'}]"


BLOWUP_PLANE = Lattice("Bl2P2", ("H", "e1", "e2"), ((1, 0, 0), (0, -1, 0), (0, 0, -1)))
# F_2 with section D2 (square 2) and fibre F2 (square 0)
HIRZEBRUCH_F2 = Lattice("F2", ("D2", "F2"), ((2, 1), (1, 0)))
# Y = Bl_pt(P^1 x P^1): rulings H1, H2 and exceptional curve L
Y_SURFACE = Lattice("Y", ("H1", "H2", "L"), ((0, 1, 0), (1, 0, 0), (0, 0, -1)))


def blowup_plane_classes() -> dict[str, DivisorClass]:
    c = BLOWUP_PLANE.cls
    return {
        "H": c(H=1),
        "D1": c(H=1, e1=-1),
        "L": c(H=1, e1=-1, e2=-1),
        "D2": c(H=2, e1=-1, e2=-1),
        "F1": c(e1=1, e2=-1),
        "F2": c(e2=1),
    }


def chow_verify_blowup_plane() -> dict[str, tuple[object, object, bool]]:
    """Check every stated relation; maps relation -> (computed, expected, ok)."""
    k = blowup_plane_classes()
    H, D1, L, D2, F1, F2 = (k[n] for n in ("H", "D1", "L", "D2", "F1", "F2"))
    checks = {
        "[D1] = [L] + [F2]": (D1, L + F2),
        "[H] = [D1] + [F1] + [F2]": (H, D1 + F1 + F2),
        "[D2] = [H] + [L]": (D2, H + L),
        "H.D1 = 1": (H.dot(D1), 1),
        "H.L = 1": (H.dot(L), 1),
        "L^2 = -1": (L.dot(L), -1),
        "H^2 = 1": (H.dot(H), 1),
        "D1^2 = 0": (D1.dot(D1), 0),
        "D2^2 = 2": (D2.dot(D2), 2),
        "D2.L = 0": (D2.dot(L), 0),
    }
    return {name: (got, want, got == want) for name, (got, want) in checks.items()}


@dataclass(frozen=True)
class PrelogClass:
    """A pair (class on F_2, class on Y), modulo the gluing F2 ~ H1."""

    f2_side: DivisorClass
    y_side: DivisorClass

    def canonical(self) -> "PrelogClass":
        # move every multiple of H1 on Y over to the fibre F2 on F_2
        h1 = self.y_side.coords[0]
        return PrelogClass(self.f2_side + h1 * HIRZEBRUCH_F2.cls(F2=1),
                           self.y_side - h1 * Y_SURFACE.cls(H1=1))

    def __add__(self, other: "PrelogClass") -> "PrelogClass":
        return PrelogClass(self.f2_side + other.f2_side, self.y_side + other.y_side)

    def __sub__(self, other: "PrelogClass") -> "PrelogClass":
        return PrelogClass(self.f2_side - other.f2_side, self.y_side - other.y_side)

    def __rmul__(self, k: int) -> "PrelogClass":
        return PrelogClass(k * self.f2_side, k * self.y_side)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrelogClass):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.f2_side.coords == b.f2_side.coords and a.y_side.coords == b.y_side.coords

    def __hash__(self):
        c = self.canonical()
        return hash((c.f2_side.coords, c.y_side.coords))

    def gluing_degrees(self) -> tuple[int, int]:
        """Degrees of the two components on the gluing curve (F2 on F_2, H1 on Y)."""
        return (self.f2_side.dot(HIRZEBRUCH_F2.cls(F2=1)),
                self.y_side.dot(Y_SURFACE.cls(H1=1)))

    def matches(self) -> bool:
        a, b = self.gluing_degrees()
        return a == b

    def dot(self, other: "PrelogClass") -> int:
        return self.f2_side.dot(other.f2_side) + self.y_side.dot(other.y_side)

    def __repr__(self) -> str:
        return f"({self.f2_side!r}, {self.y_side!r})"


def prelog(f2=None, y=None) -> PrelogClass:
    return PrelogClass(HIRZEBRUCH_F2.cls(**(f2 or {})), Y_SURFACE.cls(**(y or {})))


def prelog_generators() -> dict[str, PrelogClass]:
    return {
        "(D2,H2)": prelog({"D2": 1}, {"H2": 1}),
        "(F2,0)": prelog({"F2": 1}),
        "(0,H1)": prelog(y={"H1": 1}),
        "(0,L)": prelog(y={"L": 1}),
    }


def specialization() -> dict[str, PrelogClass]:
    """The specialisation map on the generators D1, F1, F2 of the blown-up plane."""
    g = prelog_generators()
    return {
        "D1": g["(F2,0)"],
        "F1": g["(D2,H2)"] - 2 * g["(F2,0)"],
        "F2": g["(F2,0)"] - g["(0,L)"],
    }


def specialize_H() -> PrelogClass:
    """sigma([H]) = sigma([D1]) + sigma([F1]) + sigma([F2])."""
    s = specialization()
    result = s["D1"] + s["F1"] + s["F2"]
    if not result.matches():
        raise AssertionError(f"{result} violates the gluing condition")
    return result


def prelog_report() -> dict[str, tuple[object, object, bool]]:
    """Every finite check on the prelog classes, as relation -> (computed, expected, ok)."""
    g = prelog_generators()
    s = specialization()
    k = blowup_plane_classes()
    sH = specialize_H()
    checks = {
        "(F2,0) = (0,H1)": (g["(F2,0)"], g["(0,H1)"]),
        "(D2,H2).(F2,0) = 1": (g["(D2,H2)"].dot(g["(F2,0)"]), 1),
        "(D2,H2).(0,L) = 0": (g["(D2,H2)"].dot(g["(0,L)"]), 0),
        "(F2,0).(0,L) = 0": (g["(F2,0)"].dot(g["(0,L)"]), 0),
        "(D2,H2).(0,H1) = (D2,H2).(F2,0)": (g["(D2,H2)"].dot(g["(0,H1)"]),
                                            g["(D2,H2)"].dot(g["(F2,0)"])),
        "sigma(H) = (D2, H2 - L)": (sH, prelog({"D2": 1}, {"H2": 1, "L": -1})),
        "sigma(F1) = (F1, H2)": (s["F1"], prelog({"D2": 1, "F2": -2}, {"H2": 1})),
        "sigma(F2) = (0, H1 - L)": (s["F2"], prelog(y={"H1": 1, "L": -1})),
        "sigma(H) matches on the gluing curve": (sH.matches(), True),
    }
    for name, c in s.items():
        checks[f"sigma({name}) matches on the gluing curve"] = (c.matches(), True)
    for name, c in list(s.items()) + [("H", sH)]:
        checks[f"sigma({name}).sigma(H) = {name}.H"] = (c.dot(sH), k[name].dot(k["H"]))
    return {name: (got, want, got == want) for name, (got, want) in checks.items()}
