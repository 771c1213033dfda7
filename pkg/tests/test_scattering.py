from fractions import Fraction

import pytest
import sympy as sp

from lgw import scattering as sc
from lgw.acceptance import nodal_cubic_rhs, pentagon_diagram
from lgw.series import Series, int_pow

from conftest import ONE, S

F = Fraction


@pytest.fixture(scope="module")
def nodal8():
    return sc.complete(sc.build_nodal_cubic_diagram(8))


def line(direction, terms, order):
    return sc.Wall(direction, S({ONE: 1, **terms}, order), True)


def test_primitive_normal():
    assert sc.primitive_normal((-1, 0)) == (0, -1)
    assert sc.primitive_normal((1, 3)) == (-3, 1)
    assert sc.primitive_normal((0, 1)) == (-1, 0)
    with pytest.raises(ValueError):
        sc.primitive_normal((2, 4))


def test_primitive_part():
    assert sc.primitive_part((0, 3)) == ((0, 1), 3)
    assert sc.primitive_part((-2, 4)) == ((-1, 2), 2)


def test_wall_validation():
    with pytest.raises(ValueError):
        sc.Wall((2, 0), Series.one(2))
    with pytest.raises(ValueError):  # not a unit mod t
        sc.Wall((1, 0), S({ONE: 2}, 2))
    with pytest.raises(ValueError):  # exponent not along the direction
        sc.Wall((1, 0), S({ONE: 1, (0, 1, 1, 0): 1}, 2))


def test_cross_examples():
    w = line((-1, 0), {(-1, 0, 1, 0): 1}, 3)
    a = sc.cross(w, 1)
    assert a.image_x == S({(1, 0, 0, 0): 1}, 3)
    assert a.image_y == Series({(0, 1, 0, 0): 1}, 3) * int_pow(w.function, -1)

    w = line((1, 3), {(1, 3, 0, 1): 1}, 3)
    a = sc.cross(w, 1)
    assert a.image_x == Series({(1, 0, 0, 0): 1}, 3) * int_pow(w.function, -3)
    assert a.image_y == Series({(0, 1, 0, 0): 1}, 3) * w.function

    assert sc.cross(sc.Wall((2, 5), Series.one(3)), 1).is_identity()


def test_cross_inverse():
    w = line((1, 3), {(1, 3, 0, 1): 1, (2, 6, 1, 1): F(-2, 3)}, 4)
    assert sc.cross(w, 1).compose(sc.cross(w, -1)).is_identity()
    assert sc.cross(w, -1).compose(sc.cross(w, 1)).is_identity()


def test_loop_product_trivial_cases():
    assert sc.loop_product(sc.ScatteringDiagram((), 3)).is_identity()
    d = sc.ScatteringDiagram((line((1, 0), {(1, 0, 1, 0): 1}, 3),), 3)
    assert sc.loop_product(d).is_identity()


def test_loop_product_rejects_duplicates():
    d = sc.ScatteringDiagram((line((1, 0), {(1, 0, 1, 0): 1}, 2),
                              sc.Wall((-1, 0), S({ONE: 1, (-1, 0, 0, 1): 1}, 2))), 2)
    with pytest.raises(ValueError):
        sc.loop_product(d)


def test_pentagon_deviation():
    theta = sc.loop_product(pentagon_diagram(2))
    assert not theta.is_identity()
    ux, uy = theta.units()
    one = Series.one(2)
    assert set(k for k, _ in (ux - one).items()) == {(1, 1, 1, 1)}
    assert set(k for k, _ in (uy - one).items()) == {(1, 1, 1, 1)}


# -- independent oracle: compose the five automorphisms of the completed pentagon in sympy

X, Y, T1, T2 = sp.symbols("x y t1 t2")


def sympy_cross(direction, f, sign):
    n = (-direction[1], direction[0])
    return {X: X * f ** (sign * n[0]), Y: Y * f ** (sign * n[1])}


def test_pentagon_completion_against_sympy():
    d = sc.complete(pentagon_diagram(4))
    assert [(w.direction, w.function) for w in d.rays] == \
        [((1, 1), S({ONE: 1, (1, 1, 1, 1): 1}, 4))]
    assert sc.ray_function(d, (2, 1)) == Series.one(4)
    assert sc.ray_function(d, (1, 0)) == S({ONE: 1, (1, 0, 1, 0): 1}, 4)

    # counterclockwise loop from just below the positive x-axis
    walls = [((1, 0), 1 + T1 * X, 1), ((1, 1), 1 + T1 * T2 * X * Y, 1), ((0, 1), 1 + T2 * Y, 1),
             ((1, 0), 1 + T1 * X, -1), ((0, 1), 1 + T2 * Y, -1)]
    sx, sy = X, Y
    for m, f, sign in walls:
        sub = sympy_cross(m, f, sign)
        sx, sy = sx.subs(sub, simultaneous=True), sy.subs(sub, simultaneous=True)
    s = sp.Symbol("s")
    for expr, var in ((sx, X), (sy, Y)):
        ser = sp.series(expr.subs({T1: s * T1, T2: s * T2}) / var, s, 0, 5).removeO()
        assert sp.simplify(ser - 1) == 0


def test_complete_order_zero_unchanged():
    d = sc.build_nodal_cubic_diagram(3)
    assert sc.complete(d, 0).walls == tuple(
        sc.Wall(w.direction, w.function.truncate(0), w.is_line) for w in d.walls)


def test_build_nodal_cubic_diagram():
    d = sc.build_nodal_cubic_diagram(4)
    assert len(d.walls) == 2 and all(w.is_line for w in d.walls)
    (a, b) = (w.direction for w in d.walls)
    assert abs(a[0] * b[1] - a[1] * b[0]) == 3
    with pytest.raises(ValueError):
        sc.build_nodal_cubic_diagram(0)


def test_nodal_first_order_central_ray():
    # The first-order commutator of the two lines is |det| times the index of
    # (0,3) over (0,1): 3 * 3 = 9.
    d = sc.complete(sc.build_nodal_cubic_diagram(2))
    f = sc.ray_function(d, (0, 1))
    assert f.coefficient(((0, 3), (1, 1))) == 9


def test_consistency(nodal8):
    assert sc.loop_product(nodal8).is_identity()
    assert nodal8.order == 8


def test_wall_support_and_cone(nodal8):
    for w in nodal8.rays:
        m = w.direction
        # strictly inside the cone spanned by (-1,0) and (1,3)
        assert m[1] - 3 * m[0] > 0  # det((1,3), m)
        assert m[1] > 0             # det(m, (-1,0))
        for (a, b, p, q), _ in w.function.items():
            if (a, b) != (0, 0):
                assert a * m[1] == b * m[0] and (a * m[0] + b * m[1]) > 0


def test_integrality(nodal8):
    for w in nodal8.walls:
        assert all(c.denominator == 1 for _, c in w.function.items())


def test_grading_of_central_ray(nodal8):
    for (a, b, p, q), _ in sc.ray_function(nodal8, (0, 1)).items():
        if (p, q) != (0, 0):
            assert p == q and (a, b) == (0, 3 * p)


def test_hamiltonian_coefficient_shape():
    # a derivation along n(m) acts on x, y with the ratio <n,(1,0)> : <n,(0,1)>
    mp, c = sc.hamiltonian_coefficient((0, 3, 1, 1), F(-9), F(0))
    assert mp == (0, 1) and c != 0
    with pytest.raises((ValueError, sc.ScatteringError, AssertionError)):
        sc.hamiltonian_coefficient((0, 3, 1, 1), F(1), F(1))


def test_nodal_cubic_invariants(nodal8):
    inv = sc.nodal_cubic_invariants(4, nodal8)
    assert inv[:3] == [3, F(21, 4), F(55, 3)]
    assert [d * n for d, n in enumerate(inv, start=1)] == nodal_cubic_rhs(4)


def test_nodal_rhs_oracle_sympy():
    x = sp.Symbol("x")
    A = sum(sp.binomial(4 * k, k) / (3 * k + 1) * x**k for k in range(6))
    ser = sp.series(3 * sp.log(A), x, 0, 5).removeO()
    assert [sp.Rational(ser.coeff(x, d)) for d in range(1, 5)] == \
        [sp.Rational(c.numerator, c.denominator) for c in nodal_cubic_rhs(4)]


def test_central_log_is_index_times_rhs(nodal8):
    logs = sc.central_ray_log(4, nodal8)
    assert logs == [3 * c for c in nodal_cubic_rhs(4)]


def test_diagram_json_roundtrip(nodal8):
    assert sc.ScatteringDiagram.from_json(nodal8.to_json()) == nodal8
