import pytest

from lgw import toric as tc
from lgw.toric import Fan, FanError


def test_self_intersections_examples():
    assert tc.self_intersections(Fan.from_rays([(1, 0), (0, 1), (-1, -1)])) == [1, 1, 1]
    line_conic = Fan.from_rays([(1, 2), (0, 1), (-1, 0), (0, -1)], ("D1", "F1", "F2", "D2"))
    assert dict(zip(line_conic.labels, tc.self_intersections(line_conic))) == \
        {"D1": 0, "F1": -2, "F2": 0, "D2": 2}
    nodal_cubic = Fan.from_rays([(1, 3), (0, 1), (-1, 0), (0, -1)], ("F1", "E", "F2", "D3"))
    assert dict(zip(nodal_cubic.labels, tc.self_intersections(nodal_cubic))) == \
        {"F1": 0, "E": -3, "F2": 0, "D3": 3}


def test_fan_validation():
    with pytest.raises(FanError):
        Fan(((1, 0), (0, 1)))
    with pytest.raises(FanError):
        Fan(((2, 0), (0, 1), (-1, -1)))
    with pytest.raises(FanError):  # (1,0),(1,2) has det 2
        Fan.from_rays([(1, 0), (1, 2), (-1, -1)])


def test_from_self_intersections_examples():
    p2 = tc.fan_from_self_intersections([1, 1, 1])
    assert tc.sl2_equivalence(p2, tc.P2_FAN) is not None
    f2 = tc.fan_from_self_intersections([0, -2, 0, 2])
    assert tc.self_intersections(f2) == [0, -2, 0, 2]
    with pytest.raises(FanError):
        tc.fan_from_self_intersections([0, -1, 0])


@pytest.mark.parametrize("seq", [[1, 1, 1], [0, -2, 0, 2], [0, -3, 0, 3], [0, 0, 0, 0],
                                 [-1, -1, -1, -1, -1, -1], [-1, -1, -1, 0, 0]])
def test_selfint_roundtrip(seq):
    f = tc.fan_from_self_intersections(seq)
    assert tc.self_intersections(f) == seq
    g = tc.fan_from_self_intersections(tc.self_intersections(f))
    assert tc.sl2_equivalence(g, f) is not None


def test_blow_up_down_roundtrip():
    f = tc.P2_FAN
    for corner in range(3):
        g = tc.blow_up(f, corner)
        a = tc.self_intersections(g)
        i = g.labels.index("E")
        assert a[i] == -1
        assert tc.blow_down(g, i) == f
        # neighbours drop by one
        b = tc.self_intersections(f)
        assert a[i - 1] == b[corner] - 1 and a[(i + 1) % 4] == b[(corner + 1) % 3] - 1


def test_blow_down_requires_minus_one():
    with pytest.raises(FanError):
        tc.blow_down(tc.P2_FAN, 0)


def test_apply_sl2():
    f = tc.fan_from_self_intersections([0, -2, 0, 2])
    assert tc.apply_sl2(f, ((1, 0), (0, 1))) == f.normalized()
    M = ((2, 1), (1, 1))
    assert tc.cyclically_equal(tc.self_intersections(tc.apply_sl2(f, M)), tc.self_intersections(f))
    with pytest.raises(FanError):
        tc.apply_sl2(f, ((2, 0), (0, 1)))


def test_shear_to_model():
    stages = tc.line_conic_toric_model()
    right = tc.apply_sl2(stages["hirzebruch"], ((1, 0), (1, 1)))
    assert right == stages["model"]
    assert set(right.rays) == {(1, 2), (0, 1), (-1, 0), (0, -1)}


def test_line_conic_pipeline():
    s = tc.line_conic_toric_model()
    assert tc.self_intersections(s["plane"]) == [1, 1, 1]
    m = s["model"]
    assert dict(zip(m.labels, tc.self_intersections(m))) == {"D1": 0, "F1": -2, "F2": 0, "D2": 2}
    assert dict(zip(m.labels, m.rays)) == {"D1": (1, 2), "F1": (0, 1), "F2": (-1, 0), "D2": (0, -1)}
    assert m.marks[m.index("F2")] == 1


def test_nodal_cubic_pipeline():
    s = tc.nodal_cubic_toric_model()
    m = s["model"]
    assert dict(zip(m.labels, tc.self_intersections(m))) == {"F1": 0, "E": -3, "F2": 0, "D3": 3}
    assert dict(zip(m.labels, m.rays)) == {"F1": (1, 3), "E": (0, 1), "F2": (-1, 0), "D3": (0, -1)}
    assert m.marks[m.index("F1")] == m.marks[m.index("F2")] == 1


def test_sl2_equivalence_negative():
    a = tc.fan_from_self_intersections([0, -2, 0, 2])
    b = tc.fan_from_self_intersections([0, -3, 0, 3])
    assert tc.sl2_equivalence(a, b) is None


def test_fan_json_roundtrip():
    f = tc.line_conic_toric_model()["model"]
    assert Fan.from_json(f.to_json()) == f.normalized()
