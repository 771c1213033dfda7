from lgw import chow


def test_blowup_relations():
    report = chow.chow_verify_blowup_plane()
    assert len(report) == 10
    assert all(ok for *_, ok in report.values()), report


def test_named_values():
    k = chow.blowup_plane_classes()
    assert k["D2"].dot(k["D2"]) == 2
    assert k["L"].dot(k["L"]) == -1
    assert k["H"].dot(k["D1"]) == 1


def test_specialize_H():
    sH = chow.specialize_H()
    assert sH == chow.prelog({"D2": 1}, {"H2": 1, "L": -1})
    a, b = sH.gluing_degrees()
    assert a == b == 1


def test_additivity_and_generators():
    s = chow.specialization()
    assert s["D1"] + s["F1"] + s["F2"] == chow.specialize_H()
    g = chow.prelog_generators()
    assert g["(D2,H2)"].dot(g["(F2,0)"]) == 1
    assert g["(D2,H2)"].dot(g["(0,L)"]) == 0
    assert g["(F2,0)"].dot(g["(0,L)"]) == 0
    assert g["(F2,0)"] == g["(0,H1)"]
    assert all(c.matches() for c in s.values())


def test_prelog_report_all_pass():
    report = chow.prelog_report()
    assert all(ok for *_, ok in report.values()), report


def test_lattice_mismatch():
    import pytest
    with pytest.raises(ValueError):
        chow.HIRZEBRUCH_F2.cls(D2=1).dot(chow.Y_SURFACE.cls(H1=1))
