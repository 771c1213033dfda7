import xml.etree.ElementTree as ET

from lgw import scattering, svg, toric, tropical


def parse(text):
    return ET.fromstring(text)


def test_fan_svg_labels():
    f = toric.line_conic_toric_model()["model"]
    root = parse(svg.fan_svg(f))
    texts = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    assert "D2(2)" in texts and "F1(-2)" in texts and "x" in texts


def test_diagram_svg():
    d = scattering.complete(scattering.build_nodal_cubic_diagram(2))
    root = parse(svg.diagram_svg(d))
    lines = list(root.iter("{http://www.w3.org/2000/svg}line"))
    assert len(lines) > len(d.walls)


def test_curves_svg():
    deg, curves = tropical.enumerate_generic(tropical.f2_leaves(2, (2, 0)), 1, seed=1)
    root = parse(svg.curves_svg([c for c, _ in curves], deg.points))
    texts = {t.text for t in root.iter("{http://www.w3.org/2000/svg}text")}
    assert {"4", "2", "1"} <= texts
    assert len(list(root.iter("{http://www.w3.org/2000/svg}circle"))) == 1
