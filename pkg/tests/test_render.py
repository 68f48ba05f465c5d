import re
import xml.etree.ElementTree as ET

from jugglebraid.ladder import resolve_geometry, default_window
from jugglebraid.render import render_ascii, render_diagram, render_svg

NS = {"s": "http://www.w3.org/2000/svg"}


def _classes(svg, cls):
    root = ET.fromstring(svg.split("?>", 1)[1])
    return [e for e in root.iter() if e.get("class") == cls]


def test_five_one_svg():
    svg = render_svg("5 1")
    _, crossings = resolve_geometry([5, 1], default_window([5, 1]))
    assert len(_classes(svg, "strand")) == 3
    assert len(_classes(svg, "break")) == len(crossings)
    assert len(_classes(svg, "hand")) == 2
    assert _classes(svg, "chamber")


def test_zero_is_empty_band():
    svg = render_svg("0")
    assert not _classes(svg, "strand")
    assert len(_classes(svg, "hand")) == 2


def test_cascade_three_chambers():
    svg = render_svg("3", copies=3)
    assert len(_classes(svg, "strand")) == 3
    assert len(_classes(svg, "break")) % 3 == 0


def test_deterministic(tmp_path):
    a = render_svg("5 5 5 1", 2)
    b = render_svg("5 5 5 1", 2)
    assert a == b
    path = tmp_path / "d.svg"
    text = render_diagram("5 5 5 1", 2, "svg", str(path))
    assert path.read_text() == text == a


def test_ascii():
    art = render_ascii("3", copies=2)
    lines = art.splitlines()
    assert set(lines[0]) <= set("-abc") and "-" in lines[0]
    assert re.search(r"crossings \d+", lines[-1])
    assert set("abc") <= set(art)
