import io
import json

import pytest

from jugglebraid.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    text = out.getvalue()
    return code, text


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


def test_info():
    code, doc = run_json("info", "5 1")
    assert code == 0
    assert doc["schema"] == "jugglebraid.info/1"
    assert doc["ball_count"] == 3 and doc["chamber_length"] == 2


def test_link_trefoil():
    code, doc = run_json("link", "5 5 5 1")
    assert code == 0 and doc["components"] == 1
    assert doc["jones"] == "-1*A^-16 + 1*A^-12 + 1*A^-4"


def test_link_cascade_copies():
    _, doc = run_json("link", "3", "-k", "2")
    assert doc["jones"] == "1*A^-8 + -1*A^-4 + 1*A^0 + -1*A^4 + 1*A^8"
    _, doc = run_json("link", "3", "-k", "3")
    assert doc["components"] == 3


def test_link_unknot_and_mirror():
    _, doc = run_json("link", "7 1 1")
    assert doc["jones"] == "1*A^0"
    _, a = run_json("link", "4 0", "-k", "3")
    _, b = run_json("--mirror", "link", "4 0", "-k", "3")
    assert a["writhe"] == -b["writhe"] and b["mirrored"]


def test_braid():
    code, doc = run_json("braid", "4")
    assert code == 0 and doc["word"] == "B4: -1 3"
    _, raw = run_json("braid", "7 1 1", "--raw")
    assert raw["word"] == "B3: 2 1 -2 -1 -2 -1 -2 1 2 1"
    _, moved = run_json("braid", "3", "--start", "3/2")
    assert moved["window"] == ["3/2", "7/2"]


def test_compile_and_roundtrip():
    _, doc = run_json("compile", "B2: 1 1 1")
    assert doc["schema"] == "jugglebraid.compile/1" and doc["period"] == 162
    _, doc = run_json("roundtrip", "B3: 1 -2")
    assert doc["verdict"] == "MatchExact" and doc["matched"]


def test_swap():
    code, doc = run_json("swap", "5 1", "0", "1")
    assert code == 0 and doc["result"] == "2 4"


@pytest.mark.parametrize(
    "argv, code_name",
    [
        (("info", "5 4"), "NonIntegerAverage"),
        (("info", "4 3 2"), "LandingClash"),
        (("swap", "5 0 1", "1", "2"), "SwapTooFar"),
        (("info", "5 x"), "ParseError"),
        (("compile", "B2: 3"), "GeneratorRange"),
    ],
)
def test_domain_errors(argv, code_name):
    code, doc = run_json(*argv)
    assert code == 1
    assert doc["schema"] == "jugglebraid.error/1" and doc["error"] == code_name


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["braid", "3", "--start", "1"])
    assert info.value.code == 2


def test_render(tmp_path):
    code, text = run("render", "5 1")
    assert code == 0 and text.startswith("<?xml")
    path = tmp_path / "x.txt"
    code, doc = run_json("render", "3", "-f", "ascii", "-o", str(path))
    assert code == 0 and doc["path"] == str(path) and path.read_text()


def test_search():
    code, doc = run_json("search", "unknot", "--max-balls", "1", "--max-period", "2")
    assert code == 0 and doc["ball_index"] == 1 and doc["schema"] == "jugglebraid.search/1"


def test_deterministic_output():
    assert run("link", "5 3 1") == run("link", "5 3 1")
