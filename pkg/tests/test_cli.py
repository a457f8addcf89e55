import io
import json
import xml.etree.ElementTree as ET

import pytest

from fieldevo import cli
from fieldevo.fixtures import NAMES, fixture_path, load_fixture
from fieldevo.metrics import weight_matrix
from fieldevo.report import canonical_json, parse_weights_csv
from fieldevo.svg import nice_step, ticks

SVG_NS = "{http://www.w3.org/2000/svg}"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def takeover_csv():
    return str(fixture_path("takeover"))


def test_missing_input_is_usage_error(tmp_path):
    missing = tmp_path / "missing.csv"
    code, _, err = run("fit", "--input", str(missing))
    assert code == 2
    assert str(missing) in err


def test_insufficient_data_exit_1(tmp_path):
    path = tmp_path / "three_zero_years.csv"
    path.write_text("year,discipline,count,documents\n"
                    "2000,A,0,0\n2001,A,0,0\n2002,A,0,0\n2003,A,4,4\n2004,A,9,9\n")
    code, out, err = run("fit", "--model", "growth", "--input", str(path))
    assert code == 1
    assert "InsufficientData" in err and out == ""
    assert err.count("\n") == 1


def test_parse_error_exit_2(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("year,discipline,count\n2000,A,-3\n")
    code, _, err = run("weights", "--input", str(path))
    assert code == 2 and "NegativeCount" in err


def test_bad_usage():
    assert run()[0] == 2
    assert run("fit")[0] == 2
    assert run("fit", "--input", "x.csv", "--model", "cubic")[0] == 2


def test_fit_json(takeover_csv):
    code, out, _ = run("fit", "--input", takeover_csv, "--model", "growth")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "growth"
    assert doc["b"] == pytest.approx(0.16, abs=0.01)
    assert doc["proxy"] is False
    assert out == canonical_json(doc)


def test_fit_best(takeover_csv):
    code, out, _ = run("fit", "--input", takeover_csv)
    assert code == 0 and json.loads(out)["kind"] in ("linear", "growth", "exponential")


def test_weights_json_and_csv(takeover_csv):
    code, out, _ = run("weights", "--input", takeover_csv)
    assert code == 0
    doc = json.loads(out)
    w = weight_matrix(load_fixture("takeover"))
    assert doc["1990"] == pytest.approx(w.weights[1990], abs=0)

    code, out, _ = run("weights", "--input", takeover_csv, "--csv")
    assert code == 0 and out.startswith("year,discipline,weight\n")
    back = parse_weights_csv(out)
    for t, row in w.weights.items():
        for d, v in row.items():
            assert abs(back.weights[t][d] - v) <= 1e-12


def test_laws_options(takeover_csv):
    code, out, _ = run("laws", "--input", takeover_csv, "--threshold", "0.5", "--top-k", "1",
                       "--band-max", "1", "--persistence-min", "0.2")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["threshold"] == 0.5 and doc["config"]["top_k"] == 1
    assert doc["law1"]["size"] == 1 and doc["law1"]["pass"] is True
    assert doc["law3"]["emergent"] == ["Computer Science"]


def test_laws_invalid_option(takeover_csv):
    assert run("laws", "--input", takeover_csv, "--threshold", "1.5")[0] == 2


def test_report_outputs(tmp_path, takeover_csv):
    code, _, _ = run("report", "--input", takeover_csv, "--out", str(tmp_path / "r"))
    assert code == 0
    files = sorted(p.name for p in (tmp_path / "r").iterdir())
    assert files == ["report.json", "trend.svg", "weights.csv", "weights.svg"]
    doc = json.loads((tmp_path / "r" / "report.json").read_text())
    assert set(doc) == {"schema_version", "field_name", "trend", "weights", "laws", "config", "provenance"}
    assert doc["field_name"] == "fixture_takeover"
    assert len(doc["provenance"]["input_sha256"]) == 64
    assert set(doc["trend"]["candidates"]) == {"linear", "growth", "exponential"}
    assert doc["laws"]["law3"]["pass"] is True


@pytest.mark.parametrize("name", NAMES)
def test_svg_well_formed_one_path_per_series(tmp_path, name):
    out = tmp_path / name
    assert run("report", "--input", str(fixture_path(name)), "--out", str(out))[0] == 0
    trend = ET.parse(out / "trend.svg").getroot()
    assert trend.get("width") == "960" and trend.get("height") == "540"
    assert len(trend.findall(f"{SVG_NS}polyline")) == 1
    assert len(trend.findall(f"{SVG_NS}path")) == 1
    stacked = ET.parse(out / "weights.svg").getroot()
    assert len(stacked.findall(f"{SVG_NS}path")) == len(load_fixture(name).disciplines)


def test_report_partial_on_short_corpus(tmp_path):
    path = tmp_path / "short.csv"
    path.write_text("year,discipline,count\n2000,A,2\n2000,B,1\n2001,A,3\n")
    code, _, _ = run("report", "--input", str(path), "--out", str(tmp_path / "o"))
    assert code == 0
    doc = json.loads((tmp_path / "o" / "report.json").read_text())
    assert doc["laws"]["law3"]["error"] == "InsufficientData"
    assert doc["provenance"]["proxy"] is True
    root = ET.parse(tmp_path / "o" / "trend.svg").getroot()
    assert len(root.findall(f"{SVG_NS}path")) == 0


def test_synth_command(tmp_path):
    cfg = fixture_path("uniform20", "cfg")
    out = tmp_path / "u.csv"
    assert run("synth", "--spec", str(cfg), "--out", str(out))[0] == 0
    assert out.read_text() == fixture_path("uniform20").read_text()


def test_synth_bad_spec(tmp_path):
    cfg = tmp_path / "s.cfg"
    cfg.write_text("kind = growth\n")
    assert run("synth", "--spec", str(cfg), "--out", str(tmp_path / "x.csv"))[0] == 2


def test_canonical_json_format():
    text = canonical_json({"b": 0.1, "a": [1, 2.0, float("inf")], "c": {"z": True, "y": None}})
    assert text == ('{\n  "a": [\n    1,\n    2.0,\n    null\n  ],\n  "b": 0.10000000000000001,\n'
                    '  "c": {\n    "y": null,\n    "z": true\n  }\n}\n')
    assert json.loads(text)["b"] == 0.1


@pytest.mark.parametrize("span, step", [(10, 2), (37, 5), (1, 0.2), (1000, 200), (0.5, 0.1)])
def test_nice_step(span, step):
    assert nice_step(span) == pytest.approx(step)


def test_ticks():
    assert ticks(1980, 2017, integer=True) == [1980, 1985, 1990, 1995, 2000, 2005, 2010, 2015]
    assert ticks(0, 1) == pytest.approx([0, 0.2, 0.4, 0.6, 0.8, 1.0])
