import re
import xml.etree.ElementTree as ET

import pytest

from listaccess.core import CostModel
from listaccess.datagen import GenSpec
from listaccess.experiments import (
    EmptyInput,
    ExperimentRow,
    ExperimentSpec,
    FileRow,
    emit_chart,
    emit_csv,
    emit_summary_csv,
    format_gain,
    parse_csv,
    parse_spec,
    run_experiment,
    run_pair,
    summarize,
    table1_spec,
    table2_spec,
)

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def table1_rows():
    return run_experiment(table1_spec(seed=11))


@pytest.fixture(scope="module")
def table2_rows():
    return run_experiment(table2_spec(seed=11))


def test_worked_pair_row():
    row = run_pair([1, 2, 3], [3, 2, 1, 3, 2])
    assert (row.n, row.l, row.c_mtf, row.c_imtf) == (5, 3, 15, 11)
    assert row.g == pytest.approx(26.67, abs=0.01)
    assert emit_csv([row]) == "N,L,C_MTF,C_IMTF,g_percent\n5,3,15,11,26.67\n"


@pytest.mark.parametrize("c_mtf, c_imtf, text", [
    (867, 702, "19.03"),
    (15, 11, "26.67"),
    (325, 234, "28.00"),
    (200, 133, "33.50"),
    # 1/800 * 100 = 0.125 exactly; half-up gives 0.13
    (800, 799, "0.13"),
    (10, 10, "0.00"),
])
def test_format_gain(c_mtf, c_imtf, text):
    assert format_gain(c_mtf, c_imtf) == text


def test_table_shapes(table1_rows, table2_rows):
    assert [r.n for r in table1_rows] == list(range(100, 1001, 100))
    assert len(table2_rows) == 12
    assert [r.family for r in table2_rows[:4]] == ["base16", "base10", "base8", "base2"]
    for r in table1_rows + table2_rows:
        assert r.c_mtf >= r.n and r.c_imtf >= r.n
        assert float(r.g_text) == pytest.approx(r.g, abs=0.005)
        assert r.g > 0


def test_rows_use_same_sequence():
    spec = ExperimentSpec([GenSpec("numeric", 120, 4, base=8)])
    (row,) = run_experiment(spec)
    from listaccess import build_list, gen_sequence, run_imtf, run_mtf
    seq = gen_sequence(GenSpec("numeric", 120, 4, base=8))
    assert row.c_mtf == run_mtf(build_list(seq), seq).total_cost
    assert row.c_imtf == run_imtf(build_list(seq), seq).total_cost


def test_trials_and_summary():
    spec = ExperimentSpec([GenSpec("alpha", 200, 0), GenSpec("numeric", 50, 0, base=2)], trials=3)
    rows = run_experiment(spec)
    assert len(rows) == 6
    assert [r.seed for r in rows[:3]] == [0, 1, 2]
    cells = summarize(rows)
    assert [c.trials for c in cells] == [3, 3]
    assert cells[0].g == pytest.approx(sum(r.g for r in rows[:3]) / 3)
    text = emit_summary_csv(cells)
    assert text.splitlines()[0].startswith("family,N,trials")
    assert len(text.splitlines()) == 3


def test_parallel_matches_serial():
    spec = table2_spec(seed=3)
    serial = emit_csv(run_experiment(spec))
    spec.jobs = 2
    assert emit_csv(run_experiment(spec)) == serial


def test_partial_model_shifts_costs():
    full = run_experiment(table1_spec(seed=2))
    partial = run_experiment(table1_spec(seed=2, model=CostModel.PARTIAL))
    for f, p in zip(full, partial):
        assert f.c_mtf == p.c_mtf + f.n
        assert f.c_imtf == p.c_imtf + f.n


def test_csv_roundtrip(table1_rows):
    text = emit_csv(table1_rows)
    assert len(text.splitlines()) == 11
    parsed = parse_csv(text)
    assert [(r.n, r.l, r.c_mtf, r.c_imtf) for r in parsed] == \
        [(r.n, r.l, r.c_mtf, r.c_imtf) for r in table1_rows]


def test_csv_empty():
    with pytest.raises(EmptyInput):
        emit_csv([])


def test_parse_csv_bad_header():
    with pytest.raises(ValueError):
        parse_csv("a,b\n1,2\n")


def test_parse_spec(tmp_path):
    text = """
    # comment
    alpha 100 7
    numeric 16 50 3   # trailing
    file data/seq.txt
    file hex.txt numeric 16
    """
    rows = parse_spec(text)
    assert rows == [
        GenSpec("alpha", 100, 7),
        GenSpec("numeric", 50, 3, base=16),
        FileRow("data/seq.txt"),
        FileRow("hex.txt", "numeric", 16),
    ]
    with pytest.raises(ValueError, match="line 1"):
        parse_spec("numeric 3 50 1")
    with pytest.raises(ValueError):
        parse_spec("alpha 10")


def test_file_rows(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("32132\n")
    (row,) = run_experiment(ExperimentSpec([FileRow(str(path))]))
    # list built by first occurrence: [3, 2, 1]
    assert (row.n, row.l) == (5, 3)
    assert row.family == "s.txt"


def test_empty_spec():
    with pytest.raises(ValueError):
        ExperimentSpec([])


def _parse_svg(text):
    return ET.fromstring(text)


def _points(polyline):
    return [tuple(map(float, p.split(","))) for p in polyline.get("points").split()]


def test_line_chart_table1(table1_rows):
    root = _parse_svg(emit_chart(table1_rows, "line", ["c_mtf", "c_imtf"]))
    lines = {p.get("data-series"): _points(p) for p in root.iter(SVG + "polyline")}
    assert set(lines) == {"c_mtf", "c_imtf"}
    assert len(lines["c_mtf"]) == 10
    # SVG y grows downward: lower cost means larger y
    for (xm, ym), (xi, yi), row in zip(lines["c_mtf"], lines["c_imtf"], table1_rows):
        assert xm == xi
        if row.g > 0:
            assert yi > ym
    labels = {t.get("class"): t.text for t in root.iter(SVG + "text") if t.get("class")}
    assert labels["xlabel"] == "Request sequence length N"
    assert labels["ylabel"] == "Total access cost"


def test_line_chart_groups_by_family(table2_rows):
    root = _parse_svg(emit_chart(table2_rows, "line", ["g"]))
    groups = [p.get("data-group") for p in root.iter(SVG + "polyline")]
    assert groups == ["base16", "base10", "base8", "base2"]


def test_bar_chart_table2(table2_rows):
    root = _parse_svg(emit_chart(table2_rows, "bar", ["g"]))
    bars = [r for r in root.iter(SVG + "rect") if r.get("class") == "bar"]
    assert len(bars) == 12
    groups = [b.get("data-group") for b in bars]
    assert groups == ["base16"] * 3 + ["base10"] * 3 + ["base8"] * 3 + ["base2"] * 3
    labels = [t.text for t in root.iter(SVG + "text") if t.get("class") == "group-label"]
    assert labels == ["base16", "base10", "base8", "base2"]


def test_bar_chart_single_row():
    row = run_pair([1, 2, 3], [3, 2, 1, 3, 2])
    root = _parse_svg(emit_chart([row], "bar", ["c_mtf", "c_imtf"]))
    bars = [r for r in root.iter(SVG + "rect") if r.get("class") == "bar"]
    assert [b.get("data-series") for b in bars] == ["c_mtf", "c_imtf"]
    heights = [float(b.get("height")) for b in bars]
    assert heights[0] > heights[1] > 0


def test_chart_handles_negative_gain():
    rows = [ExperimentRow(10, 3, 20, 25, -25.0, "x"), ExperimentRow(20, 3, 40, 30, 25.0, "x")]
    root = _parse_svg(emit_chart(rows, "bar", ["g"]))
    assert len([r for r in root.iter(SVG + "rect") if r.get("class") == "bar"]) == 2


def test_chart_errors():
    with pytest.raises(EmptyInput):
        emit_chart([], "line")
    row = run_pair([1, 2], [1, 2])
    with pytest.raises(ValueError):
        emit_chart([row], "pie")
    with pytest.raises(ValueError):
        emit_chart([row], "line", ["cost"])


def test_chart_deterministic(table1_rows):
    assert emit_chart(table1_rows) == emit_chart(table1_rows)
    assert not re.search(r"\d{4}-\d{2}-\d{2}", emit_chart(table1_rows))


def test_summary_keeps_separate_experiments_apart():
    rows = run_experiment(table1_spec(seed=1)) + run_experiment(table2_spec(seed=1))
    assert len(summarize(rows)) == 22
