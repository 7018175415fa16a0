import csv
import dataclasses
import json

import pytest

from spiralknots.braidcore import SpiralParams
from spiralknots.census import (
    CSV_COLUMNS,
    InvariantViolation,
    check_record,
    emit_table,
    enumerate_census,
    find_collisions,
    load_match_table,
    make_record,
)

P7_CLASSES = [
    "(1,1,1,1,1,1)", "(1,1,1,1,1,-1)", "(1,1,1,1,-1,1)", "(1,1,1,1,-1,-1)", "(1,1,1,-1,1,1)",
    "(1,1,1,-1,1,-1)", "(1,1,1,-1,-1,1)", "(1,1,1,-1,-1,-1)", "(1,1,-1,1,1,-1)", "(1,1,-1,1,-1,1)",
    "(1,1,-1,1,-1,-1)", "(1,1,-1,-1,1,1)", "(1,1,-1,-1,1,-1)", "(1,1,-1,-1,-1,1)", "(1,-1,1,1,1,-1)",
    "(1,-1,1,1,-1,1)", "(1,-1,1,-1,1,-1)", "(1,-1,1,-1,-1,1)", "(1,-1,-1,1,1,-1)", "(1,-1,-1,-1,-1,1)",
]


def _label(eps):
    return "(" + ",".join(map(str, eps)) + ")"


def test_span_four_census():
    recs = enumerate_census(4)
    counts = {}
    for r in recs:
        counts[(r.params.p, r.params.q)] = counts.get((r.params.p, r.params.q), 0) + 1
    assert counts == {(2, 3): 1, (3, 2): 2, (2, 5): 1, (5, 2): 6}
    five = [_label(r.params.epsilon) for r in recs if r.params.p == 5]
    assert five == ["(1,1,1,1)", "(1,1,1,-1)", "(1,1,-1,1)", "(1,1,-1,-1)", "(1,-1,1,-1)", "(1,-1,-1,1)"]


def test_empty_census():
    assert enumerate_census(1) == []
    with pytest.raises(ValueError):
        enumerate_census(0)


def test_p7_slice_matches_table():
    recs = enumerate_census(12, p=7, q=2)
    assert [_label(r.params.epsilon) for r in recs] == P7_CLASSES


def test_mirror_distinction_doubles_chiral_classes():
    assert len(enumerate_census(4, p=5, q=2, distinguish_mirrors=True)) == 10


def test_links_included_on_request():
    recs = enumerate_census(4, links=True)
    hopf = [r for r in recs if (r.params.p, r.params.q) == (2, 2)]
    assert len(hopf) == 1 and not hopf[0].is_knot and hopf[0].genus == 0


def test_record_fields():
    r = make_record(SpiralParams(3, 2, (1, -1)), with_jones=True, with_bridge=True)
    assert r.determinant == 5 and r.gamma == 1 and r.second_coeff == -3 and not r.torus
    assert r.bridge_q == 2 and r.bridge_p <= 3 and r.bridge_bound == 2
    assert r.jones.value_at_one() == 1


def test_check_record_catches_tampering():
    r = make_record(SpiralParams(3, 2, (1, -1)))
    check_record(r)
    with pytest.raises(InvariantViolation):
        check_record(dataclasses.replace(r, span=3))
    with pytest.raises(InvariantViolation):
        check_record(dataclasses.replace(r, torus=True))


def test_torus_only_has_no_collisions():
    recs = [r for r in enumerate_census(12) if r.torus]
    assert find_collisions(recs) == []


def test_known_collision_pair_at_p9():
    pair = {(1, -1, 1, 1, -1, -1, 1, -1), (1, -1, -1, 1, -1, 1, 1, -1)}
    recs = [make_record(SpiralParams(9, 2, e), with_jones=True) for e in sorted(pair) + [(1,) * 8]]
    groups = find_collisions(recs)
    hit = [g for g in groups if pair <= {r.params.epsilon for r in g.records}]
    assert len(hit) == 1 and hit[0].jones_agree is True


def test_collision_without_jones_is_unannotated():
    groups = find_collisions(enumerate_census(8, p=9, q=2))
    assert groups and all(g.jones_agree is None for g in groups)


def test_csv_emit(tmp_path):
    out = emit_table(enumerate_census(4), "csv", tmp_path / "c.csv")
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 10
    assert tuple(rows[0]) == CSV_COLUMNS
    fig8 = next(r for r in rows if (r["p"], r["epsilon"]) == ("3", "+-"))
    assert fig8["alexander_coeffs"] == "1 -3 1" and fig8["determinant"] == "5"


def test_json_emit(tmp_path):
    out = emit_table(enumerate_census(4, with_jones=True), "json", tmp_path / "c.json")
    data = json.loads(out.read_text())
    assert isinstance(data, list) and len(data) == 10
    assert data[0]["alexander"] == {"minexp": 0, "coeffs": [1, -1, 1]}
    assert data[0]["jones"]["encoding"] == "doubled-exponent"
    empty = emit_table([], "json", tmp_path / "e.json")
    assert json.loads(empty.read_text()) == []


def test_markdown_emit(tmp_path):
    out = emit_table(enumerate_census(12, p=7, q=2), "md", tmp_path / "t.md")
    text = out.read_text()
    rows = [line.split("|")[1].strip() for line in text.splitlines() if line.startswith("| (")]
    assert rows == P7_CLASSES


def test_markdown_marks_non_coprime(tmp_path):
    text = emit_table(enumerate_census(12), "md", tmp_path / "t.md", max_span=12).read_text()
    assert "| (1,1) | " in text and "--" in text


def test_unwritable_path(tmp_path):
    with pytest.raises(OSError):
        emit_table(enumerate_census(4), "csv", tmp_path / "missing" / "c.csv")


def test_bad_format(tmp_path):
    with pytest.raises(ValueError):
        emit_table(enumerate_census(4), "xml", tmp_path / "c.xml")


def test_match_table(tmp_path):
    f = tmp_path / "names.csv"
    f.write_text('name,alexander_coeffs\n4_1,1 -3 1\n3_1,"[-1, 1, -1]"\n')
    table = load_match_table(f)
    recs = enumerate_census(2, match_table=table)
    names = {(r.params.p, r.params.q): r.matched_name for r in recs}
    assert names[(3, 2)] in {"Δ-compatible with 3_1", "Δ-compatible with 4_1"}
    assert names[(2, 3)] == "Δ-compatible with 3_1"
    bad = tmp_path / "bad.csv"
    bad.write_text("knot,poly\nx,1\n")
    with pytest.raises(ValueError):
        load_match_table(bad)


def test_deterministic(tmp_path):
    a = emit_table(enumerate_census(6, with_bridge=True), "csv", tmp_path / "a.csv").read_bytes()
    b = emit_table(enumerate_census(6, with_bridge=True), "csv", tmp_path / "b.csv").read_bytes()
    assert a == b
