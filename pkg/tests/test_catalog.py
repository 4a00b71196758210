from __future__ import annotations

import pytest

from kmss.atlas import (
    COLUMNS,
    classify,
    csv_to_json,
    emit_table,
    list_forms,
    row_fixture,
    table_json,
)
from kmss.catalog import TABLES, RealFormLabel, get_table
from kmss.vogan import equivalence_class, vogan

DEFAULT_N = {"A-odd": 3, "A-even": 3, "B": 3, "C-odd": 3, "C-even": 3, "D-even": 6, "D-odd": 5}

# published number of rows per table
ROW_COUNTS = {"A-odd": 8, "A-even": 5, "B": 11, "C-odd": 5, "C-even": 6, "D-even": 10, "D-odd": 9}

# published cells, with the rank parameter substituted by hand
CELLS = {
    ("A-odd.1", 3): ("su⁽¹⁾(6)", "su⁽¹⁾(6)", ""),
    ("A-odd.2", 3): ("su₋₁⁽¹⁾(p,q)", "su(6)", "SU₋₁⁽¹⁾(p,q)/SU(6)"),
    ("A-odd.3", 3): ("su₁⁽¹⁾(p,q)", "su(p)⊕su(q)", "SU₁⁽¹⁾(p,q)/SU(p)⊕SU(q)"),
    ("A-odd.4", 3): ("slₛ⁽¹⁾(3,ℍ)", "sp⁽¹⁾(6)", "SLₛ⁽¹⁾(3,ℍ)/SP⁽¹⁾(6)"),
    ("A-odd.5", 3): ("sl₋₁⁽¹⁾(6,ℝ)", "su⁽²⁾(6)", "SL₋₁⁽¹⁾(6,ℝ)/SU⁽²⁾(6)"),
    ("A-odd.8", 3): ("slᵣₛ⁽¹⁾(3,ℍ)", "so⁽²⁾(6)", "SLᵣₛ⁽¹⁾(3,ℍ)/SO⁽²⁾(6)"),
    ("A-even.4", 3): ("sl₋₁⁽¹⁾(7,ℝ)", "su⁽²⁾(7)", "SL₋₁⁽¹⁾(7,ℝ)/SU⁽²⁾(7)"),
    ("A-even.5", 3): ("sl₁⁽¹⁾(7,ℝ)", "so⁽¹⁾(6)", "SL₁⁽¹⁾(7,ℝ)/SO⁽¹⁾(6)"),
    ("B.2", 3): ("so₋₁⁽¹⁾(2,5)", "so(7)", "SO₋₁⁽¹⁾(2,5)/SO(7)"),
    ("B.3", 3): ("so⁽¹⁾(4,3)", "so(4)⊕so(3)", "SO⁽¹⁾(4,3)/SO(4)⊕SO(3)"),
    ("B.4", 3): ("so⁽¹⁾(6,1)", "su⁽¹⁾(4)⊕so(1)", "SO⁽¹⁾(6,1)/SU⁽¹⁾(4)⊕SO(1)"),
    ("B.8", 3): ("so⁽¹⁾(1,6)", "so⁽²⁾(6)", "SO⁽¹⁾(1,6)/SO⁽²⁾(6)"),
    ("B.9", 3): ("so⁽¹⁾(5,2)", "su(3)⊕so(3)", "SO⁽¹⁾(3,4)/SU(3)⊕SO(3)"),
    ("B.11", 3): ("so⁽¹⁾(3,4)", "so⁽²⁾(6)", "SO⁽¹⁾(3,4)/SO⁽²⁾(6)"),
    ("C-odd.3", 3): ("sp₋₁⁽¹⁾(5,ℝ)", "sp(5)", "SP₋₁⁽¹⁾(5,ℝ)/SP(5)"),
    ("C-odd.5", 3): ("sp⁽¹⁾(5,ℝ)", "su⁽²⁾(5)", "SP⁽¹⁾(5,ℝ)/SU⁽²⁾(5)"),
    ("C-even.5", 3): ("sp⁽¹⁾(3,ℍ)", "sp⁽¹⁾(3)", "SP⁽¹⁾(3,ℍ)/SP⁽¹⁾(3)"),
    ("C-even.6", 3): ("sp⁽¹⁾(6,ℝ)", "su⁽²⁾(6)", "SP⁽¹⁾(6,ℝ)/SU⁽²⁾(6)"),
    ("D-even.3", 6): ("so*⁽¹⁾(12)", "su(6)", "SO*⁽¹⁾(6)/SU(6)"),
    ("D-even.4", 6): ("so₋₁⁽¹⁾(2,10)", "so(10)", "SO₋₁⁽¹⁾(2,10)/SO(10)"),
    ("D-even.5", 6): ("so_{σv}⁽¹⁾(1,11)", "sp⁽²⁾(10)", "SO_{σv}⁽¹⁾(1,11)/SP⁽²⁾(10)"),
    ("D-even.7", 6): ("soᵧ⁽¹⁾(1,11)", "so⁽¹⁾(11)", "SOᵧ⁽¹⁾(1,11)/SO⁽¹⁾(11)"),
    ("D-odd.4", 5): ("so₋₁⁽¹⁾(2,8)", "so(8)", "SO₋₁⁽¹⁾(2,8)/SO(8)"),
    ("D-odd.7", 5): ("soᵧ⁽¹⁾(1,9)", "so⁽¹⁾(9)", "SOᵧ⁽¹⁾(1,9)/SO⁽¹⁾(9)"),
    ("A1.2", 1): ("su₁⁽¹⁾(1,1)", "S₁⁽¹⁾(U₁×U₁)", "SU₁⁽¹⁾(1,1)/S₁⁽¹⁾(U₁×U₁)"),
    ("A2.5", 1): ("sl₋₁⁽¹⁾(3,ℝ)", "so₋₁⁽¹⁾(3)", "SL₋₁⁽¹⁾(3,ℝ)/SO₋₁⁽¹⁾(3)"),
}


def _row(row_id):
    key, idx = row_id.rsplit(".", 1)
    return get_table(key).rows[int(idx) - 1]


@pytest.mark.parametrize("row_id,nv", sorted(CELLS))
def test_cells_match_transcription(row_id, nv):
    rec = next(r for r in table_json(row_id.rsplit(".", 1)[0], nv)["rows"] if r["row"] == row_id)
    assert (rec["real_form"], rec["fixed_algebra"], rec["noncompact_space"]) == CELLS[(row_id, nv)]


@pytest.mark.parametrize("key", sorted(DEFAULT_N))
def test_table_regeneration(key):
    nv = DEFAULT_N[key]
    doc = table_json(key, nv)
    assert len(doc["rows"]) == ROW_COUNTS[key]
    for rec, row in zip(doc["rows"], get_table(key).rows):
        d = row.render(nv)
        for col in ("real_form", "fixed_algebra", "compact_space", "noncompact_space"):
            assert rec[col] == d[col]
    md = emit_table(key, nv, "md")
    assert md.count("\n| ") == ROW_COUNTS[key] + 1


@pytest.mark.parametrize("key", sorted(TABLES))
def test_csv_roundtrip(key):
    nv = TABLES[key].fixed_n or DEFAULT_N.get(key)
    doc = table_json(key, nv)
    back = csv_to_json(emit_table(key, nv, "csv"))
    assert back == doc
    assert list(back["rows"][0]) == list(COLUMNS)


@pytest.mark.parametrize("key", sorted(TABLES))
def test_fixture_classifies_to_own_row(key):
    table = TABLES[key]
    step = 2 if table.n_parity is not None else 1
    for nv in ([table.fixed_n] if table.fixed_n else [DEFAULT_N[key], DEFAULT_N[key] + step]):
        for row in table.rows:
            for pv in (list(row.p_range(nv)) if row.family else [None]):
                cls = classify(row_fixture(row, nv, pv))
                assert cls.classified
                assert row.row_id in {m.row_id for m in cls.rows()}


def test_disputed_annotation():
    rows = {r["row"]: r for r in table_json("D-odd", 5)["rows"]}
    assert "order 4" in rows["D-odd.9"]["disputed"]
    assert "so⁽¹⁾(5)" in rows["D-odd.9"]["disputed"]
    flagged = [r for k in DEFAULT_N for r in table_json(k, DEFAULT_N[k])["rows"] if r["disputed"]]
    assert [r["row"] for r in flagged] == ["D-odd.9"]


def test_label_json_roundtrip():
    for table in TABLES.values():
        nv = table.fixed_n or table.default_n
        for row in table.rows:
            back = RealFormLabel.from_json(row.label.to_json())
            pv = row.p_range(nv)[0] if row.family else None
            assert back.render(row.values(nv, pv)) == row.label.render(row.values(nv, pv))


def test_spec_examples():
    cls = classify(vogan("A", 5, [0]))
    d = cls.primary.render()
    assert d["real_form"] == "su₋₁⁽¹⁾(p,q)" and d["fixed_algebra"] == "su(6)"
    assert d["compact_space"] == "SU⁽¹⁾(p+q)/SU(6)"
    assert classify(vogan("A", 5)).primary.render()["real_form"] == "su⁽¹⁾(6)"
    cls = classify(vogan("C", 5, [2]))
    assert cls.primary.row_id == "C-odd.2" and cls.primary.p == 2
    assert cls.primary.render()["fixed_algebra"] == "sp⁽¹⁾(2)⊕sp(3)"


@pytest.mark.parametrize("series,rank", [("A", 2), ("A", 3), ("A", 4), ("B", 3), ("C", 3), ("D", 4)])
def test_classify_constant_on_classes(series, rank):
    from kmss.cartan import build_affine_diagram
    from kmss.vogan import all_vogan_diagrams

    for vd in all_vogan_diagrams(build_affine_diagram(series, rank)):
        want = classify(vd).to_json()["label"]
        for m in equivalence_class(vd):
            assert classify(m).to_json()["label"] == want


@pytest.mark.parametrize("series,rank", [("A", 1), ("A", 2), ("A", 5), ("A", 6), ("B", 3), ("C", 5),
                                         ("C", 6), ("D", 5), ("D", 6)])
def test_every_class_has_a_row(series, rank):
    assert all(f["row"] for f in list_forms(series, rank))


def test_unclassified_carries_reduced_form(monkeypatch):
    import kmss.atlas as atlas

    monkeypatch.setattr(atlas, "tables_for", lambda series, rank: [])
    cls = atlas.classify(vogan("C", 3, [0, 1, 2]))
    out = cls.to_json()
    assert not cls.classified and out["label"] == "unclassified"
    assert len(out["reduced"]["painted"]) <= 2
