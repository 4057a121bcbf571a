"""Pairwise-compatibility tables: golden content, certification, renders."""

import csv
import io
import json

import pytest

import blowup_collections.tables as tables_mod
from blowup_collections.geometry import DivisorClass, variety_model
from blowup_collections.vanishing import VanishingVerdict, coh_zero
from blowup_collections.families import FAMILIES, family_by_label
from blowup_collections.tables import (
    CellCondition,
    TableVerificationError,
    family_members,
    fit_cell_from_scan,
    pair_table,
)

# Independent transcription of every non-"never" cell, keyed by
# (row family, column family).  Anything absent must be "never".
GOLDEN = {
    "point": {
        ("B0", "B0"): ("diff_in", (1, 2)),
        ("B0", "B1"): ("row_in", (0,)),
        ("B0", "B3"): ("always", ()),
        ("B0", "B4"): ("row_in", (1,)),
        ("B0", "B5"): ("row_in", (0, 1)),
        ("B0", "B6"): ("always", ()),
        ("B1", "B0"): ("always", ()),
        ("B1", "B4"): ("always", ()),
        ("B1", "B6"): ("always", ()),
        ("B2", "B0"): ("col_in", (3, 4)),
        ("B2", "B1"): ("always", ()),
        ("B2", "B4"): ("always", ()),
        ("B3", "B0"): ("col_in", (3,)),
        ("B3", "B5"): ("always", ()),
        ("B3", "B6"): ("always", ()),
        ("B4", "B0"): ("always", ()),
        ("B6", "B0"): ("col_in", (4,)),
        ("B6", "B5"): ("always", ()),
    },
    "line": {
        ("B0", "B0"): ("diff_in", (1,)),
        ("B0", "B1"): ("always", ()),
        ("B0", "B3"): ("always", ()),
        ("B1", "B1"): ("diff_in", (1,)),
        ("B1", "B3"): ("always", ()),
        ("B2", "B0"): ("always", ()),
        ("B2", "B1"): ("always", ()),
    },
    "cubic": {
        ("B0", "B0"): ("diff_in", (1, 2)),
        ("B0", "B2"): ("always", ()),
        ("B0", "B3"): ("row_in", (-3, 0)),
        ("B0", "B4"): ("row_in", (0, 1)),
        ("B0", "B5"): ("row_in", (-2, 1)),
        ("B0", "B7"): ("always", ()),
        ("B0", "B8"): ("row_in", (-3, -2)),
        ("B1", "B0"): ("col_in", (0, 1)),
        ("B1", "B3"): ("always", ()),
        ("B1", "B5"): ("always", ()),
        ("B2", "B0"): ("col_in", (1, 4)),
        ("B2", "B4"): ("always", ()),
        ("B2", "B8"): ("always", ()),
        ("B3", "B0"): ("always", ()),
        ("B3", "B2"): ("always", ()),
        ("B3", "B5"): ("always", ()),
        ("B5", "B0"): ("always", ()),
        ("B6", "B0"): ("col_in", (3, 4)),
        ("B6", "B3"): ("always", ()),
        ("B6", "B5"): ("always", ()),
        ("B7", "B0"): ("col_in", (0, 3)),
        ("B7", "B2"): ("always", ()),
        ("B7", "B4"): ("always", ()),
        ("B7", "B8"): ("always", ()),
        ("B9", "B9"): ("unknown", ()),
        ("B9", "B10"): ("unknown", ()),
        ("B10", "B9"): ("unknown", ()),
        ("B10", "B10"): ("unknown", ()),
    },
}


@pytest.fixture(scope="module")
def tables():
    return {tag: pair_table(variety_model(tag), 15) for tag in GOLDEN}


@pytest.mark.parametrize("tag", sorted(GOLDEN))
def test_certified_cells_match_golden_fixture(tag, tables):
    table = tables[tag]
    golden = GOLDEN[tag]
    for row_label in table.labels:
        for col_label in table.labels:
            cond = table.cell(row_label, col_label)
            kind, values = golden.get((row_label, col_label), ("never", ()))
            assert (cond.kind, cond.values) == (kind, values), (row_label, col_label)


def test_total_cell_census(tables):
    assert sum(len(t.labels) ** 2 for t in tables.values()) == 186
    nonnever = {
        tag: sum(
            1
            for row in tables[tag].cells
            for cond in row
            if cond.kind != "never"
        )
        for tag in tables
    }
    assert nonnever == {"point": 18, "line": 7, "cubic": 28}


def test_certification_passes_wider_window():
    for tag in GOLDEN:
        pair_table(variety_model(tag), 30)


def test_window_validation():
    with pytest.raises(ValueError, match="below 10"):
        pair_table(variety_model("point"), 9)


def test_chain_law_against_oracle():
    # Direct oracle check of the two parameterized diagonal cells,
    # independent of the table machinery.
    point = variety_model("point")
    b0_point = family_by_label("point", "B0")
    for p in range(-6, 7):
        for q in range(-6, 7):
            verdict = coh_zero(point, b0_point.member(p) - b0_point.member(q))
            assert (verdict is VanishingVerdict.ZERO) == (q - p in (1, 2))
    line = variety_model("line")
    b0_line = family_by_label("line", "B0")
    for p in range(-6, 7):
        for q in range(-6, 7):
            verdict = coh_zero(line, b0_line.member(p) - b0_line.member(q))
            assert (verdict is VanishingVerdict.ZERO) == (q - p == 1)


def test_fit_cell_round_trip(tables):
    # Rederive each decided cell from raw verdicts and compare.
    window = 12
    for tag, table in tables.items():
        model = variety_model(tag)
        members = {
            fam.label: family_members(fam, tag, window) for fam in FAMILIES[tag]
        }
        parameterized = {
            fam.label for fam in FAMILIES[tag] if fam.kind == "parameterized"
        }
        for row_label in table.labels:
            for col_label in table.labels:
                cond = table.cell(row_label, col_label)
                if cond.kind == "unknown":
                    continue
                scan = {
                    (p, q): coh_zero(model, d_row - d_col)
                    for p, d_row in members[row_label]
                    for q, d_col in members[col_label]
                }
                fitted = fit_cell_from_scan(
                    scan,
                    row_label in parameterized,
                    col_label in parameterized,
                    window,
                )
                assert fitted == cond, (tag, row_label, col_label)


def test_fit_cell_rejections():
    z, n = VanishingVerdict.ZERO, VanishingVerdict.NONZERO
    with pytest.raises(ValueError, match="not decided"):
        fit_cell_from_scan({(0, 0): VanishingVerdict.UNKNOWN}, False, False, 12)
    with pytest.raises(ValueError, match="never/always"):
        fit_cell_from_scan({(0, 0): z, (0, 1): n}, False, False, 12)
    boundary = {(0, q): (z if q == 11 else n) for q in range(-12, 13)}
    with pytest.raises(ValueError, match="boundary"):
        fit_cell_from_scan(boundary, False, True, 12)
    ragged = {
        (p, q): (z if (p, q) in {(0, 0), (1, 2)} else n)
        for p in range(-5, 6)
        for q in range(-5, 6)
    }
    with pytest.raises(ValueError, match="difference pattern"):
        fit_cell_from_scan(ragged, True, True, 12)


def test_undecided_family_members():
    b9 = family_by_label("cubic", "B9")
    b10 = family_by_label("cubic", "B10")
    assert family_members(b9, "cubic", 15) == []
    assert family_members(b9, "cubic", 30) == [(0, DivisorClass(23, -15))]
    assert family_members(b10, "cubic", 30) == [(0, DivisorClass(-19, 14))]


def test_markdown_render(tables):
    md = tables["line"].to_markdown()
    lines = md.splitlines()
    assert lines[0] == "| | B0' | B1' | B2 | B3 |"
    assert "| B0 | a'=a+1 | √ |  | √ |" in lines
    assert "| B2 | √ | √ |  |  |" in lines
    assert "a'=3, 4" in tables["point"].to_markdown()
    assert "?" in tables["cubic"].to_markdown()


def test_csv_render(tables):
    rows = list(csv.reader(io.StringIO(tables["line"].to_csv())))
    assert rows[0] == ["", "B0'", "B1'", "B2", "B3"]
    by_label = {row[0]: row[1:] for row in rows[1:]}
    assert by_label["B2"] == ["√", "√", "", ""]
    assert by_label["B0"] == ["a'=a+1", "√", "", "√"]


def test_json_round_trip(tables):
    payload = json.loads(tables["cubic"].to_json())
    assert payload["labels"] == [f"B{i}" for i in range(11)]
    cell = payload["cells"][0][3]
    assert cell == {"kind": "row_in", "values": [-3, 0]}
    assert payload["cells"][9][9] == {"kind": "unknown", "values": []}


def test_corrupted_cells_are_detected(monkeypatch):
    bad_line = dict(tables_mod._GOLDEN_CELLS["line"])
    bad_line[("B2", "B3")] = CellCondition("always")
    monkeypatch.setitem(tables_mod._GOLDEN_CELLS, "line", bad_line)
    with pytest.raises(TableVerificationError, match=r"cell \(B2, B3\)"):
        pair_table(variety_model("line"), 12)

    bad_point = dict(tables_mod._GOLDEN_CELLS["point"])
    bad_point[("B3", "B0")] = CellCondition("col_in", (2,))
    monkeypatch.setitem(tables_mod._GOLDEN_CELLS, "point", bad_point)
    with pytest.raises(TableVerificationError, match=r"cell \(B3, B0\)"):
        pair_table(variety_model("point"), 12)


def test_cell_condition_validation():
    with pytest.raises(ValueError, match="carries no values"):
        CellCondition("always", (1,))
    with pytest.raises(ValueError, match="needs admissible values"):
        CellCondition("row_in")
    with pytest.raises(ValueError, match="unknown cell kind"):
        CellCondition("sometimes")
    with pytest.raises(ValueError, match="no membership predicate"):
        CellCondition("unknown").holds(0, 0)
