import json

import pytest

from cohomone.catalog import entries, family_diagrams, load_table, lookup
from cohomone.diagram import validate
from cohomone.errors import UnknownEntry


def test_schema():
    table = load_table()
    assert table["schema"] == "cohomone.table_a" and table["version"] == 1
    names = {e["name"] for e in entries()}
    assert names == {"S7", "B7", "W1", "W2", "E_p", "P_k", "Q_k", "R"}
    assert {e["name"] for e in entries(include_out_of_scope=True)} > names


@pytest.mark.parametrize("name,param,label", [("S7", None, "S7"), ("P_k", 2, "P_2"), ("Q_k", 3, "Q_3"), ("E_p", 4, "E_4")])
def test_lookup_labels(name, param, label):
    entry = lookup(name, param)
    assert entry.label == label
    json.dumps(entry.to_json())


def test_notes():
    assert "S^7" in lookup("P_k", 1).note
    assert lookup("Q_k", 1).note and lookup("E_p", 1).note


def test_s7_is_p1():
    assert lookup("S7").diagram == lookup("P_k", 1).diagram


@pytest.mark.parametrize(
    "name,param",
    [("X", None), ("P_k", None), ("P_k", 0), ("R", 1), ("B13", None)],
)
def test_unknown(name, param):
    with pytest.raises(UnknownEntry):
        lookup(name, param)


def test_family_diagrams_bound():
    assert len(family_diagrams(9)) == 25
    assert len(family_diagrams(13)) == 35


@pytest.mark.parametrize("entry", family_diagrams(9), ids=lambda e: e.label)
def test_rows_validate(entry):
    rep = validate(entry.diagram)
    assert sorted((rep.l_minus, rep.l_plus)) == sorted(entry.expected["l"])
    assert rep.pi1_order == 1
    assert entry.diagram.H.structure() == entry.expected["H"]
    assert rep.hbar == entry.expected["Hbar"]
