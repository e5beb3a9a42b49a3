import pytest

from cohomone.catalog import lookup
from cohomone.diagram import validate
from cohomone.errors import Unrecognized
from cohomone.hitchin import (
    BUNDLES,
    identify,
    identify_family,
    konishi_slopes,
    lift_slopes,
    report,
    spin4_to_so3so3,
    subcover,
)


def test_spin4_map():
    assert spin4_to_so3so3(1, 0) == (1, 1)
    assert spin4_to_so3so3(2, 1) == (3, 1)
    assert spin4_to_so3so3(0, 1) == (1, -1)


def test_anchor_slopes():
    assert set(konishi_slopes(1).antiselfdual) == {(1, -1), (1, 3)}
    assert set(konishi_slopes(2).antiselfdual) == {(1, -1), (2, 4)}


def test_lift():
    assert lift_slopes((2, 4)) == (1, 2)
    assert lift_slopes((1, 3)) == (1, 3)
    with pytest.raises(Unrecognized):
        lift_slopes((4, 8))


@pytest.mark.parametrize("k", range(1, 21))
def test_antiselfdual_family(k):
    ident = identify(k, "antiselfdual")
    expected = f"P_{(k + 1) // 2}" if k % 2 else f"Q_{k // 2}"
    assert ident.label == expected
    assert f"{expected} is the two-fold universal cover of H_{k}" in ident.notes


@pytest.mark.parametrize("k,label", [(1, "P_1"), (3, "B7"), (4, "R"), (2, None), (5, None), (6, None)])
def test_selfdual(k, label):
    ident = identify(k, "selfdual")
    assert ident.label == label
    if label is None:
        assert ident.reason


def test_identify_family():
    assert identify_family((1, 1), (3, 5)).label == "P_2"
    assert identify_family((1, 1), (1, 2)).label == "Q_1"
    with pytest.raises(Unrecognized):
        identify_family((1, 1), (1, 1))


@pytest.mark.parametrize("name,k", [("P_k", 1), ("P_k", 4), ("Q_k", 2), ("Q_k", 5)])
def test_subcover(name, k):
    d = subcover(lookup(name, k))
    assert d.H.order == 16
    assert validate(d).pi1_order == 2


def test_report_shape():
    data = report(2)
    assert data["k"] == 2
    assert set(data["identifications"]) == set(BUNDLES)
    assert data["identifications"]["antiselfdual"]["family"] == "Q_1"
    assert data["identifications"]["selfdual"]["family"] is None


def test_bundle_name():
    with pytest.raises(ValueError):
        konishi_slopes(1).bundle("twisted")
    with pytest.raises(ValueError):
        konishi_slopes(0)
