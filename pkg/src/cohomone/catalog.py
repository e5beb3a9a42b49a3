"""The table of known examples and candidates, loaded from packaged JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .diagram import TRIVIAL, Diagram, IsotropySubgroup
from .errors import UnknownEntry
from .groups import FiniteSubgroup, SlopeCircle, closure
from .grammar import parse_element

__all__ = ["CatalogEntry", "lookup", "entries", "family_diagrams", "load_table"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    param: int | None
    diagram: Diagram
    expected: dict
    note: str = ""

    @property
    def label(self) -> str:
        if self.param is None:
            return self.name
        return f"{self.name.split('_')[0]}_{self.param}"

    def expected_weyl(self) -> str:
        w = self.expected["weyl"]
        if isinstance(w, dict):
            return w["even" if self.param % 2 == 0 else "odd"]
        return w

    def to_json(self) -> dict:
        exp = dict(self.expected)
        exp["weyl"] = self.expected_weyl()
        return {
            "name": self.name,
            "label": self.label,
            "param": self.param,
            "diagram": self.diagram.text(),
            "expected": exp,
            "note": self.note,
        }


@lru_cache(maxsize=1)
def load_table() -> dict:
    text = resources.files("cohomone").joinpath("data/table_a.json").read_text()
    return json.loads(text)


def entries(include_out_of_scope: bool = False) -> list[dict]:
    return [e for e in load_table()["entries"] if include_out_of_scope or not e.get("out_of_scope")]


def _find(name: str) -> dict:
    key = name.strip()
    for e in load_table()["entries"]:
        if key == e["name"] or key in e.get("aliases", ()):
            return e
    raise UnknownEntry(f"no catalog entry named {name!r}")


def _affine(coeffs, n):
    a, b = coeffs
    return a * (n or 0) + b


def _side(spec, n, H):
    F = H if spec["F"] == "H" else TRIVIAL
    if spec["type"] == "ds3":
        return IsotropySubgroup.diag_s3(F)
    circle = SlopeCircle(spec["axis"], _affine(spec["p"], n), _affine(spec["q"], n))
    return IsotropySubgroup.circle_dot(circle, F)


def _build(raw: dict, n: int | None) -> Diagram:
    hspec = raw["H"]
    if "generators" in hspec:
        gens = [parse_element(f"({a},{b})") for a, b in hspec["generators"]]
    else:
        # H generated by a point of the K+ circle
        kp = raw["Kplus"]
        circle = SlopeCircle(kp["axis"], _affine(kp["p"], n), _affine(kp["q"], n))
        gens = [circle.point(Fraction(hspec["circle_point"]))]
    H: FiniteSubgroup = closure(gens)
    return Diagram(_side(raw["Kminus"], n, H), _side(raw["Kplus"], n, H), H)


@lru_cache(maxsize=None)
def lookup(name: str, param: int | None = None) -> CatalogEntry:
    """Instantiate a catalog entry, e.g. ``lookup("P_k", 2)`` or ``lookup("R")``."""
    raw = _find(name)
    if raw.get("out_of_scope"):
        raise UnknownEntry(f"{raw['name']} lives in {raw['ambient']}, outside S3xS3")
    if raw["param"] is None:
        if param is not None:
            raise UnknownEntry(f"{raw['name']} takes no parameter")
        return CatalogEntry(raw["name"], None, _build(raw, None), raw["expected"], raw.get("note", ""))
    if param is None:
        raise UnknownEntry(f"{raw['name']} needs a value for {raw['param']}")
    if param < raw.get("param_min", 1):
        raise UnknownEntry(f"{raw['name']} needs {raw['param']} >= {raw.get('param_min', 1)}")
    note = raw.get("notes", {}).get(str(param), "")
    return CatalogEntry(raw["name"], param, _build(raw, param), raw["expected"], note)


def family_diagrams(bound: int) -> list[CatalogEntry]:
    """All catalog diagrams whose slopes stay within ``bound``."""
    out = []
    for raw in entries():
        if raw["param"] is None:
            out.append(lookup(raw["name"]))
            continue
        n = raw.get("param_min", 1)
        while True:
            entry = lookup(raw["name"], n)
            slopes = [abs(s) for pair in entry.diagram.slopes() if pair for s in pair]
            if max(slopes) > bound:
                break
            out.append(entry)
            n += 1
    return out
