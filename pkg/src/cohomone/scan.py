"""Exhaustive enumeration of slope diagrams, filtered by the obstruction pipeline.

Three kinds of principal isotropy group are scanned:

``Q``     both circles coprime with all slopes odd, ``H`` the twisted
          diagonal quaternion group fixed by the slopes;
``Z4Z2``  ``K-`` slopes odd, ``K+`` any coprime pair, ``H = Z4+Z2``;
``Z2``    ``K- = DS3 . H`` and ``K+ = C^i_(p,q)`` with ``H`` the circle point at
          a half turn.

Candidates related by a factor swap (and, for ``Q``, by exchanging ``K-``
and ``K+``) are tested once.  Survivors are brought to canonical form and
labelled by the catalog entry they are equivalent to.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .catalog import family_diagrams
from .diagram import Diagram, IsotropySubgroup, slope_diagram
from .equivalence import canonical_form
from .errors import CohomOneError
from .groups import SlopeCircle, closure
from .obstruct import ObstructionReport, run_pipeline

__all__ = ["SCAN_TYPES", "Candidate", "Rejection", "Survivor", "ScanReport", "candidates", "scan"]

SCAN_TYPES = ("Q", "Z4Z2", "Z2")
_ALIASES = {"Qtype": "Q", "Z4Z2type": "Z4Z2", "Z2type": "Z2"}

Pair = tuple[int, int]
Candidate = tuple[Pair, ...]


def _h_type(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in SCAN_TYPES:
        raise ValueError(f"h_type must be one of {SCAN_TYPES}, got {name!r}")
    return name


def _coprime_pairs(bound: int, odd: bool = False) -> list[Pair]:
    step, start = (2, 1) if odd else (1, 1)
    rng = range(start, bound + 1, step)
    return [(p, q) for p in rng for q in rng if gcd(p, q) == 1]


def _flip(pair: Pair) -> Pair:
    return pair[1], pair[0]


def _representative(h_type: str, cand: Candidate) -> Candidate:
    """Smallest candidate in the orbit of the symmetries we divide out."""
    if h_type == "Z2":
        return (min(cand[0], _flip(cand[0])),)
    minus, plus = cand
    orbit = [(minus, plus), (_flip(minus), _flip(plus))]
    if h_type == "Q":
        orbit += [(plus, minus), (_flip(plus), _flip(minus))]
    return min(orbit)


def candidates(bound: int, h_type: str) -> list[Candidate]:
    """Slope data to test, one representative per symmetry orbit."""
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    h_type = _h_type(h_type)
    if h_type == "Q":
        odd = _coprime_pairs(bound, odd=True)
        raw = [(m, p) for m in odd for p in odd]
    elif h_type == "Z4Z2":
        raw = [(m, p) for m in _coprime_pairs(bound, odd=True) for p in _coprime_pairs(bound)]
    else:
        raw = [(pair,) for pair in _coprime_pairs(bound)]
    return [c for c in raw if _representative(h_type, c) == c]


def build(h_type: str, cand: Candidate) -> Diagram:
    h_type = _h_type(h_type)
    if h_type == "Z2":
        circle = SlopeCircle("i", *cand[0])
        H = closure([circle.point(Fraction(1, 2))])
        return Diagram(IsotropySubgroup.diag_s3(H), IsotropySubgroup.circle_dot(circle), H)
    return slope_diagram(*cand, h_type=h_type)


@dataclass(frozen=True)
class Rejection:
    slopes: Candidate
    check: str
    reason: str

    def to_json(self) -> dict:
        return {"slopes": [list(p) for p in self.slopes], "check": self.check, "reason": self.reason}


@dataclass
class Survivor:
    slopes: Candidate
    diagram: Diagram
    canonical: Diagram
    report: ObstructionReport
    label: str = "unmatched"

    def to_json(self) -> dict:
        return {
            "slopes": [list(p) for p in self.slopes],
            "label": self.label,
            "diagram": self.diagram.text(),
            "canonical": self.canonical.text(),
            "report": self.report.to_json(),
        }


@dataclass
class ScanReport:
    bound: int
    h_type: str
    candidates_tested: int
    survivors: list[Survivor] = field(default_factory=list)
    rejections: list[Rejection] = field(default_factory=list)
    duplicates: list[tuple[str, str]] = field(default_factory=list)
    timing: float = 0.0

    @property
    def labels(self) -> list[str]:
        return [s.label for s in self.survivors]

    @property
    def unmatched(self) -> list[Survivor]:
        return [s for s in self.survivors if s.label == "unmatched"]

    def rejection_counts(self) -> dict[str, int]:
        return dict(sorted(Counter(r.check for r in self.rejections).items()))

    def to_json(self, include_rejections: bool = False) -> dict:
        out = {
            "bound": self.bound,
            "h_type": self.h_type,
            "candidates_tested": self.candidates_tested,
            "survivors": [s.to_json() for s in self.survivors],
            "rejection_counts": self.rejection_counts(),
            "unmatched": len(self.unmatched),
            "duplicates": [list(d) for d in self.duplicates],
            "timing_seconds": round(self.timing, 3),
        }
        if include_rejections:
            out["rejections"] = [r.to_json() for r in self.rejections]
        return out

    def summary(self) -> str:
        lines = [
            f"h_type {self.h_type}, bound {self.bound}: {self.candidates_tested} candidates, "
            f"{len(self.survivors)} survivors ({self.timing:.1f}s)",
        ]
        for s in self.survivors:
            pairs = ", ".join(f"({p},{q})" for p, q in s.slopes)
            lines.append(f"  {s.label:10s} {{{pairs}}}")
        lines.append("  rejected by: " + ", ".join(f"{k}={v}" for k, v in self.rejection_counts().items()))
        if self.duplicates:
            lines.append(f"  duplicate survivors: {self.duplicates}")
        return "\n".join(lines)


def _test(job: tuple[str, Candidate]):
    h_type, cand = job
    try:
        d = build(h_type, cand)
    except CohomOneError as exc:
        return Rejection(cand, "validate", f"{type(exc).__name__}: {exc}")
    rep = run_pipeline(d, fail_fast=True)
    first = rep.first_fail
    if first is not None:
        return Rejection(cand, first, rep.verdicts[first].reason)
    # rerun without stopping so the survivor carries every verdict
    return cand, d, canonical_form(d), run_pipeline(d)


_INDEX: dict[int, dict[Diagram, str]] = {}


def _catalog_index(bound: int, workers: int) -> dict[Diagram, str]:
    if bound not in _INDEX:
        entries = family_diagrams(bound)
        forms = _map(canonical_form, [e.diagram for e in entries], workers)
        _INDEX[bound] = {f: e.label for f, e in zip(forms, entries)}
    return _INDEX[bound]


def _map(fn, jobs, workers: int):
    if workers <= 1:
        return list(map(fn, jobs))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (8 * workers))))


def scan(bound: int, h_type: str, jobs: int = 1) -> ScanReport:
    """Run the obstruction pipeline on every candidate of one kind up to ``bound``."""
    h_type = _h_type(h_type)
    start = time.perf_counter()
    cands = candidates(bound, h_type)
    results = _map(_test, [(h_type, c) for c in cands], jobs)
    report = ScanReport(bound, h_type, len(cands))
    found = []
    for res in results:
        if isinstance(res, Rejection):
            report.rejections.append(res)
        else:
            found.append(res)
    index = _catalog_index(bound, jobs)
    seen: dict[Diagram, str] = {}
    for cand, d, canon, rep in found:
        surv = Survivor(cand, d, canon, rep, index.get(canon, "unmatched"))
        if canon in seen:
            report.duplicates.append((seen[canon], surv.label))
        seen.setdefault(canon, surv.label)
        report.survivors.append(surv)
    report.survivors.sort(key=lambda s: _label_key(s.label) + (s.slopes,))
    report.timing = time.perf_counter() - start
    return report


def _label_key(label: str) -> tuple:
    name, _, num = label.partition("_")
    return (name, int(num) if num.isdigit() else 0)
