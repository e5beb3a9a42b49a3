"""Konishi bundles over Hitchin's self-dual orbifolds, matched to the catalog.

The SO(3)xSO(3)-slopes of the two bundles are computed from the frame
slopes ``(1,1,2)`` and ``(k,k,-2)`` with the double cover
``Spin(4) -> SO(3)xSO(3)``, which sends a circle with SO(4)-slopes
``(p,q)`` to ``(p+q, p-q)``.  Lifting back to ``S^3 x S^3`` halves even
pairs; the lifted slopes pin down a diagram that we identify with a
catalog entry up to equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .catalog import CatalogEntry, lookup
from .diagram import Diagram, IsotropySubgroup, slope_diagram
from .equivalence import canonical_form
from .errors import CohomOneError, Unrecognized
from .groups import closure
from .topology import invariants
from .qfield import GroupElement, J, Q_ONE

__all__ = [
    "BUNDLES",
    "KonishiSlopes",
    "Identification",
    "spin4_to_so3so3",
    "konishi_slopes",
    "lift_slopes",
    "identify_family",
    "identify",
    "subcover",
]

BUNDLES = ("selfdual", "antiselfdual")

Pair = tuple[int, int]


def spin4_to_so3so3(p: int, q: int) -> Pair:
    return p + q, p - q


@dataclass(frozen=True)
class KonishiSlopes:
    k: int
    left: tuple[int, int, int]
    right: tuple[int, int, int]

    @property
    def selfdual(self) -> tuple[Pair, Pair]:
        return (self.left[0], self.left[1]), (self.right[0], self.right[1])

    @property
    def antiselfdual(self) -> tuple[Pair, Pair]:
        return (self.left[0], self.left[2]), (self.right[0], self.right[2])

    def bundle(self, name: str) -> tuple[Pair, Pair]:
        if name not in BUNDLES:
            raise ValueError(f"bundle must be one of {BUNDLES}, got {name!r}")
        return getattr(self, name)


def _frame_to_so3(frame: tuple[int, int, int]) -> tuple[int, int, int]:
    # the first SO(3) slope is untouched, the SO(4) block (b, c) splits
    a, b, c = frame
    return (a, *spin4_to_so3so3(b, c))


def konishi_slopes(k: int) -> KonishiSlopes:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return KonishiSlopes(k, _frame_to_so3((1, 1, 2)), _frame_to_so3((k, k, -2)))


def lift_slopes(pair: Pair) -> Pair:
    """Slopes in S^3 x S^3 of a circle with the given SO(3)xSO(3) slopes."""
    a, b = pair
    if a % 2 == 0 and b % 2 == 0:
        a, b = a // 2, b // 2
    if gcd(a, b) != 1:
        raise Unrecognized(f"lifted slopes ({a},{b}) are not coprime")
    return a, b


_canonical = lru_cache(maxsize=None)(canonical_form)


def _det(d: Diagram) -> int | None:
    try:
        return invariants(d).det_abs
    except CohomOneError:
        return None


def _candidates(d: Diagram) -> list[CatalogEntry]:
    bound = max(abs(s) for pair in d.slopes() for s in pair)
    if d.H.structure() == "Q":
        out = [lookup("P_k", k) for k in range(1, (bound + 1) // 2 + 1)]
        out.append(lookup("B7"))
    else:
        out = [lookup("Q_k", k) for k in range(1, bound + 1)]
        out.append(lookup("R"))
    # |det| of the Mayer-Vietoris matrix is an invariant, so it prunes cheaply
    det = _det(d)
    return [e for e in out if det is None or _det(e.diagram) in (None, det)]


def identify_family(minus: Pair, plus: Pair) -> CatalogEntry:
    """Catalog entry equivalent to the diagram with these lifted slopes."""
    try:
        d = slope_diagram(minus, plus)
        target = _canonical(d)
    except CohomOneError as exc:
        raise Unrecognized(f"slopes {minus}, {plus} give no usable diagram: {exc}") from exc
    for entry in _candidates(d):
        if _canonical(entry.diagram) == target:
            return entry
    raise Unrecognized(f"slopes {minus}, {plus} match no catalog entry")


@dataclass(frozen=True)
class Identification:
    k: int
    bundle: str
    so3_slopes: tuple[Pair, Pair]
    lifted: tuple[Pair, Pair] | None = None
    entry: CatalogEntry | None = None
    reason: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def label(self) -> str | None:
        return self.entry.label if self.entry else None

    def to_json(self) -> dict:
        return {
            "bundle": self.bundle,
            "so3_slopes": [list(p) for p in self.so3_slopes],
            "lifted_slopes": [list(p) for p in self.lifted] if self.lifted else None,
            "family": self.label,
            "notes": self.notes,
            "reason": self.reason or None,
        }


def identify(k: int, bundle: str) -> Identification:
    slopes = konishi_slopes(k).bundle(bundle)
    try:
        lifted = tuple(lift_slopes(p) for p in slopes)
    except Unrecognized as exc:
        return Identification(k, bundle, slopes, reason=str(exc))
    try:
        entry = identify_family(*lifted)
    except Unrecognized as exc:
        return Identification(k, bundle, slopes, lifted, reason=str(exc))
    notes = [entry.note] if entry.note else []
    if bundle == "antiselfdual":
        notes.append(f"{entry.label} is the two-fold universal cover of H_{k}")
    return Identification(k, bundle, slopes, lifted, entry, notes=notes)


def subcover(entry: CatalogEntry) -> Diagram:
    """Diagram of the two-fold quotient of a ``P`` or ``Q`` family member.

    ``H`` is enlarged by ``(1,-1)`` for the quaternion family and by
    ``(j,j)`` for the ``Z4+Z2`` family; the result has ``pi1 = Z_2``.
    """
    d = entry.diagram
    structure = d.H.structure()
    if structure == "Q":
        extra = GroupElement(Q_ONE, -Q_ONE)
    elif structure == "Z4+Z2":
        extra = GroupElement(J, J)
    else:
        raise Unrecognized(f"{entry.label} has no subcover in this family")
    H = closure(list(d.H.generators) + [extra])
    return Diagram(
        IsotropySubgroup.circle_dot(d.Kminus.circle, H),
        IsotropySubgroup.circle_dot(d.Kplus.circle, H),
        H,
    )


def report(k: int) -> dict:
    ks = konishi_slopes(k)
    return {
        "k": k,
        "selfdual": [list(p) for p in ks.selfdual],
        "antiselfdual": [list(p) for p in ks.antiselfdual],
        "identifications": {b: identify(k, b).to_json() for b in BUNDLES},
    }
