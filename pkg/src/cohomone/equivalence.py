"""Diagram equivalence and a canonical representative.

Two diagrams describe the same manifold when one is reached from the other
by swapping ``K-`` and ``K+``, swapping the two ``S^3`` factors, conjugating
everything by an element of ``G``, or conjugating ``K+`` alone by an element
of the identity component of ``N(H)``.  Reparametrizing a circle changes
nothing, since diagrams are compared as subgroups.

Conjugation is searched over the rotations of the cube in each factor (the
binary octahedral group modulo sign).  This set is a group and it maps the
coordinate axes to themselves, so every diagram written in the text grammar
stays in the grammar after the moves that matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .diagram import Diagram, IsotropySubgroup, validate
from .errors import CohomOneError, NonCanonicalizable
from .groups import SlopeCircle, normalizer_identity_component, octahedral_rotations
from .qfield import I, J, K, GroupElement, Quaternion, exp_axis

__all__ = [
    "Move",
    "apply_moves",
    "canonical_form",
    "canonical_with_witness",
    "equivalent",
    "EquivalenceResult",
    "identity_component_samples",
]

EQUIVALENT = "equivalent"
INEQUIVALENT = "inequivalent"
UNIDENTIFIED = "not identified by witness set"


@dataclass(frozen=True)
class Move:
    """One equivalence move.

    ``kind`` is ``swap_k``, ``swap_factors``, ``conjugate`` (by ``element``)
    or ``conjugate_kplus`` (by ``element``, which must normalize ``H``).
    """

    kind: str
    element: GroupElement | None = None

    def apply(self, d: Diagram) -> Diagram:
        if self.kind == "swap_k":
            return d.swap_k()
        if self.kind == "swap_factors":
            return d.swap_factors()
        if self.kind == "conjugate":
            out = d.conjugate(self.element)
        elif self.kind == "conjugate_kplus":
            out = d.conjugate_kplus(self.element)
        else:
            raise ValueError(f"unknown move {self.kind!r}")
        if out is None:
            raise NonCanonicalizable(f"{self} leaves the supported diagram shapes")
        return out

    def inverse(self) -> Move:
        if self.element is None:
            return self
        return Move(self.kind, self.element.inverse())

    def __str__(self):
        if self.element is None:
            return self.kind
        return f"{self.kind}{self.element.literal()}"


def apply_moves(d: Diagram, moves) -> Diagram:
    for m in moves:
        d = m.apply(d)
    return d


def _inverse_moves(moves):
    return [m.inverse() for m in reversed(moves)]


# --- identity component of N(H) ----------------------------------------------


def identity_component_samples(H) -> tuple[list[Quaternion], list[Quaternion]]:
    """Finite samples of the identity component of ``N(H)``, factor by factor.

    Cube rotations for a full ``S^3`` factor, eighth turns for a circle.
    """
    out = []
    for comp in normalizer_identity_component(H):
        if comp is True:
            out.append(list(octahedral_rotations()))
        elif comp is None:
            out.append([Quaternion(1)])
        else:
            out.append([exp_axis(comp, Fraction(t, 8)) for t in range(8)])
    return out[0], out[1]


# --- canonical form ----------------------------------------------------------

_AXIS_RANK = {I: 0, J: 1, K: 2}


@lru_cache(maxsize=None)
def _rotate_axis(x: Quaternion, u: Quaternion) -> Quaternion:
    return x * u * x.conj()


def _circle_image(c: SlopeCircle, x: Quaternion, y: Quaternion):
    """Normalized (axis, p, q) of the conjugated circle, or None."""
    left = _rotate_axis(x, c.axis)
    right = _rotate_axis(y, c.axis)
    p, q = c.p, c.q
    if q == 0 or left == right:
        axis = left
    elif p == 0:
        axis = right
    elif left == -right:
        axis, q = left, -q
    else:
        return None
    for comp in axis.vector:
        if not comp.is_zero():
            if comp.sign() < 0:
                axis, p, q = -axis, -p, -q
            break
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return axis, p, q


def _side_key(K: IsotropySubgroup, x: Quaternion, y: Quaternion):
    if K.is_diag:
        if x != y and x != -y:
            return None
        return (0, -1, 0, ())
    img = _circle_image(K.circle, x, y)
    if img is None:
        return None
    axis, p, q = img
    rank = _AXIS_RANK.get(axis)
    if rank is None:
        rank = (3, axis.sort_key())
    else:
        rank = (rank,)
    return (1, rank, int(q < 0), (p, q))


def _kplus_images(d: Diagram):
    """Distinct ``K+`` obtained from the sampled identity component of ``N(H)``."""
    left, right = identity_component_samples(d.H)
    seen = {d.Kplus.key(): None}
    out = [(d, [])]
    if d.Kplus.is_diag:
        return out
    for x, y in product(left, right):
        a = GroupElement(x, y, check=False)
        if a.is_identity():
            continue
        img = d.Kplus.conjugate(a)
        if img is None or img.key() in seen:
            continue
        seen[img.key()] = a
        out.append((Diagram(d.Kminus, img, d.H, d.ambient, d.h_rank), [Move("conjugate_kplus", a)]))
    return out


def _transforms(d: Diagram):
    """All (moves, cheap key) for the searched move set."""
    rots = octahedral_rotations()
    for base, pre in _kplus_images(d):
        for swap_k, swap_f in product((False, True), repeat=2):
            e = base.swap_k() if swap_k else base
            e = e.swap_factors() if swap_f else e
            moves = list(pre)
            if swap_k:
                moves.append(Move("swap_k"))
            if swap_f:
                moves.append(Move("swap_factors"))
            for x, y in product(rots, rots):
                km = _side_key(e.Kminus, x, y)
                if km is None:
                    continue
                kp = _side_key(e.Kplus, x, y)
                if kp is None:
                    continue
                cheap = (km[0], kp[0], km[1], kp[1], km[2] + kp[2], km[3], kp[3])
                yield cheap, e, moves, GroupElement(x, y, check=False)


def _full_key(d: Diagram) -> tuple:
    def side(K):
        cos = sorted(x.sort_key() for x in K.key()[-1]) if K.is_circle else ()
        return tuple(cos)

    return (
        tuple(x.sort_key() for x in d.H.sorted()),
        side(d.Kminus),
        side(d.Kplus),
    )


def _normalize(d: Diagram) -> Diagram:
    def norm(K: IsotropySubgroup) -> IsotropySubgroup:
        if not K.is_circle:
            return K
        return IsotropySubgroup.circle_dot(K.circle.normalized(), K.F)

    return Diagram(norm(d.Kminus), norm(d.Kplus), d.H, d.ambient, d.h_rank)


def canonical_with_witness(d: Diagram) -> tuple[Diagram, list[Move]]:
    """Canonical representative of ``d`` and the moves leading to it."""
    best_cheap = None
    ties = []
    for cheap, e, moves, g in _transforms(d):
        if best_cheap is None or cheap < best_cheap:
            best_cheap, ties = cheap, [(e, moves, g)]
        elif cheap == best_cheap:
            ties.append((e, moves, g))
    if best_cheap is None:
        raise NonCanonicalizable(f"no searched conjugation keeps {d} in the supported shapes")
    best = None
    for e, moves, g in ties:
        img = e.conjugate(g)
        if img is None:
            continue
        img = _normalize(img)
        key = _full_key(img)
        if best is None or key < best[0]:
            moves = moves + ([] if g.is_identity() else [Move("conjugate", g)])
            best = (key, img, moves)
    if best is None:
        raise NonCanonicalizable(f"no searched conjugation keeps {d} in the supported shapes")
    return best[1], best[2]


def canonical_form(d: Diagram) -> Diagram:
    """Deterministic representative of the equivalence class of ``d``.

    Axes go to ``i`` for ``K-`` and ``j`` for ``K+`` when the two circles
    differ, slopes get ``p > 0`` and as few negative ``q`` as possible, and
    the remaining freedom is fixed by the smallest slope pairs and then the
    smallest sorted element list of ``H``.
    """
    return canonical_with_witness(d)[0]


# --- equivalence -------------------------------------------------------------


@dataclass
class EquivalenceResult:
    status: str
    witness: list[Move] = field(default_factory=list)
    differing: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.status == EQUIVALENT

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": [str(m) for m in self.witness],
            "differing_invariants": self.differing,
        }


def _invariants(d: Diagram) -> dict:
    from .weyl import weyl_group

    out = {}
    rep = validate(d)
    out["l"] = tuple(sorted((rep.l_minus, rep.l_plus)))
    out["pi1"] = rep.pi1_order
    out["kernel"] = rep.effective_kernel_order
    out["hbar"] = rep.hbar
    out["H"] = d.H.structure()
    try:
        out["weyl"] = weyl_group(d).type
    except CohomOneError:
        out["weyl"] = None
    try:
        from .topology import invariants

        inv = invariants(d)
        out["topology"] = (inv.family, inv.det_abs)
    except CohomOneError:
        out["topology"] = None
    return out


def equivalent(d1: Diagram, d2: Diagram) -> EquivalenceResult:
    """Decide equivalence by comparing canonical forms.

    A positive answer carries the list of moves taking ``d1`` to ``d2``.  A
    negative answer is claimed only when some invariant differs; otherwise
    the pair is reported as not identified by the searched moves.
    """
    c1, m1 = canonical_with_witness(d1)
    c2, m2 = canonical_with_witness(d2)
    if c1 == c2:
        witness = m1 + _inverse_moves(m2)
        if apply_moves(d1, witness) != d2:
            raise AssertionError("equivalence witness does not reproduce the target diagram")
        return EquivalenceResult(EQUIVALENT, witness)
    i1, i2 = _invariants(d1), _invariants(d2)
    differing = [k for k in i1 if i1[k] != i2[k]]
    if differing:
        return EquivalenceResult(INEQUIVALENT, differing=differing)
    return EquivalenceResult(UNIDENTIFIED)

