"""The Weyl group of a diagram.

The stabilizer of a normal geodesic modulo ``H`` is a dihedral group
generated by two involutions ``w-`` and ``w+``: ``w`` is the element of
``K`` (mod ``H``) whose square lies in ``H`` while ``w`` itself does not, and
which normalizes ``H``.  The order of ``w- w+`` modulo ``H`` is the ``m`` of
the dihedral type ``D_m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import Diagram, IsotropySubgroup
from .errors import NoRepresentative, OrderExceedsCap
from .groups import FiniteSubgroup, circle_torsion_intersect
from .qfield import GroupElement, Quaternion

__all__ = ["WeylResult", "weyl_representative", "weyl_group", "weyl_words"]

ANTIPODE = GroupElement(Quaternion(-1), Quaternion(-1))


@dataclass(frozen=True)
class WeylResult:
    w_minus: GroupElement
    w_plus: GroupElement
    half_order: int
    word_log: tuple[int, ...] = field(default=(), compare=False)

    @property
    def type(self) -> str:
        return f"D{self.half_order}"

    @property
    def order(self) -> int:
        return 2 * self.half_order

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "order": self.order,
            "w_minus": self.w_minus.literal(),
            "w_plus": self.w_plus.literal(),
            "powers_tested": list(self.word_log),
        }


def _is_weyl_involution(a: GroupElement, H: FiniteSubgroup) -> bool:
    return a not in H and (a * a) in H and H.is_normalized_by(a)


def weyl_representative(K: IsotropySubgroup, H: FiniteSubgroup) -> GroupElement:
    """The involution of ``K/H`` lifted to ``K``.

    For a circle with ``|C meet H| = m`` the first candidate is the circle
    point at angle ``pi/m``; for the diagonal ``S^3`` it is ``(-1,-1)``.
    Translates by ``H`` are tried if the candidate fails to normalize ``H``.
    """
    if K.is_circle:
        m = len(circle_torsion_intersect(K.circle, H))
        a = K.circle.point(Fraction(1, 2 * m))
    elif K.is_diag:
        a = ANTIPODE
    else:
        raise NoRepresentative("finite isotropy groups have no Weyl involution here")
    for cand in (a, *(a * h for h in H.sorted())):
        if _is_weyl_involution(cand, H):
            return cand
    raise NoRepresentative(f"no translate of {a} by H is an involution mod H normalizing H")


def weyl_group(d: Diagram, cap: int = 48) -> WeylResult:
    """Dihedral type of the Weyl group of ``d``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    wm = weyl_representative(d.Kminus, d.H)
    wp = weyl_representative(d.Kplus, d.H)
    g = wm * wp
    x = g
    log = []
    for n in range(1, cap + 1):
        log.append(n)
        if x in d.H:
            return WeylResult(wm, wp, n, tuple(log))
        x = x * g
    raise OrderExceedsCap(f"(w- w+)^n is not in H for n <= {cap}")


def weyl_words(w: WeylResult) -> list[GroupElement]:
    """Representatives of all elements of the Weyl group, as alternating words.

    Words ``w- w+ w- ...`` and ``w+ w- w+ ...`` of length up to ``2m`` cover
    the dihedral group of order ``2m``.
    """
    out = [GroupElement(Quaternion(1), Quaternion(1))]
    for first, second in ((w.w_minus, w.w_plus), (w.w_plus, w.w_minus)):
        x = out[0]
        for n in range(2 * w.half_order):
            x = x * (first if n % 2 == 0 else second)
            out.append(x)
    return out
