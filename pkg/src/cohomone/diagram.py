"""Group diagrams ``H < {K-, K+} < S^3 x S^3`` and their validation.

A diagram describes a cohomogeneity one manifold: the principal orbit is
``G/H`` and the two singular orbits are ``G/K-`` and ``G/K+``.  Each ``K/H``
must be a sphere.  Here ``K`` is either a slope circle times a finite group
(``l = 1``) or the diagonal ``S^3`` times a finite group (``l = 3``).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

from .errors import NotASphere, NotASubgroup
from .groups import (
    FiniteSubgroup,
    SlopeCircle,
    circle_torsion_intersect,
    closure,
    normalizes_circle,
)
from .qfield import I, IDENTITY, J, Q_ONE, GroupElement
from .verdict import Verdict

__all__ = [
    "IsotropySubgroup",
    "Diagram",
    "ValidationReport",
    "validate",
    "kernel_triviality_check",
    "kernel_parts",
    "quotient_structure",
    "TRIVIAL",
    "H_TYPES",
    "slope_diagram",
]

TRIVIAL = FiniteSubgroup([IDENTITY], [])

FINITE = "finite"
CIRCLE = "circle"
DIAG_S3 = "ds3"


class IsotropySubgroup:
    """``K = K0 . F`` with ``K0`` trivial, a slope circle, or the diagonal S^3."""

    __slots__ = ("kind", "circle", "F", "_key")

    def __init__(self, kind: str, F: FiniteSubgroup = TRIVIAL, circle: SlopeCircle | None = None):
        if kind not in (FINITE, CIRCLE, DIAG_S3):
            raise ValueError(f"unknown isotropy kind {kind!r}")
        if (kind == CIRCLE) != (circle is not None):
            raise ValueError("a circle is required exactly for the circle kind")
        if circle is not None:
            g = gcd(circle.p, circle.q)
            if g > 1:
                # same subgroup, injective parametrization
                circle = SlopeCircle(circle.axis, circle.p // g, circle.q // g)
        self.kind = kind
        self.circle = circle
        self.F = F
        self._key = None

    @classmethod
    def finite(cls, F: FiniteSubgroup) -> IsotropySubgroup:
        return cls(FINITE, F)

    @classmethod
    def circle_dot(cls, C: SlopeCircle, F: FiniteSubgroup = TRIVIAL) -> IsotropySubgroup:
        return cls(CIRCLE, F, C)

    @classmethod
    def diag_s3(cls, F: FiniteSubgroup = TRIVIAL) -> IsotropySubgroup:
        return cls(DIAG_S3, F)

    @property
    def is_circle(self) -> bool:
        return self.kind == CIRCLE

    @property
    def is_diag(self) -> bool:
        return self.kind == DIAG_S3

    @property
    def dim(self) -> int:
        return {FINITE: 0, CIRCLE: 1, DIAG_S3: 3}[self.kind]

    def identity_component_contains(self, x: GroupElement) -> bool:
        if self.kind == CIRCLE:
            return self.circle.contains(x)
        if self.kind == DIAG_S3:
            return x.left == x.right
        return x.is_identity()

    def contains(self, x: GroupElement) -> bool:
        if self.kind == CIRCLE:
            # torsion points of C.F all sit in the eighth-turn cosets
            return x in self.key()[2]
        return any(self.identity_component_contains(f.inverse() * x) for f in self.F.elements)

    def identity_component_meet(self, H: FiniteSubgroup) -> FiniteSubgroup:
        """``K0`` intersected with ``H``."""
        if self.kind == CIRCLE:
            return circle_torsion_intersect(self.circle, H)
        return FiniteSubgroup(x for x in H.elements if self.identity_component_contains(x))

    def component_count(self) -> int:
        return len(self.F) // len(self.identity_component_meet(self.F))

    def conjugate(self, g: GroupElement) -> IsotropySubgroup | None:
        """Image under conjugation by ``g``; None if it leaves the supported shapes."""
        F = self.F.conjugate(g)
        if self.kind == CIRCLE:
            c = self.circle.conjugate(g)
            return None if c is None else IsotropySubgroup(CIRCLE, F, c)
        if self.kind == DIAG_S3 and g.left != g.right and g.left != -g.right:
            return None
        return IsotropySubgroup(self.kind, F, None)

    def swap(self) -> IsotropySubgroup:
        c = self.circle.swap() if self.circle is not None else None
        return IsotropySubgroup(self.kind, self.F.swap(), c)

    def key(self) -> tuple:
        """Hashable description of ``K`` as a set."""
        if self._key is None:
            if self.kind == CIRCLE:
                pts = self.circle.grid_points()
                cosets = frozenset(f * x for f in self.F.elements for x in pts)
                self._key = (CIRCLE, self.circle.key(), cosets)
            elif self.kind == DIAG_S3:
                self._key = (DIAG_S3, frozenset(f.left.conj() * f.right for f in self.F.elements))
            else:
                self._key = (FINITE, self.F.elements)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, IsotropySubgroup):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def text(self, H: FiniteSubgroup | None = None) -> str:
        if self.kind == CIRCLE:
            c = self.circle
            base = f"C({c.axis_name()},{c.p},{c.q})"
        elif self.kind == DIAG_S3:
            base = "DS3"
        else:
            base = "1"
        if self.F.is_trivial():
            return base
        if H is not None and self.F == H:
            return f"{base}*H"
        return f"{base}*gen{{{','.join(g.literal() for g in self.F.generators)}}}"

    def __repr__(self):
        return f"IsotropySubgroup({self.text()})"

    def to_json(self, H: FiniteSubgroup | None = None) -> dict:
        out = {"kind": self.kind}
        if self.circle is not None:
            out["circle"] = self.circle.to_json()
        if H is not None and self.F == H:
            out["F"] = "H"
        else:
            out["F"] = [g.literal() for g in self.F.generators]
        return out


@dataclass(frozen=True, eq=False)
class Diagram:
    Kminus: IsotropySubgroup
    Kplus: IsotropySubgroup
    H: FiniteSubgroup
    ambient: str = "S3xS3"
    # dimension of a hypothetical identity component of H; only synthetic
    # inputs set this, since the grammar produces finite H
    h_rank: int = 0

    def key(self) -> tuple:
        return (self.Kminus.key(), self.Kplus.key(), self.H.elements)

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @property
    def sides(self) -> tuple[IsotropySubgroup, IsotropySubgroup]:
        return (self.Kminus, self.Kplus)

    def swap_k(self) -> Diagram:
        return replace(self, Kminus=self.Kplus, Kplus=self.Kminus)

    def swap_factors(self) -> Diagram:
        return replace(self, Kminus=self.Kminus.swap(), Kplus=self.Kplus.swap(), H=self.H.swap())

    def conjugate(self, g: GroupElement) -> Diagram | None:
        km, kp = self.Kminus.conjugate(g), self.Kplus.conjugate(g)
        if km is None or kp is None:
            return None
        return replace(self, Kminus=km, Kplus=kp, H=self.H.conjugate(g))

    def conjugate_kplus(self, a: GroupElement) -> Diagram | None:
        if not self.H.is_normalized_by(a):
            raise ValueError(f"{a} does not normalize H")
        kp = self.Kplus.conjugate(a)
        return None if kp is None else replace(self, Kplus=kp)

    def text(self) -> str:
        gens = ",".join(g.literal() for g in self.H.generators)
        return f"K-={self.Kminus.text(self.H)}; K+={self.Kplus.text(self.H)}; H=gen{{{gens}}}"

    __str__ = text

    def __repr__(self):
        return f"Diagram({self.text()!r})"

    def slopes(self) -> tuple[tuple[int, int] | None, tuple[int, int] | None]:
        return tuple(k.circle.slopes if k.is_circle else None for k in self.sides)

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "Kminus": self.Kminus.to_json(self.H),
            "Kplus": self.Kplus.to_json(self.H),
            "H": self.H.to_json(),
            "text": self.text(),
        }


EFFECTIVE_TAGS = {
    frozenset({(1, 1)}): "S3xS3",
    frozenset({(1, 1), (-1, -1)}): "SO4",
    frozenset({(1, 1), (-1, 1)}): "SO3xS3",
    frozenset({(1, 1), (1, -1)}): "S3xSO3",
    frozenset({(1, 1), (-1, -1), (-1, 1), (1, -1)}): "SO3xSO3",
}


@dataclass(frozen=True)
class ValidationReport:
    l_minus: int
    l_plus: int
    components_Kminus: int
    components_Kplus: int
    pi1_order: int
    effective_kernel_order: int
    effective_group: str
    hbar: str

    @property
    def simply_connected(self) -> bool:
        return self.pi1_order == 1

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _check_side(name: str, K: IsotropySubgroup, H: FiniteSubgroup) -> None:
    if K.kind == FINITE:
        raise NotASphere(f"{name} is finite, which would give an exceptional orbit")
    if K.kind == CIRCLE and normalizes_circle(K.F, K.circle) is None:
        raise NotASphere(f"the finite part of {name} does not normalize {K.circle}")
    if K.kind == DIAG_S3:
        bad = [f for f in K.F.elements if f.left != f.right and f.left != -f.right]
        if bad:
            raise NotASphere(f"{bad[0]} does not normalize the diagonal S^3 in {name}")
    missing = [h for h in H.sorted() if not K.contains(h)]
    if missing:
        raise NotASubgroup(f"H is not contained in {name}: {missing[0]} is missing")
    # K/H is connected only if F lies in K0 . H
    stray = [f for f in K.F.sorted() if not any(K.identity_component_contains(f * h) for h in H.elements)]
    if stray:
        raise NotASphere(f"{name}/H is disconnected ({stray[0]} is not in {name}_0 H)")
    if K.kind == DIAG_S3:
        meet = K.identity_component_meet(H)
        if not meet.is_trivial():
            raise NotASphere(f"{name}/H is a quotient of S^3 by a group of order {len(meet)}")


def validate(d: Diagram) -> ValidationReport:
    """Check that ``d`` is a diagram with sphere fibres and compute basic data.

    The fundamental group of the manifold is ``H`` modulo the normal subgroup
    generated by ``H`` meet ``K0-`` and ``H`` meet ``K0+``, which holds for a
    simply connected ``G`` and connected sphere fibres.
    """
    for name, K in (("K-", d.Kminus), ("K+", d.Kplus)):
        _check_side(name, K, d.H)
    meets = [k.identity_component_meet(d.H) for k in d.sides]
    N = d.H.normal_closure_in(meets[0].elements | meets[1].elements)
    kernel = d.H.central_part()
    tag = EFFECTIVE_TAGS[frozenset(_central_signs(x) for x in kernel.elements)]
    return ValidationReport(
        l_minus=d.Kminus.dim,
        l_plus=d.Kplus.dim,
        components_Kminus=d.Kminus.component_count(),
        components_Kplus=d.Kplus.component_count(),
        pi1_order=len(d.H) // len(N),
        effective_kernel_order=len(kernel),
        effective_group=tag,
        hbar=quotient_structure(d.H, kernel),
    )


def _central_signs(x: GroupElement) -> tuple[int, int]:
    return (1 if x.left.w == 1 else -1, 1 if x.right.w == 1 else -1)


def quotient_structure(H: FiniteSubgroup, N: FiniteSubgroup) -> str:
    """Isomorphism type of ``H/N`` for a central subgroup ``N``."""
    n = len(H) // len(N)
    if n == 1:
        return "1"

    def order_mod(x):
        y, k = x, 1
        while y not in N.elements:
            y, k = y * x, k + 1
        return k

    orders = [order_mod(x) for x in H.elements]
    if max(orders) == n:
        return f"Z{n}"
    elems = H.sorted()
    abelian = all((a * b * a.inverse() * b.inverse()) in N.elements for a in elems for b in elems)
    if not abelian:
        return f"nonabelian({n})"
    if n == 4:
        return "Z2+Z2"
    if n == 8:
        return "Z4+Z2" if 4 in orders else "Z2+Z2+Z2"
    return f"abelian({n})"


def kernel_parts(d: Diagram) -> tuple[FiniteSubgroup, FiniteSubgroup]:
    """``(H-, H+)``: the elements of ``H`` acting trivially on ``K-/H`` and ``K+/H``.

    On a circle fibre, ``h`` acts trivially exactly when it centralizes the
    circle.  On ``S^3``, only central elements of ``G`` act trivially.
    """
    parts = []
    for K in d.sides:
        if K.is_circle:
            eps = normalizes_circle(d.H, K.circle)
            parts.append(FiniteSubgroup(h for h, s in eps.items() if s == 1))
        else:
            parts.append(d.H.central_part())
    return parts[0], parts[1]


def kernel_triviality_check(d: Diagram) -> Verdict:
    """``H-`` and ``H+`` must meet trivially once the ineffective kernel is divided out."""
    Z = d.H.central_part()
    hm, hp = kernel_parts(d)
    hmz = closure(list(hm.elements | Z.elements))
    hpz = closure(list(hp.elements | Z.elements))
    meet = hmz.elements & hpz.elements
    sizes = {"H-": len(hmz) // len(Z), "H+": len(hpz) // len(Z), "meet": len(meet) // len(Z)}
    if meet <= Z.elements:
        return Verdict.ok(f"effective H- of order {sizes['H-']}, H+ of order {sizes['H+']}", details=sizes)
    witness = min(meet - Z.elements, key=GroupElement.sort_key)
    return Verdict.fail(
        f"H- and H+ share a nontrivial element of order {len(meet) // len(Z)} mod the kernel",
        witness=witness.literal(),
        details=sizes,
    )


H_TYPES = ("Q", "Z4Z2")


def slope_diagram(minus: tuple[int, int], plus: tuple[int, int], h_type: str | None = None) -> Diagram:
    """Diagram with circles ``C^i_minus`` and ``C^j_plus`` and the ``H`` the slopes call for.

    ``Q``: the twisted diagonal quaternion group generated by
    ``(i^p-, i^q-)`` and ``(j^p+, j^q+)``; it needs all four slopes odd.
    ``Z4Z2``: ``{(+-1,+-1), (+-i,+-i)}``; it needs the ``K-`` slopes odd.
    Without ``h_type``, all-odd slopes give ``Q`` and otherwise the odd pair
    is moved to ``K-``.
    """
    odd = [all(x % 2 for x in pair) for pair in (minus, plus)]
    if h_type is None:
        if all(odd):
            h_type = "Q"
        elif any(odd):
            h_type = "Z4Z2"
            if not odd[0]:
                minus, plus = plus, minus
                odd.reverse()
        else:
            raise NotASphere(f"no diagram with slopes {minus}, {plus}: both pairs have an even entry")
    if h_type == "Q":
        if not all(odd):
            raise NotASphere(f"quaternion H needs all slopes odd, got {minus}, {plus}")
        H = closure(
            [
                GroupElement(I ** (minus[0] % 4), I ** (minus[1] % 4), check=False),
                GroupElement(J ** (plus[0] % 4), J ** (plus[1] % 4), check=False),
            ]
        )
    elif h_type == "Z4Z2":
        if not odd[0]:
            raise NotASphere(f"Z4+Z2 needs odd K- slopes, got {minus}")
        H = closure([GroupElement(I, I), GroupElement(-Q_ONE, Q_ONE)])
    else:
        raise ValueError(f"h_type must be one of {H_TYPES}, got {h_type!r}")
    return Diagram(
        IsotropySubgroup.circle_dot(SlopeCircle("i", *minus), H),
        IsotropySubgroup.circle_dot(SlopeCircle("j", *plus), H),
        H,
    )
