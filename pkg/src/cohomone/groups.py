"""Finite subgroups of S^3 x S^3, slope circles, and so(3)+so(3) linear algebra.

A slope circle ``C^u_(p,q)`` is the one-parameter subgroup
``theta -> (exp(p u theta), exp(q u theta))``.  For coprime ``(p, q)`` this map
is injective on ``[0, 2 pi)``, so a point of finite order ``d`` sits at a
parameter ``2 pi s/d`` with ``s`` prime to ``d``.  Points with coordinates in
Q(sqrt 2) therefore all live on the grid of eighth turns.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import gcd
from typing import Iterable, NamedTuple

from .errors import ClosureExceedsCap
from .qfield import (
    AXES,
    I,
    IDENTITY,
    ONE,
    Q_ONE,
    SQRT2_HALF,
    ZERO,
    FieldElem,
    GroupElement,
    Quaternion,
    exp_axis,
)

__all__ = [
    "FiniteSubgroup",
    "SlopeCircle",
    "TangentLine",
    "closure",
    "normalizes_circle",
    "circle_torsion_intersect",
    "lie_line",
    "ad_conjugate",
    "rank_over_field",
    "bracket",
    "bracket_closure_rank",
    "CENTER",
    "octahedral_rotations",
    "normalizer_identity_component",
]

DEFAULT_CAP = 64


class FiniteSubgroup:
    """A finite subgroup of S^3 x S^3 stored as its full element set."""

    __slots__ = ("elements", "generators", "_sorted", "_hash")

    def __init__(self, elements: Iterable[GroupElement], generators: Iterable[GroupElement] = ()):
        self.elements = frozenset(elements)
        self.generators = tuple(generators)
        self._sorted = None
        self._hash = None

    @classmethod
    def generated_by(cls, *gens, cap: int = DEFAULT_CAP) -> FiniteSubgroup:
        """Shorthand accepting ``(left, right)`` literal pairs or GroupElements."""
        elems = [g if isinstance(g, GroupElement) else GroupElement.of(*g) for g in gens]
        return closure(elems, cap)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.sorted())

    def sorted(self) -> tuple[GroupElement, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements, key=GroupElement.sort_key))
        return self._sorted

    def __eq__(self, other):
        if not isinstance(other, FiniteSubgroup):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.elements)
        return self._hash

    def __le__(self, other: FiniteSubgroup) -> bool:
        return self.elements <= other.elements

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def is_abelian(self) -> bool:
        gens = self.generators or self.sorted()
        return all(a * b == b * a for a, b in combinations(gens, 2))

    def is_cyclic(self) -> bool:
        n = len(self.elements)
        return any(x.order(n) == n for x in self.elements)

    def element_orders(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for x in self.elements:
            d = x.order(len(self.elements))
            counts[d] = counts.get(d, 0) + 1
        return counts

    def central_part(self) -> FiniteSubgroup:
        """Intersection with the centre {(+-1, +-1)} of S^3 x S^3."""
        return FiniteSubgroup(x for x in self.elements if x.is_central())

    def intersection(self, other: FiniteSubgroup) -> FiniteSubgroup:
        return FiniteSubgroup(self.elements & other.elements)

    def conjugate(self, g: GroupElement) -> FiniteSubgroup:
        return FiniteSubgroup(
            (g.conjugate(x) for x in self.elements),
            (g.conjugate(x) for x in self.generators),
        )

    def swap(self) -> FiniteSubgroup:
        return FiniteSubgroup((x.swap() for x in self.elements), (x.swap() for x in self.generators))

    def is_normalized_by(self, g: GroupElement) -> bool:
        return all(g.conjugate(x) in self.elements for x in self.elements)

    def normal_closure_in(self, subset: Iterable[GroupElement]) -> FiniteSubgroup:
        """Smallest normal subgroup of ``self`` containing ``subset``."""
        gens = set(subset)
        while True:
            sub = closure(gens)
            extra = {h.conjugate(x) for h in self.generators or self.elements for x in sub.elements}
            if extra <= sub.elements:
                return sub
            gens |= extra

    def structure(self) -> str:
        """Isomorphism type among the groups of order at most 8 met here."""
        n = len(self.elements)
        if n == 1:
            return "1"
        if self.is_cyclic():
            return f"Z{n}"
        orders = self.element_orders()
        if not self.is_abelian():
            if n == 8:
                return "Q" if orders.get(4, 0) == 6 else "D4"
            return f"nonabelian({n})"
        # abelian, not cyclic: read off invariant factors from element orders
        if n == 4:
            return "Z2+Z2"
        if n == 8:
            return "Z4+Z2" if 4 in orders else "Z2+Z2+Z2"
        return f"abelian({n})"

    def __repr__(self):
        body = ", ".join(x.literal() for x in self.sorted())
        return f"FiniteSubgroup({{{body}}})"

    def to_json(self):
        return {
            "generators": [g.literal() for g in self.generators],
            "elements": [x.literal() for x in self.sorted()],
        }


@lru_cache(maxsize=4096)
def _order_divides_8(x: GroupElement) -> bool:
    return (x**8).is_identity()


def closure(generators: Iterable[GroupElement], cap: int = DEFAULT_CAP) -> FiniteSubgroup:
    """Smallest subgroup containing ``generators``.

    Raises ClosureExceedsCap if the group would exceed ``cap`` elements or
    contains an element whose order does not divide 8.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    gens = []
    for g in generators:
        if not _order_divides_8(g):
            raise ClosureExceedsCap(f"generator {g} has order not dividing 8")
        if g not in gens and not g.is_identity():
            gens.append(g)
    return _closure(tuple(gens), cap)


@lru_cache(maxsize=4096)
def _closure(gens: tuple[GroupElement, ...], cap: int) -> FiniteSubgroup:
    seen = {IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ClosureExceedsCap(f"closure exceeds {cap} elements")
                queue.append(y)
    for x in seen:
        if not _order_divides_8(x):
            raise ClosureExceedsCap(f"element {x} has order not dividing 8")
    return FiniteSubgroup(seen, gens)


CENTER = closure([GroupElement.of("-1", "1"), GroupElement.of("1", "-1")])


def _normalize_axis(u: Quaternion) -> tuple[Quaternion, int]:
    """Return (+-u, sign) with the first nonzero coordinate of the result positive."""
    for c in u.vector:
        if not c.is_zero():
            return (u, 1) if c.sign() > 0 else (-u, -1)
    raise ValueError("zero axis")


class SlopeCircle:
    """The circle ``{(exp(p u t), exp(q u t))}`` for a pure unit quaternion ``u``."""

    __slots__ = ("axis", "p", "q", "_hash")

    def __init__(self, axis, p: int, q: int):
        if isinstance(axis, str):
            axis = AXES[axis]
        if not axis.is_pure() or not axis.is_unit():
            raise ValueError(f"circle axis must be a pure unit quaternion, got {axis}")
        if p == 0 and q == 0:
            raise ValueError("slope (0, 0) does not define a circle")
        self.axis = axis
        self.p = int(p)
        self.q = int(q)
        self._hash = None

    @property
    def slopes(self) -> tuple[int, int]:
        return (self.p, self.q)

    def is_coprime(self) -> bool:
        return gcd(self.p, self.q) == 1

    def axis_name(self) -> str:
        for name, u in AXES.items():
            if self.axis == u:
                return name
            if self.axis == -u:
                return f"-{name}"
        return self.axis.literal()

    def point(self, frac) -> GroupElement:
        """The circle point at parameter ``2 pi frac``."""
        frac = Fraction(frac)
        return GroupElement(
            exp_axis(self.axis, self.p * frac), exp_axis(self.axis, self.q * frac), check=False
        )

    def grid_points(self) -> tuple[GroupElement, ...]:
        """The 8 points at eighth turns, indexed by t."""
        return _grid_points(self.axis, self.p, self.q)

    def contains(self, x: GroupElement) -> bool:
        return x in _grid_set(self.axis, self.p, self.q)

    def normalized(self) -> SlopeCircle:
        """Same subgroup with positive axis and p > 0 (q > 0 when p = 0)."""
        u, s = _normalize_axis(self.axis)
        p, q = s * self.p, s * self.q
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return SlopeCircle(u, p, q)

    def swap(self) -> SlopeCircle:
        return SlopeCircle(self.axis, self.q, self.p)

    def conjugate(self, g: GroupElement) -> SlopeCircle | None:
        """Image under conjugation by ``g``, or None if it is no longer a slope circle."""
        left = g.left * self.axis * g.left.conj()
        right = g.right * self.axis * g.right.conj()
        if self.q == 0 or left == right:
            return SlopeCircle(left, self.p, self.q)
        if self.p == 0:
            return SlopeCircle(right, self.p, self.q)
        if left == -right:
            return SlopeCircle(left, self.p, -self.q)
        return None

    def key(self) -> tuple:
        c = self.normalized()
        return (c.axis, c.p, c.q)

    def __eq__(self, other):
        if not isinstance(other, SlopeCircle):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self):
        return f"C({self.axis_name()},{self.p},{self.q})"

    def to_json(self):
        return {"axis": self.axis_name(), "p": self.p, "q": self.q}


@lru_cache(maxsize=None)
def _grid_points(axis: Quaternion, p: int, q: int) -> tuple[GroupElement, ...]:
    return tuple(
        GroupElement(exp_axis(axis, Fraction(p * t, 8)), exp_axis(axis, Fraction(q * t, 8)), check=False)
        for t in range(8)
    )


@lru_cache(maxsize=None)
def _grid_set(axis: Quaternion, p: int, q: int) -> frozenset[GroupElement]:
    return frozenset(_grid_points(axis, p, q))


def _conj_sign(x: Quaternion, u: Quaternion) -> int:
    """+1 or -1 if x u x^-1 = +-u, else 0."""
    v = x * u * x.conj()
    if v == u:
        return 1
    if v == -u:
        return -1
    return 0


def normalizes_circle(F: FiniteSubgroup, C: SlopeCircle) -> dict[GroupElement, int] | None:
    """The sign character of ``F`` on ``C``, or None if some element tilts the circle.

    An element acts on the circle by ``+1`` if it centralizes it and by ``-1``
    if it inverts it.  Factors with slope 0 carry no constraint.
    """
    return _normalizes(F.elements, C.axis, C.p != 0, C.q != 0)


@lru_cache(maxsize=None)
def _normalizes(elements: frozenset, axis: Quaternion, use_left: bool, use_right: bool):
    eps = {}
    for h in elements:
        sl = _conj_sign(h.left, axis) if use_left else None
        sr = _conj_sign(h.right, axis) if use_right else None
        if sl == 0 or sr == 0:
            return None
        if sl is not None and sr is not None and sl != sr:
            return None
        eps[h] = sl if sl is not None else sr
    return eps


def circle_torsion_intersect(C: SlopeCircle, F: FiniteSubgroup) -> FiniteSubgroup:
    """``C`` intersected with ``F``, a cyclic group.

    Every point of ``C`` lying in ``F`` has order dividing ``|F|``, and for the
    groups allowed here also dividing 8, so scanning ``gcd(|F|, 8)`` evenly
    spaced parameters finds all of them.
    """
    return _intersect(C.axis, C.p, C.q, F.elements)


@lru_cache(maxsize=None)
def _intersect(axis, p, q, elements: frozenset) -> FiniteSubgroup:
    n = gcd(len(elements), 8)
    pts = _grid_points(axis, p, q)
    step = 8 // n
    return FiniteSubgroup(x for x in pts[::step] if x in elements)


class TangentLine(NamedTuple):
    """A vector in so(3)+so(3), each half a pure quaternion given by 3 coordinates."""

    left: tuple[FieldElem, FieldElem, FieldElem]
    right: tuple[FieldElem, FieldElem, FieldElem]

    @classmethod
    def of(cls, left, right) -> TangentLine:
        def vec(v):
            if isinstance(v, Quaternion):
                return v.vector
            return tuple(FieldElem.coerce(c) for c in v)

        return cls(vec(left), vec(right))

    def coords(self) -> tuple[FieldElem, ...]:
        return self.left + self.right

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.left + self.right)

    def __neg__(self):
        return TangentLine(tuple(-c for c in self.left), tuple(-c for c in self.right))

    def __repr__(self):
        def fmt(v):
            return "(" + ",".join(str(c) for c in v) + ")"

        return f"TangentLine({fmt(self.left)}, {fmt(self.right)})"


def lie_line(K) -> list[TangentLine]:
    """Lie algebra of the identity component of an isotropy group.

    Accepts a SlopeCircle, or anything with a ``circle`` attribute (None for
    the diagonal S^3).
    """
    circle = K if isinstance(K, SlopeCircle) else getattr(K, "circle", None)
    if circle is None:
        return [TangentLine.of(u, u) for u in (AXES["i"], AXES["j"], AXES["k"])]
    u = circle.axis.vector
    return [TangentLine(tuple(c * circle.p for c in u), tuple(c * circle.q for c in u))]


def _rotate(x: Quaternion, v):
    r = x * Quaternion(ZERO, *v) * x.conj()
    return r.vector


def ad_conjugate(g, L: TangentLine) -> TangentLine:
    """Adjoint action, ``v -> g v g^-1`` in each factor.

    ``g`` is a GroupElement or a pair of 3x3 rotation matrices (see
    :func:`rotation_matrix`), which covers rotations whose quaternion lift
    leaves Q(sqrt 2).
    """
    if isinstance(g, GroupElement):
        return TangentLine(_rotate(g.left, L.left), _rotate(g.right, L.right))
    ml, mr = g
    return TangentLine(_matvec(ml, L.left), _matvec(mr, L.right))


def _matvec(m, v):
    return tuple(m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2] for r in range(3))


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def bracket(L1: TangentLine, L2: TangentLine) -> TangentLine | None:
    """Lie bracket in so(3)+so(3); None when the bracket vanishes."""
    left = tuple(2 * c for c in _cross(L1.left, L2.left))
    right = tuple(2 * c for c in _cross(L1.right, L2.right))
    out = TangentLine(left, right)
    return None if out.is_zero() else out


def _echelon(rows):
    """Reduced row echelon basis of ``rows`` (lists of FieldElem)."""
    basis: list[tuple[int, list[FieldElem]]] = []
    for row in rows:
        r = list(row)
        for piv, b in basis:
            if not r[piv].is_zero():
                f = r[piv]
                r = [x - f * y for x, y in zip(r, b)]
        piv = next((n for n, x in enumerate(r) if not x.is_zero()), None)
        if piv is None:
            continue
        inv = r[piv].inverse()
        r = [x * inv for x in r]
        # keep earlier rows reduced against the new pivot
        new_basis = []
        for p, b in basis:
            if not b[piv].is_zero():
                f = b[piv]
                b = [x - f * y for x, y in zip(b, r)]
            new_basis.append((p, b))
        basis = new_basis + [(piv, r)]
    return basis


def rank_over_field(lines: Iterable[TangentLine]) -> int:
    """Exact rank of the lines as vectors in Q(sqrt 2)^6."""
    return len(_echelon(L.coords() for L in lines))


def bracket_closure_rank(lines: Iterable[TangentLine]) -> int:
    """Dimension of the Lie subalgebra generated by ``lines``."""
    basis = [L for L in lines if not L.is_zero()]
    rank = rank_over_field(basis)
    while rank < 6:
        new = [b for L1, L2 in combinations(basis, 2) if (b := bracket(L1, L2)) is not None]
        grown = basis + new
        new_rank = rank_over_field(grown)
        if new_rank == rank:
            break
        ech = _echelon(L.coords() for L in grown)
        basis = [TangentLine(tuple(r[:3]), tuple(r[3:])) for _, r in ech]
        rank = new_rank
    return rank


# ---------------------------------------------------------------------------
# rotations of the cube, used as a finite stand-in for conjugation by S^3


@lru_cache(maxsize=1)
def octahedral_rotations() -> tuple[Quaternion, ...]:
    """The binary octahedral group modulo +-1: 24 unit quaternions over Q(sqrt 2)."""
    half = FieldElem(Fraction(1, 2))
    units = [Quaternion(*row) for row in _signed_unit_vectors(4, ONE)]
    hurwitz = [Quaternion(*(half * s for s in signs)) for signs in product((1, -1), repeat=4)]
    edges = []
    for a, b in combinations(range(4), 2):
        for sa, sb in product((1, -1), repeat=2):
            c = [ZERO] * 4
            c[a] = SQRT2_HALF * sa
            c[b] = SQRT2_HALF * sb
            edges.append(Quaternion(*c))
    reps = []
    seen = set()
    for x in units + hurwitz + edges:
        if x in seen or -x in seen:
            continue
        seen.add(x)
        reps.append(x if _leading_positive(x) else -x)
    reps.sort(key=lambda x: (x != Q_ONE, x.sort_key()))
    return tuple(reps)


def _signed_unit_vectors(n, one):
    for pos in range(n):
        for s in (1, -1):
            v = [ZERO] * n
            v[pos] = one * s
            yield v


def _leading_positive(x: Quaternion) -> bool:
    for c in x.coords:
        if not c.is_zero():
            return c.sign() > 0
    return True


def rotation_matrix(x: Quaternion) -> tuple[tuple[FieldElem, ...], ...]:
    """3x3 matrix of ``v -> x v x^-1``."""
    cols = [_rotate(x, e.vector) for e in (AXES["i"], AXES["j"], AXES["k"])]
    return tuple(tuple(cols[c][r] for c in range(3)) for r in range(3))


@lru_cache(maxsize=None)
def axis_rotation(axis: Quaternion, eighths: int) -> tuple[tuple[FieldElem, ...], ...]:
    """Rotation by ``eighths * pi/4`` about a unit ``axis``, by Rodrigues' formula.

    The quaternion lift of an odd multiple of pi/4 needs cos(pi/8), which is
    not in Q(sqrt 2), but the rotation matrix itself is.
    """
    from .qfield import cos_sin

    c, s = cos_sin(Fraction(eighths, 8))
    u = axis.vector
    one_c = ONE - c
    m = [[ZERO] * 3 for _ in range(3)]
    for r in range(3):
        for col in range(3):
            m[r][col] = one_c * u[r] * u[col] + (c if r == col else ZERO)
    # cross-product matrix [u]_x scaled by sin
    m[0][1] -= s * u[2]
    m[0][2] += s * u[1]
    m[1][0] += s * u[2]
    m[1][2] -= s * u[0]
    m[2][0] -= s * u[1]
    m[2][1] += s * u[0]
    return tuple(tuple(row) for row in m)


IDENTITY_ROTATION = axis_rotation(I, 0)


def _common_axis(quats) -> Quaternion | bool | None:
    axis = None
    for x in quats:
        if x.is_central_unit():
            continue
        n = x.x * x.x + x.y * x.y + x.z * x.z
        v = Quaternion(ZERO, x.x, x.y, x.z)
        if n == FieldElem(Fraction(1, 2)):
            v = v * FieldElem(0, 1)
        elif n != 1:
            # sin^2 outside {1, 1/2}: not an eighth-turn element
            return None
        if axis is None:
            axis = _normalize_axis(v)[0]
        elif v != axis and v != -axis:
            return None
    return True if axis is None else axis


def normalizer_identity_component(H: FiniteSubgroup) -> tuple:
    """Identity component of ``N(H)`` for finite ``H``, one entry per factor.

    It equals the identity component of the centralizer.  Each entry is
    True for a full ``S^3`` (the projection of ``H`` is central), a unit
    axis ``u`` for the circle ``exp(u t)``, or None when it is trivial.
    """
    return tuple(_common_axis(getattr(h, side) for h in H.elements) for side in ("left", "right"))
