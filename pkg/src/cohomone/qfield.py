"""Exact arithmetic in Q(sqrt 2) and unit quaternions over it.

Every group element handled by the package has coordinates in this field:
the generators are built from the quaternion units and from rotations by
multiples of pi/4, and products of those never leave Q(sqrt 2).

>>> r = FieldElem(0, "1/2")          # sqrt(2)/2
>>> r * r
FieldElem('1/2')
>>> w = exp_axis(I, Fraction(1, 8))
>>> w * w == I
True
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from .errors import DivisionByZero, ParseError, UnsupportedAngle

__all__ = [
    "FieldElem",
    "Quaternion",
    "GroupElement",
    "ZERO",
    "ONE",
    "SQRT2_HALF",
    "Q_ONE",
    "I",
    "J",
    "K",
    "AXES",
    "exp_axis",
    "field_arith",
    "quat_mul",
    "parse_quaternion",
]


def _rat(value) -> mpq:
    if isinstance(value, mpq):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(Fraction(value.strip()))
    return mpq(value)


def _fmt_rat(r: mpq) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


class FieldElem:
    """The number a + b*sqrt(2) with a, b rational."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=0, b=0):
        self.a = _rat(a)
        self.b = _rat(b)
        self._hash = None

    @classmethod
    def _raw(cls, a: mpq, b: mpq) -> FieldElem:
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj._hash = None
        return obj

    @staticmethod
    def coerce(value) -> FieldElem:
        if isinstance(value, FieldElem):
            return value
        return FieldElem(value)

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def __add__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (int, Fraction)):
                other = FieldElem(other)
            else:
                return NotImplemented
        return FieldElem._raw(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._raw(-self.a, -self.b)

    def __sub__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (int, Fraction)):
                other = FieldElem(other)
            else:
                return NotImplemented
        return FieldElem._raw(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return FieldElem.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, int):
                return FieldElem._raw(self.a * other, self.b * other)
            if isinstance(other, Fraction):
                other = FieldElem(other)
            else:
                return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        if not b and not d:
            return FieldElem._raw(a * c, b)
        return FieldElem._raw(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> FieldElem:
        """The Galois conjugate a - b*sqrt(2)."""
        return FieldElem._raw(self.a, -self.b)

    def field_norm(self) -> mpq:
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> FieldElem:
        n = self.field_norm()
        if not n:
            # a^2 = 2 b^2 has no rational solution besides zero
            raise DivisionByZero("inverse of zero in Q(sqrt 2)")
        return FieldElem._raw(self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = FieldElem.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.a, self.b))
        return h

    def __bool__(self):
        return not self.is_zero()

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(2)."""
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        if not a:
            return (b > 0) - (b < 0)
        # compare a with -b*sqrt(2) by squaring
        sa, sb = (a > 0) - (a < 0), (b > 0) - (b < 0)
        if sa == sb:
            return sa
        return sa if a * a > 2 * b * b else sb

    def sort_key(self) -> tuple:
        return (self.a, self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * 2**0.5

    def __repr__(self):
        if not self.b:
            return f"FieldElem('{_fmt_rat(self.a)}')"
        return f"FieldElem('{_fmt_rat(self.a)}', '{_fmt_rat(self.b)}')"

    def __str__(self):
        if not self.b:
            return _fmt_rat(self.a)
        rt = f"{_fmt_rat(abs(self.b))}*r2" if abs(self.b) != 1 else "r2"
        if not self.a:
            return rt if self.b > 0 else f"-{rt}"
        return f"{_fmt_rat(self.a)}{'+' if self.b > 0 else '-'}{rt}"

    def to_json(self) -> list[str]:
        return [_fmt_rat(self.a), _fmt_rat(self.b)]

    @classmethod
    def from_json(cls, data) -> FieldElem:
        return cls(Fraction(data[0]), Fraction(data[1]))


ZERO = FieldElem(0)
ONE = FieldElem(1)
SQRT2_HALF = FieldElem(0, Fraction(1, 2))


def field_arith(x: FieldElem, y: FieldElem, op: str) -> FieldElem:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} exactly."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


# Almost every product met in practice is between elements of a few small
# finite groups, so memoizing Hamilton products pays off many times over.
_PRODUCTS: dict = {}
_PRODUCT_CACHE_SIZE = 1 << 18


class Quaternion:
    """w + x i + y j + z k over Q(sqrt 2)."""

    __slots__ = ("w", "x", "y", "z", "_hash")

    def __init__(self, w=0, x=0, y=0, z=0):
        self.w = FieldElem.coerce(w)
        self.x = FieldElem.coerce(x)
        self.y = FieldElem.coerce(y)
        self.z = FieldElem.coerce(z)
        self._hash = None

    @classmethod
    def _raw(cls, w, x, y, z) -> Quaternion:
        obj = object.__new__(cls)
        obj.w, obj.x, obj.y, obj.z = w, x, y, z
        obj._hash = None
        return obj

    @classmethod
    def pure(cls, vec) -> Quaternion:
        x, y, z = vec
        return cls(0, x, y, z)

    @property
    def coords(self) -> tuple[FieldElem, FieldElem, FieldElem, FieldElem]:
        return (self.w, self.x, self.y, self.z)

    @property
    def vector(self) -> tuple[FieldElem, FieldElem, FieldElem]:
        return (self.x, self.y, self.z)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, Fraction, FieldElem)):
                s = FieldElem.coerce(other)
                return Quaternion._raw(self.w * s, self.x * s, self.y * s, self.z * s)
            return NotImplemented
        key = (self, other)
        prod = _PRODUCTS.get(key)
        if prod is None:
            a1, b1, c1, d1 = self.w, self.x, self.y, self.z
            a2, b2, c2, d2 = other.w, other.x, other.y, other.z
            prod = Quaternion._raw(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
            if len(_PRODUCTS) >= _PRODUCT_CACHE_SIZE:
                _PRODUCTS.clear()
            _PRODUCTS[key] = prod
        return prod

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        return Quaternion._raw(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return Quaternion._raw(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quaternion._raw(-self.w, -self.x, -self.y, -self.z)

    def conj(self) -> Quaternion:
        return Quaternion._raw(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> FieldElem:
        """Squared Euclidean norm w^2 + x^2 + y^2 + z^2."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_pure(self) -> bool:
        return self.w.is_zero()

    def inverse(self) -> Quaternion:
        n = self.norm()
        if n == 1:
            return self.conj()
        inv = n.inverse()
        return self.conj() * inv

    def __pow__(self, n: int) -> Quaternion:
        if n < 0:
            return self.inverse() ** (-n)
        result = Q_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.w == other.w and self.x == other.x and self.y == other.y and self.z == other.z

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.w, self.x, self.y, self.z))
        return h

    def is_real(self) -> bool:
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def is_central_unit(self) -> bool:
        """True for +1 and -1, the centre of S^3."""
        return self.is_real() and (self.w == 1 or self.w == -1)

    def sort_key(self) -> tuple:
        return tuple(c.sort_key() for c in (self.w, self.x, self.y, self.z))

    def __repr__(self):
        return f"Quaternion({self.literal()})"

    def __str__(self):
        return self.literal()

    def literal(self) -> str:
        """Shortest literal accepted by :func:`parse_quaternion`."""
        return _literal(self)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coords]

    @classmethod
    def from_json(cls, data) -> Quaternion:
        return cls(*(FieldElem.from_json(c) for c in data))


Q_ONE = Quaternion(1)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
AXES = {"i": I, "j": J, "k": K}

# (cos, sin) of 2*pi*t/8, t = 0..7
_EIGHTHS = (
    (ONE, ZERO),
    (SQRT2_HALF, SQRT2_HALF),
    (ZERO, ONE),
    (-SQRT2_HALF, SQRT2_HALF),
    (-ONE, ZERO),
    (-SQRT2_HALF, -SQRT2_HALF),
    (ZERO, -ONE),
    (SQRT2_HALF, -SQRT2_HALF),
)


def _eighths(angle) -> int:
    frac = Fraction(angle) % 1
    if 8 % frac.denominator:
        raise UnsupportedAngle(f"cos/sin of 2*pi*{frac} do not lie in Q(sqrt 2)")
    return int(frac * 8)


def cos_sin(angle) -> tuple[FieldElem, FieldElem]:
    """Exact (cos, sin) of 2*pi*angle for angle a multiple of 1/8."""
    return _EIGHTHS[_eighths(angle)]


@lru_cache(maxsize=4096)
def _exp_cached(u: Quaternion, t: int) -> Quaternion:
    c, s = _EIGHTHS[t]
    return Quaternion._raw(c, u.x * s, u.y * s, u.z * s)


def exp_axis(u: Quaternion, angle) -> Quaternion:
    """cos(2 pi angle) + u sin(2 pi angle) for a pure unit quaternion ``u``.

    ``angle`` is the fraction of a full turn.  Only multiples of 1/8 keep the
    coordinates inside Q(sqrt 2); anything else raises UnsupportedAngle.
    """
    if not u.is_pure() or not u.is_unit():
        raise ValueError(f"exp_axis needs a pure unit quaternion, got {u}")
    return _exp_cached(u, _eighths(angle))


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


_NAMED = {}


def _literal(q: Quaternion) -> str:
    if not _NAMED:
        for name, unit in (("1", Q_ONE), ("i", I), ("j", J), ("k", K)):
            _NAMED[unit] = name
            _NAMED[-unit] = f"-{name}"
        for name, axis in AXES.items():
            for t in (1, 3, 5, 7):
                _NAMED[exp_axis(axis, Fraction(t, 8))] = f"e({name},{t}/8)"
    if q in _NAMED:
        return _NAMED[q]
    return "q(" + ",".join(str(c) for c in q.coords) + ")"


_TOKEN = re.compile(r"\s*(-?)\s*(?:(e)\s*\(\s*([ijk])\s*,\s*(-?\d+)\s*/\s*(\d+)\s*\)|([1ijk]))\s*")


def parse_quaternion(text: str, offset: int = 0) -> Quaternion:
    """Parse a quaternion literal: ``1``, ``-i``, ``j``, ``e(i,1/8)``, ``-e(k,3/8)``."""
    m = _TOKEN.fullmatch(text)
    if not m:
        raise ParseError(f"bad quaternion literal {text.strip()!r}", offset)
    neg, is_exp, axis, num, den, unit = m.groups()
    if is_exp:
        if int(den) == 0:
            raise ParseError("zero denominator in angle", offset)
        q = exp_axis(AXES[axis], Fraction(int(num), int(den)))
    else:
        q = Q_ONE if unit == "1" else AXES[unit]
    return -q if neg else q


class GroupElement:
    """A pair of unit quaternions, an element of S^3 x S^3."""

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left: Quaternion, right: Quaternion, check: bool = True):
        if check and not (left.is_unit() and right.is_unit()):
            raise ValueError(f"components must be unit quaternions: ({left}, {right})")
        self.left = left
        self.right = right
        self._hash = None

    @classmethod
    def of(cls, left, right) -> GroupElement:
        """Build from literals or quaternions, e.g. ``GroupElement.of('i', '-j')``."""
        if isinstance(left, str):
            left = parse_quaternion(left)
        if isinstance(right, str):
            right = parse_quaternion(right)
        return cls(left, right)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.left * other.left, self.right * other.right, check=False)

    def inverse(self) -> GroupElement:
        return GroupElement(self.left.conj(), self.right.conj(), check=False)

    def __neg__(self) -> GroupElement:
        return GroupElement(-self.left, -self.right, check=False)

    def __pow__(self, n: int) -> GroupElement:
        return GroupElement(self.left**n, self.right**n, check=False)

    def conjugate(self, x: GroupElement) -> GroupElement:
        """self * x * self^-1."""
        return GroupElement(
            self.left * x.left * self.left.conj(),
            self.right * x.right * self.right.conj(),
            check=False,
        )

    def is_identity(self) -> bool:
        return self.left == Q_ONE and self.right == Q_ONE

    def is_central(self) -> bool:
        return self.left.is_central_unit() and self.right.is_central_unit()

    def swap(self) -> GroupElement:
        return GroupElement(self.right, self.left, check=False)

    def order(self, cap: int = 64) -> int | None:
        """Multiplicative order, or None if it exceeds ``cap``."""
        x = self
        for n in range(1, cap + 1):
            if x.is_identity():
                return n
            x = x * self
        return None

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.left, self.right))
        return h

    def sort_key(self) -> tuple:
        return (self.left.sort_key(), self.right.sort_key())

    def literal(self) -> str:
        return f"({self.left.literal()},{self.right.literal()})"

    __str__ = literal

    def __repr__(self):
        return f"GroupElement{self.literal()}"

    def to_json(self):
        return [self.left.to_json(), self.right.to_json()]

    @classmethod
    def from_json(cls, data) -> GroupElement:
        return cls(Quaternion.from_json(data[0]), Quaternion.from_json(data[1]))


IDENTITY = GroupElement(Q_ONE, Q_ONE)
