from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.algebras.quaternion import Quaternion as SymQuaternion

from cohomone.errors import DivisionByZero, ParseError, UnsupportedAngle
from cohomone.qfield import (
    AXES,
    I,
    IDENTITY,
    J,
    K,
    ONE,
    Q_ONE,
    SQRT2_HALF,
    FieldElem,
    GroupElement,
    Quaternion,
    exp_axis,
    field_arith,
    parse_quaternion,
    quat_mul,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
field_elems = st.builds(FieldElem, rationals, rationals)
nonzero_elems = field_elems.filter(lambda x: not x.is_zero())

# coordinates met in practice: 0, +-1, +-1/2, +-1/sqrt 2
coords = st.sampled_from([FieldElem(0), FieldElem(1), FieldElem(-1), FieldElem(Fraction(1, 2)),
                          FieldElem(0, Fraction(1, 2)), FieldElem(0, Fraction(-1, 2))])
quaternions = st.builds(Quaternion, coords, coords, coords, coords)
eighths = st.integers(min_value=-20, max_value=20).map(lambda t: Fraction(t, 8))
axes = st.sampled_from([I, J, K, -I, -J, -K])


def to_sympy(x: FieldElem):
    return sympy.Rational(int(x.a.numerator), int(x.a.denominator)) + sympy.Rational(
        int(x.b.numerator), int(x.b.denominator)
    ) * sympy.sqrt(2)


def quat_to_sympy(q: Quaternion) -> SymQuaternion:
    return SymQuaternion(*(to_sympy(c) for c in q.coords))


def same(q: Quaternion, s: SymQuaternion) -> bool:
    return all(sympy.simplify(to_sympy(c) - v) == 0 for c, v in zip(q.coords, (s.a, s.b, s.c, s.d)))


class TestFieldArith:
    def test_conjugate_product(self):
        assert field_arith(FieldElem(1, 1), FieldElem(1, -1), "mul") == FieldElem(-1, 0)

    def test_half_sqrt2_squared(self):
        assert field_arith(SQRT2_HALF, SQRT2_HALF, "mul") == FieldElem(Fraction(1, 2))

    def test_division_multiplies_back(self):
        x, y = FieldElem(3, 2), FieldElem(1, 1)
        q = field_arith(x, y, "div")
        assert q * y == x
        assert q == FieldElem(1, 1)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            field_arith(ONE, FieldElem(0), "div")
        with pytest.raises(ZeroDivisionError):
            ONE / FieldElem(0)

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            field_arith(ONE, ONE, "pow")

    @given(field_elems, field_elems, field_elems)
    def test_ring_axioms(self, x, y, z):
        assert x + y == y + x
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)

    @given(nonzero_elems)
    def test_inverse_round_trip(self, x):
        assert x * x.inverse() == ONE
        assert x.inverse().inverse() == x

    @given(field_elems)
    def test_matches_float(self, x):
        assert float(x) == pytest.approx(float(to_sympy(x)))

    @given(field_elems, field_elems)
    def test_sign_orders_like_reals(self, x, y):
        if float(x) < float(y) - 1e-9:
            assert (x - y).sign() == -1

    def test_json_round_trip(self):
        x = FieldElem(Fraction(-3, 7), Fraction(5, 2))
        assert FieldElem.from_json(x.to_json()) == x
        assert str(FieldElem(1, 1)) == "1+r2"


class TestQuaternion:
    def test_basis_products(self):
        assert quat_mul(I, J) == K
        assert J * K == I and K * I == J
        assert I * I == -Q_ONE

    def test_eighth_turn_squares_to_i(self):
        e = exp_axis(I, Fraction(1, 8))
        assert e == Quaternion(SQRT2_HALF, SQRT2_HALF)
        assert e * e == I

    def test_conjugation_reverses_axis(self):
        assert J * I * J.inverse() == -I

    @given(quaternions, quaternions)
    def test_hamilton_product_matches_sympy(self, p, q):
        assert same(p * q, quat_to_sympy(p) * quat_to_sympy(q))

    @given(quaternions, quaternions)
    def test_norm_multiplicative(self, p, q):
        assert (p * q).norm() == p.norm() * q.norm()
        assert p.conj() * p == Quaternion(p.norm())

    @given(quaternions, quaternions, quaternions)
    def test_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    def test_inverse_of_non_unit(self):
        q = Quaternion(1, 1, 0, 0)
        assert q * q.inverse() == Q_ONE
        with pytest.raises(DivisionByZero):
            Quaternion(0).inverse()

    def test_json_round_trip(self):
        q = exp_axis(J, Fraction(3, 8))
        assert Quaternion.from_json(q.to_json()) == q


class TestExpAxis:
    def test_quarter_turn(self):
        assert exp_axis(J, Fraction(1, 4)) == J

    def test_sixteenth_turn_unsupported(self):
        with pytest.raises(UnsupportedAngle):
            exp_axis(I, Fraction(1, 16))
        with pytest.raises(UnsupportedAngle):
            exp_axis(I, Fraction(1, 3))

    def test_requires_pure_unit_axis(self):
        with pytest.raises(ValueError):
            exp_axis(Quaternion(1, 1), Fraction(1, 8))

    @given(axes, eighths, eighths)
    def test_additive(self, u, s, t):
        assert exp_axis(u, s) * exp_axis(u, t) == exp_axis(u, (s + t) % 1)

    @given(axes, eighths)
    def test_unit_and_float_agree(self, u, s):
        import math

        q = exp_axis(u, s)
        assert q.is_unit()
        assert float(q.w) == pytest.approx(math.cos(2 * math.pi * s), abs=1e-12)


class TestLiterals:
    @pytest.mark.parametrize(
        "text,value",
        [("1", Q_ONE), ("-1", -Q_ONE), ("i", I), ("-k", -K), (" j ", J), ("e(i,1/8)", exp_axis(I, Fraction(1, 8))),
         ("-e(k,3/8)", -exp_axis(K, Fraction(3, 8))), ("e(j,2/8)", J)],
    )
    def test_parse(self, text, value):
        assert parse_quaternion(text) == value

    @pytest.mark.parametrize("text", ["x", "e(i,1/0)", "2", "e(q,1/8)", ""])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_quaternion(text)

    def test_literal_round_trip(self):
        for u in AXES.values():
            for t in range(8):
                q = exp_axis(u, Fraction(t, 8))
                assert parse_quaternion(q.literal()) == q


class TestGroupElement:
    def test_of_and_literal(self):
        g = GroupElement.of("i", "-j")
        assert g.literal() == "(i,-j)"
        assert (g * g) == GroupElement.of("-1", "-1")

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            GroupElement(Quaternion(1, 1), Q_ONE)

    def test_order(self):
        assert IDENTITY.order() == 1
        assert GroupElement.of("e(i,1/8)", "1").order() == 8
        assert GroupElement.of("i", "-1").order() == 4

    def test_conjugate_and_inverse(self):
        g, x = GroupElement.of("j", "1"), GroupElement.of("i", "i")
        assert g.conjugate(x) == GroupElement.of("-i", "i")
        assert (g * g.inverse()).is_identity()

    def test_swap_and_json(self):
        g = GroupElement.of("e(i,1/8)", "-k")
        assert g.swap().swap() == g
        assert GroupElement.from_json(g.to_json()) == g
