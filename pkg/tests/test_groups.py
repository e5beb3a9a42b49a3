from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohomone.catalog import family_diagrams
from cohomone.errors import ClosureExceedsCap
from cohomone.groups import (
    FiniteSubgroup,
    SlopeCircle,
    TangentLine,
    ad_conjugate,
    bracket,
    bracket_closure_rank,
    circle_torsion_intersect,
    closure,
    lie_line,
    normalizer_identity_component,
    normalizes_circle,
    octahedral_rotations,
    rank_over_field,
    rotation_matrix,
)
from cohomone.qfield import I, J, K, GroupElement, Quaternion, exp_axis

from oracles import as_float, brute_force_intersection, float_mul

G = GroupElement.of


def group(*pairs):
    return FiniteSubgroup.generated_by(*pairs)


QTYPE = group(("i", "i"), ("j", "-j"))
B7_H = group(("-i", "i"), ("j", "-j"))
Z4Z2 = group(("i", "i"), ("-1", "1"))


class TestClosure:
    def test_quaternion_type(self):
        expected = {G("1", "1"), G("-1", "-1"), G("i", "i"), G("-i", "-i"),
                    G("j", "-j"), G("-j", "j"), G("k", "-k"), G("-k", "k")}
        assert QTYPE.elements == expected
        assert QTYPE.structure() == "Q"

    def test_z4_z2(self):
        expected = {G(a, b) for a, b in [("1", "1"), ("-1", "1"), ("1", "-1"), ("-1", "-1"),
                                         ("i", "i"), ("-i", "i"), ("i", "-i"), ("-i", "-i")]}
        assert Z4Z2.elements == expected
        assert Z4Z2.structure() == "Z4+Z2"

    def test_order_two(self):
        assert group(("-1", "1")).order == 2
        assert group(("-1", "1")).structure() == "Z2"

    def test_cap(self):
        assert closure([G("i", "i")], cap=4).order == 4
        with pytest.raises(ClosureExceedsCap):
            closure([G("i", "i")], cap=3)
        with pytest.raises(ValueError):
            closure([G("i", "i")], cap=0)

    def test_exponent_eight_enforced(self):
        # (1+i)(1+j)/2 has order 6
        x = exp_axis(I, Fraction(1, 8)) * exp_axis(J, Fraction(1, 8))
        with pytest.raises(ClosureExceedsCap):
            closure([GroupElement(x, Quaternion(1))])

    def test_idempotent(self):
        for H in (QTYPE, B7_H, Z4Z2):
            assert closure(H.elements) == H

    def test_structures(self):
        assert group(("e(i,1/8)", "1")).structure() == "Z8"
        assert group(("i", "1"), ("j", "1")).structure() == "Q"
        assert group(("-1", "1"), ("1", "-1")).structure() == "Z2+Z2"
        assert FiniteSubgroup.generated_by().structure() == "1"

    def test_normal_closure(self):
        N = QTYPE.normal_closure_in([G("i", "i")])
        assert N.order == 4


class TestCircles:
    def test_normalizes_quaternion_type(self):
        eps = normalizes_circle(QTYPE, SlopeCircle("i", 1, 1))
        assert eps is not None
        assert eps[G("j", "-j")] == -1 and eps[G("-j", "j")] == -1
        assert eps[G("i", "i")] == 1

    def test_trivial_group_normalizes(self):
        eps = normalizes_circle(group(), SlopeCircle("k", 2, 5))
        assert eps == {G("1", "1"): 1}

    def test_tilted_axis_does_not_normalize(self):
        F = group(("e(i,1/8)", "1"))
        assert normalizes_circle(F, SlopeCircle("j", 1, 1)) is None

    def test_intersections(self):
        meet = circle_torsion_intersect(SlopeCircle("i", 1, 1), Z4Z2)
        assert meet.elements == {G("1", "1"), G("i", "i"), G("-1", "-1"), G("-i", "-i")}
        meet = circle_torsion_intersect(SlopeCircle("j", 1, 3), B7_H)
        assert meet.order == 4 and G("j", "-j") in meet
        meet = circle_torsion_intersect(SlopeCircle("i", 1, 2), Z4Z2)
        assert meet.elements == brute_force_intersection(SlopeCircle("i", 1, 2), Z4Z2)

    def test_point_and_contains(self):
        C = SlopeCircle("j", 3, 5)
        assert C.point(Fraction(1, 4)) == G("-j", "j")
        assert C.contains(C.point(Fraction(3, 8)))
        assert not C.contains(G("i", "i"))

    def test_zero_slopes_rejected(self):
        with pytest.raises(ValueError):
            SlopeCircle("i", 0, 0)

    def test_normalized(self):
        c = SlopeCircle(-I, 1, 2).normalized()
        assert c.axis == I and c.slopes == (1, 2)
        assert SlopeCircle("i", -1, -1).normalized().slopes == (1, 1)

    def test_catalog_intersections_match_brute_force(self):
        for entry in family_diagrams(9):
            d = entry.diagram
            for K_ in d.sides:
                if K_.is_circle:
                    meet = circle_torsion_intersect(K_.circle, d.H)
                    assert meet.elements == brute_force_intersection(K_.circle, d.H), entry.label
                    assert len(d.H) % len(meet) == 0


class TestLieAlgebra:
    def test_lie_lines(self):
        assert lie_line(SlopeCircle("i", 1, 1)) == [TangentLine.of(I, I)]
        assert lie_line(SlopeCircle("j", 3, 5)) == [TangentLine.of((0, 3, 0), (0, 5, 0))]
        assert lie_line(None) == [TangentLine.of(I, I), TangentLine.of(J, J), TangentLine.of(K, K)]

    def test_ad_conjugate(self):
        assert ad_conjugate(G("j", "1"), TangentLine.of(I, I)) == TangentLine.of(-I, I)
        g = G("e(i,1/8)", "e(i,1/8)")
        assert ad_conjugate(g, TangentLine.of(J, J)) == TangentLine.of(K, K)
        L = TangentLine.of((1, 2, 3), (0, 1, 0))
        assert ad_conjugate(G("1", "1"), L) == L

    @given(st.sampled_from(octahedral_rotations()), st.sampled_from(octahedral_rotations()))
    def test_ad_conjugate_matches_matrix_and_floats(self, x, y):
        g = GroupElement(x, y)
        L = TangentLine.of((1, -2, 3), (2, 0, -1))
        out = ad_conjugate(g, L)
        assert out == ad_conjugate((rotation_matrix(x), rotation_matrix(y)), L)
        v = float_mul(float_mul(as_float(x), np.array([0, 1, -2, 3.0])), as_float(x.conj()))
        assert np.allclose([float(c) for c in out.left], v[1:])

    def test_rank(self):
        assert rank_over_field([TangentLine.of(I, I)]) == 1
        assert rank_over_field(lie_line(None)) == 3
        assert rank_over_field([]) == 0

    def test_brackets(self):
        assert bracket(TangentLine.of(I, I), TangentLine.of(J, J)) == TangentLine.of((0, 0, 2), (0, 0, 2))
        assert bracket(TangentLine.of(I, (0, 0, 0)), TangentLine.of((0, 0, 0), J)) is None
        L1 = TangentLine.of((1, 0, 0), (2, 0, 0))
        L2 = TangentLine.of((0, 1, 0), (0, 3, 0))
        assert bracket(L1, L2) == TangentLine.of((0, 0, 2), (0, 0, 12))

    @given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
    def test_bracket_antisymmetric(self, a, b):
        L1, L2 = TangentLine.of(a[:3], a[3:]), TangentLine.of(b[:3], b[3:])
        b12, b21 = bracket(L1, L2), bracket(L2, L1)
        assert (b12 is None and b21 is None) or b12 == -b21

    @given(st.sampled_from(octahedral_rotations()), st.lists(st.integers(-2, 2), min_size=12, max_size=12))
    def test_conjugation_preserves_rank(self, x, v):
        lines = [TangentLine.of(v[:3], v[3:6]), TangentLine.of(v[6:9], v[9:])]
        g = GroupElement(x, x.conj())
        assert rank_over_field([ad_conjugate(g, L) for L in lines]) == rank_over_field(lines)

    def test_bracket_closure(self):
        assert bracket_closure_rank([TangentLine.of(I, I), TangentLine.of(J, J)]) == 3
        assert bracket_closure_rank([TangentLine.of(I, I), TangentLine.of((0, 1, 0), (0, 2, 0))]) == 6


class TestNormalizer:
    def test_components(self):
        assert normalizer_identity_component(QTYPE) == (None, None)
        assert normalizer_identity_component(Z4Z2) == (I, I)
        assert normalizer_identity_component(group(("-1", "1"))) == (True, True)

    def test_octahedral_group(self):
        rots = octahedral_rotations()
        assert len(rots) == 24
        assert len({rotation_matrix(x) for x in rots}) == 24
