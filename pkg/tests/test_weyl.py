from fractions import Fraction

import pytest

from cohomone import parse
from cohomone.catalog import family_diagrams, lookup
from cohomone.equivalence import Move, canonical_form
from cohomone.errors import NoRepresentative, OrderExceedsCap
from cohomone.diagram import IsotropySubgroup
from cohomone.groups import FiniteSubgroup
from cohomone.qfield import GroupElement, J, exp_axis
from cohomone.weyl import weyl_group, weyl_representative, weyl_words

from conftest import B7

G = GroupElement.of


def check_involution(w, K, H):
    assert w not in H
    assert (w * w) in H
    assert H.is_normalized_by(w)
    assert K.contains(w)


class TestRepresentative:
    def test_p_family_minus(self):
        d = lookup("P_k", 3).diagram
        assert weyl_representative(d.Kminus, d.H) == G("e(i,1/8)", "e(i,1/8)")

    @pytest.mark.parametrize("k", range(1, 7))
    def test_p_family_plus(self, k):
        d = lookup("P_k", k).diagram
        w = weyl_representative(d.Kplus, d.H)
        expected = GroupElement(exp_axis(J, Fraction(2 * k - 1, 8) % 1), exp_axis(J, Fraction(2 * k + 1, 8) % 1))
        assert w == expected

    def test_diagonal(self, e1):
        assert weyl_representative(e1.Kminus, e1.H) == G("-1", "-1")

    def test_finite_isotropy(self):
        H = FiniteSubgroup.generated_by(("-1", "1"))
        with pytest.raises(NoRepresentative):
            weyl_representative(IsotropySubgroup.finite(H), H)


class TestWeylGroup:
    def test_s7(self, s7):
        w = weyl_group(s7)
        assert w.type == "D6" and w.order == 12

    def test_b7(self):
        assert weyl_group(parse(B7)).type == "D3"

    @pytest.mark.parametrize("k", range(1, 11))
    def test_q_family(self, k):
        assert weyl_group(lookup("Q_k", k).diagram).type == "D4"

    @pytest.mark.parametrize("k", range(1, 21))
    def test_p_parity(self, k):
        assert weyl_group(lookup("P_k", k).diagram).type == ("D3" if k % 2 == 0 else "D6")

    def test_e_family(self):
        assert weyl_group(lookup("E_p", 1).diagram).type == "D2"

    def test_cap(self, s7):
        with pytest.raises(OrderExceedsCap):
            weyl_group(s7, cap=5)
        with pytest.raises(ValueError):
            weyl_group(s7, cap=0)

    def test_minimal_power(self, s7):
        w = weyl_group(s7)
        g = w.w_minus * w.w_plus
        x = g
        for _ in range(w.half_order - 1):
            assert x not in s7.H
            x = x * g
        assert x in s7.H
        assert w.word_log == tuple(range(1, 7))

    def test_words_cover_dihedral_group(self, s7):
        w = weyl_group(s7)
        cosets = {frozenset(x * h for h in s7.H.elements) for x in weyl_words(w)}
        assert len(cosets) == w.order

    def test_json(self, s7):
        data = weyl_group(s7).to_json()
        assert data["type"] == "D6" and data["order"] == 12


@pytest.mark.parametrize("entry", family_diagrams(9), ids=lambda e: e.label)
def test_invariants_and_move_invariance(entry):
    d = entry.diagram
    w = weyl_group(d)
    check_involution(w.w_minus, d.Kminus, d.H)
    check_involution(w.w_plus, d.Kplus, d.H)
    assert w.type == entry.expected_weyl()
    for moved in (d.swap_k(), d.swap_factors(), canonical_form(d), Move("conjugate", G("e(k,1/8)", "e(k,1/8)")).apply(d)):
        assert weyl_group(moved).type == w.type
