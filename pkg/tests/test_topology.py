from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from cohomone import parse
from cohomone.catalog import lookup
from cohomone.errors import FamilyMismatch, NonIntegralEntry
from cohomone.topology import (
    det2,
    family_invariants,
    family_slopes,
    invariants,
    mv_matrix_N,
    mv_matrix_P,
    smith_normal_form,
)

from conftest import B7, R

ODD = [x for x in range(-25, 26) if x % 2]
entries = st.integers(-10**6, 10**6)
matrices = st.tuples(st.tuples(entries, entries), st.tuples(entries, entries))


def oracle_diagonal(A):
    D = sympy_snf(Matrix(A), domain=ZZ)
    return sorted(abs(int(D[i, i])) for i in range(2))


class TestMatrices:
    def test_p_examples(self):
        assert mv_matrix_P(1, 1, 1, 3) == ((1, -5), (0, 1))
        # the (2,2) entry is -(9-25)/8 = +2
        assert mv_matrix_P(1, 1, 3, 5) == ((1, -17), (0, 2))
        assert abs(det2(mv_matrix_P(3, 1, 1, 3))) == 10

    def test_p_closed_form_identity(self):
        pairs = [(p, q) for p in ODD for q in ODD if gcd(p, q) == 1 and p > 0]
        for pm, qm in pairs[::3]:
            for pp, qp in pairs[::5]:
                det = det2(mv_matrix_P(pm, qm, pp, qp))
                assert 8 * det == pm**2 * qp**2 - pp**2 * qm**2

    def test_n_closed_form_identity(self):
        for pm in range(1, 12, 2):
            for qm in range(-11, 12, 2):
                for pp in range(-10, 11, 2):
                    for qp in range(1, 12, 2):
                        if gcd(pm, qm) == 1 and gcd(pp, qp) == 1:
                            assert det2(mv_matrix_N(pm, qm, pp, qp)) == pm**2 * qp**2 - pp**2 * qm**2

    @pytest.mark.parametrize("slopes", [(1, 1, 1, 2), (2, 1, 1, 3), (1, 1, 3, 9)])
    def test_parity_contract(self, slopes):
        with pytest.raises(NonIntegralEntry):
            mv_matrix_P(*slopes)

    def test_n_parity_contract(self):
        with pytest.raises(NonIntegralEntry):
            mv_matrix_N(1, 1, 1, 2)


class TestSNF:
    @pytest.mark.parametrize(
        "A,diag",
        [
            (((2, 0), (0, 3)), (1, 6)),
            (((1, -5), (0, 1)), (1, 1)),
            (((2, 0), (0, 0)), (2, 0)),
            (((0, 0), (0, 0)), (0, 0)),
            (((0, 4), (6, 0)), (2, 12)),
        ],
    )
    def test_examples(self, A, diag):
        res = smith_normal_form(A)
        assert (res.d1, res.d2) == diag
        assert res.verify(A)

    @given(matrices)
    def test_matches_sympy(self, A):
        res = smith_normal_form(A)
        assert res.verify(A)
        assert res.d2 % res.d1 == 0 if res.d1 else res.d2 == 0
        assert sorted((res.d1, res.d2)) == oracle_diagonal(A)


class TestFamilyCohomology:
    @pytest.mark.parametrize("k", range(1, 21))
    def test_pi3_of_p(self, k):
        inv = invariants(lookup("P_k", k).diagram)
        assert inv.family == "P" and inv.two_connected
        assert inv.det_abs == k and inv.snf == (1, k)

    @pytest.mark.parametrize("k", range(1, 21))
    def test_h4_of_q(self, k):
        inv = invariants(lookup("Q_k", k).diagram)
        assert inv.family == "N" and inv.H2 == "Z" and inv.H3 == "0"
        assert inv.H4 == f"Z_{2 * k + 1}"

    def test_r(self):
        assert invariants(parse(R)).H4 == "Z_35"

    def test_s7_and_b7(self, s7):
        assert invariants(s7).pi3 == "0"
        assert invariants(parse(B7)).pi3 == "Z_10"

    def test_degenerate(self):
        inv = family_invariants("P", 1, 1, 1, 1)
        assert inv.det == 0 and (inv.H3, inv.H4, inv.pi3) == ("Z", "Z", "Z")
        # pm qp is odd and pp qm even, so the N determinant never vanishes
        with pytest.raises(NonIntegralEntry):
            family_invariants("N", 1, 1, 2, 2)

    def test_equivalence_invariance(self):
        d = lookup("P_k", 3).diagram
        for moved in (d.swap_k(), d.swap_factors()):
            assert invariants(moved).det_abs == invariants(d).det_abs


class TestFamilies:
    def test_q_convention(self, q1):
        assert family_slopes(q1) == ("N", (1, 1, 2, 1))

    def test_mismatch(self, e1):
        with pytest.raises(FamilyMismatch):
            family_slopes(e1)
        with pytest.raises(FamilyMismatch):
            family_invariants("X", 1, 1, 1, 3)

    def test_json(self, s7):
        data = invariants(s7).to_json()
        assert data["family"] == "P" and data["snf"] == [1, 1]
