"""Cohomology of the two infinite families from their Mayer-Vietoris matrices.

The P family is 2-connected with pi_3 = Z_k; the Q family has H^4 = Z_{2k+1}.
Both come out of a 2x2 integer Smith normal form.
"""

from cohomone.catalog import lookup
from cohomone.topology import invariants, smith_normal_form

print(" k   P_k slopes        matrix                 pi3      Q_k slopes    H4")
for k in range(1, 9):
    p = invariants(lookup("P_k", k).diagram)
    q = invariants(lookup("Q_k", k).diagram)
    print(f"{k:2d}   {str(p.slopes):16s}  {str(p.matrix):22s} {p.pi3:8s} {str(q.slopes):13s} {q.H4}")

r = invariants(lookup("R").diagram)
print("\nthe exceptional R:", r.summary())

A = r.matrix
snf = smith_normal_form(A)
print(f"U A V = diag({snf.d1}, {snf.d2}) with U = {snf.U}, V = {snf.V}")
