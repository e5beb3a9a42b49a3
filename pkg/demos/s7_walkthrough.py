"""The seven-sphere as a cohomogeneity one manifold of S^3 x S^3.

Parse the diagram, check that it describes a simply connected manifold,
compute its Weyl group and run every curvature obstruction.  Then show
that a differently written diagram gives the same manifold.
"""

from cohomone import parse, run_pipeline, validate, weyl_group
from cohomone.equivalence import equivalent
from cohomone.topology import invariants

S7 = "K-=C(i,1,1)*H; K+=C(j,1,3)*H; H=gen{(i,i),(j,-j)}"

d = parse(S7)
print("diagram:", d)
print("H has", d.H.order, "elements:", ", ".join(g.literal() for g in d.H.sorted()))

rep = validate(d)
print(f"sphere fibres of dimension {rep.l_minus} and {rep.l_plus}, pi1 of order {rep.pi1_order}")
print(f"ineffective kernel of order {rep.effective_kernel_order}, so the effective group is {rep.effective_group}")

w = weyl_group(d)
print(f"Weyl group {w.type}: w- = {w.w_minus.literal()}, w+ = {w.w_plus.literal()}")

print()
print(run_pipeline(d).summary())

print()
print("topology:", invariants(d).summary())

# the same manifold with the two halves exchanged and written on other axes
other = parse("K-=C(j,3,1)*H; K+=C(i,1,1)*H; H=gen{(i,i),(-j,j)}")
res = equivalent(d, other)
print("\nequivalent to", other, "?", res.status)
print("moves:", ", ".join(str(m) for m in res.witness))
