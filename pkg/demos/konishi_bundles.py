"""Circle slopes of the Konishi bundles over Hitchin's orbifolds.

The spin representation turns the SO(4) slopes into SO(3) x SO(3) slopes.
The antiselfdual bundle of H_k is covered twice by P_{(k+1)/2} or Q_{k/2};
only a few selfdual bundles land in the catalog.
"""

from cohomone.catalog import lookup
from cohomone.diagram import validate
from cohomone.hitchin import identify, konishi_slopes, subcover

print(" k   antiselfdual slopes       cover     selfdual")
for k in range(1, 11):
    ks = konishi_slopes(k)
    asd = identify(k, "antiselfdual")
    sd = identify(k, "selfdual")
    print(f"{k:2d}   {str(ks.antiselfdual):24s}  {asd.label:8s}  {sd.label or '-'}")

entry = lookup("Q_k", 2)
d = subcover(entry)
print(f"\nthe twofold quotient of {entry.label}: {d}")
print("fundamental group of order", validate(d).pi1_order)
