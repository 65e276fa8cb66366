"""Toric Weyl arrangements and the braid family.

Builds the named families, checks unimodularity, and finds
deletion-restriction orderings.  Type-A Weyl arrangements are the essential
versions of the toric braid arrangements: same intersection poset, and the
braid Poincare polynomial carries one extra (1+t) factor for the central
torus direction.
"""

from toricarr import braid, build_poset, dcp_poincare, find_dr_ordering, is_unimodular, serialize, weyl
from toricarr.polynomial import Polynomial

for family, rank in [("A", 2), ("B", 2), ("C", 2), ("G2", 2), ("A", 3), ("D", 4)]:
    arr = weyl(family, rank)
    report = find_dr_ordering(arr) if arr.n <= 12 else None
    label = family if family == "G2" else f"{family}{rank}"
    print(f"type {label}: {arr.n} positive roots, "
          f"unimodular={is_unimodular(arr)}, "
          f"poincare={dcp_poincare(arr)}"
          + (f", dr ordering found={report.ordering is not None}" if report else ""))
print()

print("the B2 arrangement as a file:")
print(serialize(weyl("B", 2)))

print("braid(3) versus weyl(A, 2):")
b3, a2 = braid(3), weyl("A", 2)
print("  layer sizes:", build_poset(b3).layer_sizes(), "vs",
      build_poset(a2).layer_sizes())
pb, pa = dcp_poincare(b3), dcp_poincare(a2)
print("  poincare  :", pb, "vs", pa)
print("  and indeed (1+t) * the latter =", Polynomial((1, 1)) * pa)
