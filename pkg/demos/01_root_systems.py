"""Tour of the exact root-system layer.

Builds a few systems, checks the classical positive-root counts, and
shows the exact pairing and base-change machinery that everything else
is built on.  All numbers printed here are exact integers or exact
rationals; there is no floating point anywhere in the package.
"""

from fractions import Fraction

from weylpath import build
from weylpath.rootsystem import eps_from_root_coords

print("=" * 64)
print("Root systems in Bourbaki numbering")
print("=" * 64)

for label in ("A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"):
    rs = build(label)
    print(f"{label:>3}: {rs.num_positive_roots:3d} positive roots, "
          f"symmetrizers {rs.sym}")

print()
print("Cartan matrix of B3 (rows i, columns j, entry <alpha_j, alpha_i^vee>):")
for row in build("B3").cartan:
    print("   ", row)

print()
print("Highest root of E6 and its pairings with the fundamental weights:")
rs = build("E6")
theta = max(rs.positive_roots, key=sum)
print("  theta =", theta, "(simple-root coordinates)")
print("  as a weight:", rs.from_root_basis(theta))
for d in range(1, 7):
    print(f"  <omega_{d}, theta^vee> =", rs.pairing(rs.fundamental_weight(d), theta))

print()
print("Fundamental weights of E7 in the root basis (all exact):")
rs7 = build("E7")
for d in (1, 7):
    coords = rs7.to_root_basis(rs7.fundamental_weight(d))
    print(f"  omega_{d} =", tuple(str(Fraction(x)) for x in coords))

print()
print("Classical epsilon coordinates (type D6):")
rsD = build("D6")
for c in (rsD.simple_root(6), (1, 1, 1, 1, 0, 1)):
    print(f"  root {c} -> eps {eps_from_root_coords(rsD.rst, c)}")
