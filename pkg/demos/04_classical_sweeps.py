"""Rank-uniform sweeps over the classical families.

The closed-form profiles:

* D_n, node 1:   m = (2, ..., 2, 1, 1), sum 2n-2
* SL(n), node c: m_d = min(d, c, n-c, n-d), sum c(n-c)
* C_n, node n:   m_d = d, sum n(n+1)/2
* D_n, node n:   m_d = d up to n-2, then the two spin orders split
                 n-1 = m_{n-1} + m_n by the parity of n

plus the two deliberate outliers, both minuscule:

* C_n at node 1 (projective space): the profile is all ones, so the
  sum n stays strictly below dim G/P = 2n-1; the canonical section
  simply does not vanish maximally there.
* B_n at node n (odd orthogonal spin): the last order is ceil(n/2),
  not n, so the sum falls short of dim G/P = n(n+1)/2 by floor(n/2).
  Entrywise the profile matches the even orthogonal model D_{n+1} at
  node n+1 after dropping the latter's next-to-last entry, which is
  exactly the missing amount.
"""

from weylpath import verify

print("D_n, node 1:")
for n in range(4, 10):
    rep = verify("D", n, omitted=1)
    print(f"  n={n}: {list(rep.m_profile)} sum {rep.sum_m} dim {rep.dim_gp} "
          f"identity {rep.identity}")

print()
print("Grassmannians SL(6)/P_c:")
for c in range(1, 6):
    rep = verify("A", 5, omitted=c)
    print(f"  c={c}: {list(rep.m_profile)} sum {rep.sum_m} dim {rep.dim_gp}")

print()
print("C_n node n, and D_n node n with its spin split:")
for n in range(4, 9):
    repC = verify("C", n, omitted=n)
    repD = verify("D", n, omitted=n)
    print(f"  n={n}: C {list(repC.m_profile)} sum {repC.sum_m}; "
          f"D {list(repD.m_profile)} sum {repD.sum_m}")

print()
print("The outliers:")
for n in range(2, 7):
    rep = verify("C", n, omitted=1)
    print(f"  C{n}/P1: {list(rep.m_profile)} sum {rep.sum_m} < dim {rep.dim_gp}")
for n in range(2, 7):
    repB = verify("B", n, omitted=n)
    repD = verify("D", n + 1, omitted=n + 1)
    print(f"  B{n}/P{n}: {list(repB.m_profile)} sum {repB.sum_m} < dim {repB.dim_gp}; "
          f"D{n+1} profile {list(repD.m_profile)}")
