"""Exact cyclotomic scalars and small abelian groups, the two ground layers."""

from gradiv import AbelianGroup, Scalar, enumerate_automorphisms, group_profile, quotient_by, real_sign

# Q(zeta_8) holds omega, i and sqrt(2) exactly
w = Scalar.omega()
print("omega^2 == i:", w * w == Scalar.i())
print("sqrt2^2 =", Scalar.sqrt2() ** 2)
print("sign of 1 - sqrt2:", real_sign(1 - Scalar.sqrt2()))

# mixing conductors lands in the lcm field
eps = Scalar.root_of_unity(3, 1, 24)
print("eps^3 == 1:", eps ** 3 == 1, "conductor", (eps * w).conductor)

# groups are products of cyclic factors; quotients come out in invariant-factor form
G = AbelianGroup((4, 2, 2, 2))
Q, proj = quotient_by(G, [(0, 0, 1, 0)])
print(f"{G} / <gamma> = {Q}, profile {group_profile(Q)}")
print("|Aut(Z2 x Z2 x Z2)| =", sum(1 for _ in enumerate_automorphisms(AbelianGroup((2, 2, 2)))))
