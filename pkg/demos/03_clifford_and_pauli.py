"""Homogeneous Clifford gradings follow the p - m mod 8 rule; Pauli gradings give M_n(C)."""

from gradiv import center, clifford_graded, commutation_data, pauli_grading, underlying_type
from gradiv.errors import NotSimple

for total in range(0, 7):
    for p in range(total + 1):
        m = total - p
        R = clifford_graded((p, m))
        try:
            n, D = underlying_type(R)
            kind = f"M_{n}({D})"
        except NotSimple:
            # p - m = 3 mod 4: the center is R + R, so two simple summands
            kind = "not simple"
        print(f"Cgr({p},{m}): dim {R.dim:>3}  {kind:10}  p-m mod 8 = {(p - m) % 8}  center dim {center(R).dim}")

# clock and shift of size 3: commutation factor is a primitive cube root of unity
P = pauli_grading((3,))
cd = commutation_data(P)
s = cd.sigma[((1, 0), (0, 1))]
print("Pauli(3): real dim", P.dim, "sigma(a,b)^3 == 1:", s ** 3 == 1, "nonsingular:", cd.nonsingular)
