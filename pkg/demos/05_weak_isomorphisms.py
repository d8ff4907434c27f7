"""Explicit weak isomorphisms, and a brute-force search for monomial ones."""

from gradiv import building_block, builtin_equivalences, clifford_graded, search_monomial_iso, verify_graded_map
from gradiv import tensor_product

for eq in builtin_equivalences():
    rep = verify_graded_map(eq.source, eq.target, eq.map)
    print(f"{eq.name}: {rep}  alpha on generators {eq.map.alpha.images}")

A, B = clifford_graded((1, 1)), clifford_graded((0, 2))
f = search_monomial_iso(A, B)
print("Cgr(1,1) -> Cgr(0,2) found:", f is not None, "alpha", f.alpha.images)

H4, M = building_block("H4"), building_block("M2_4")
print("H4 -> M2_4 found:", search_monomial_iso(H4, M) is not None)
f = search_monomial_iso(tensor_product(H4, H4), tensor_product(M, M), jobs=2)
print("H4 (x) H4 -> M2_4 (x) M2_4 found:", f is not None)
