"""Build every catalog type, read off its invariants and classify it back."""

import time

from gradiv import catalog, catalog_labels, classify, invariant_vector

start = time.perf_counter()
for L in catalog_labels(max_k=2, pauli=((2,), (3,), (2, 2))):
    R = catalog(L)
    inv = invariant_vector(R)
    got = classify(R)
    flag = "" if got == L else "  <-- mismatch"
    print(f"{str(L):18} dim {inv.dim:>4}  M_{inv.n}({inv.D})  R_e={inv.re_type}  exp {inv.exponent}"
          f"  center in e: {inv.center_support_trivial!s:5}  -> {got}{flag}")
print(f"done in {time.perf_counter() - start:.1f} s")
