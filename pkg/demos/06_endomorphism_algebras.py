"""Graded-simple algebras End_D(U) from a division algebra D and multiplicities kappa."""

from gradiv import AbelianGroup, DimensionFunction, GroupHom, PairSpec, building_block, endo_algebra
from gradiv import identity_component, pairs_equivalent, underlying_type, validate
from gradiv.galgebra import regrade

# put C2 inside Z2 x Z3 so that kappa lives on three cosets
C2 = building_block("C2")
G = AbelianGroup((2, 3))
D = regrade(C2, GroupHom(C2.group, G, ((1, 0),)), "C2 in Z2xZ3")
kappa = {(0, 0): 2, (0, 1): 1}
M = endo_algebra(DimensionFunction(D, kappa))
print(M.name, "dim", M.dim, "valid", bool(validate(M)), "type", underlying_type(M))
print("identity component dim", len(M.components[G.identity]),
      "= dim D_e * sum kappa^2 =", identity_component(D).dim * sum(c * c for c in kappa.values()))

# shifting kappa by a group element gives an equivalent pair
shifted = {(0, 2): 2, (0, 0): 1}
res = pairs_equivalent(PairSpec(D, kappa), PairSpec(D, shifted))
print("shifted pair equivalent:", bool(res), "shift", res.shift)
print("kappa (1, 2) vs (1, 1):", bool(pairs_equivalent(PairSpec(D, kappa), PairSpec(D, {(0, 0): 1, (0, 1): 1}))))
