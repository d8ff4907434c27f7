"""The thirteen building blocks: each is checked to be a graded division algebra."""

from gradiv import building_block, check_division_grading, identity_component, underlying_type, validate
from gradiv.labels import BLOCKS

print(f"{'block':12} {'dim':>4} {'group':>8} {'R_e':>4}  M_n(D)")
for name in BLOCKS:
    R = building_block(name)
    assert validate(R)
    rep = check_division_grading(R)
    n, D = underlying_type(R)
    print(f"{name:12} {R.dim:>4} {str(R.group):>8} {rep.re_type:>4}  M_{n}({D})")

# M2_2 keeps I and C = AB in the identity component, a copy of C
M22 = building_block("M2_2")
print("M2_2 identity component dim:", identity_component(M22).dim)
