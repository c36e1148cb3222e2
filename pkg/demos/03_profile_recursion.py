"""Cylindric partitions: brute force versus the subset recursion.

A profile (c_0, c_1, c_2) constrains three partitions cyclically.  The
G-functions satisfy a recursion over subsets of the profile support; its
joint fixed point over all ten level-3 profiles reproduces brute-force
enumeration, and the x = 1 specializations recover the two partition
classes' product sides.
"""

from qpart.catalog import EULER_PRODUCT, PRODUCT_D123, PRODUCT_D1234
from qpart.cylindric import (
    cw_children,
    enumerate_cylindric,
    g_to_f,
    is_cylindric,
    profile_orbit,
    solve_cw_family,
)
from qpart.series import pochhammer_expand

print("row constraints: ((1), (), ()) fits profile (1,1,1):",
      is_cylindric(((1,), (), ()), (1, 1, 1)))
print("                 ((), (), (1)) fits profile (3,0,0):",
      is_cylindric(((), (), (1,)), (3, 0, 0)))

print("\nrecursion children of (1,1,1):")
for J, sign, deg, child in cw_children((1, 1, 1)):
    print(f"  J={J}: sign {sign:+d}, (xq;q)_{deg}, shift x->xq^{len(J)}, child {child}")

N = 14
fam = solve_cw_family((3, 0, 0), N)
print("\nfixed point vs enumeration over the", len(profile_orbit((3, 0, 0))), "profiles:")
for profile in ((3, 0, 0), (2, 1, 0), (1, 1, 1)):
    direct = enumerate_cylindric(profile, N - 1)
    print(f"  {profile}: {g_to_f(fam[profile]) == direct}")

print("\nspecialization at x = 1:")
euler = pochhammer_expand(EULER_PRODUCT, N)
lhs111 = g_to_f(fam[(1, 1, 1)]).eval_x1() * euler
lhs300 = g_to_f(fam[(3, 0, 0)]).eval_x1() * euler
print("  profile (1,1,1) gives the D1-D3 product:",
      lhs111 == pochhammer_expand(PRODUCT_D123, N))
print("  profile (3,0,0) gives the D1-D4 product:",
      lhs300 == pochhammer_expand(PRODUCT_D1234, N))
