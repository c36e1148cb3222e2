"""Two-colored partition classes and their product sides.

Parts carry a magnitude and a color ('+' or '-'), ordered
... > 3 > 3- > 2 > 2- > 1 > 1-.  Two classes are studied: the partitions
satisfying the difference conditions D1-D3, and the subclass also
satisfying D4.  Both have infinite-product generating functions, checked
here coefficient by coefficient.
"""

from qpart.catalog import PRODUCT_D123, PRODUCT_D1234
from qpart.colored import (
    COND_D123,
    COND_D1234,
    check_condition,
    enumerate_2colored,
    gen_fun,
    size,
    violates_forbidden_patterns,
)
from qpart.series import pochhammer_expand

N = 20

print("smallest members of the D1-D3 class:")
for lam in enumerate_2colored(4, COND_D123):
    print("  ", lam if lam else "(empty)")

print("\nthe same class described by forbidden windows:")
probe = ((5, "+"), (3, "+"), (3, "-"))
print("  ", probe, "violates a window:", violates_forbidden_patterns(probe))
print("  ", probe, "fails D1-D3:      ", not check_condition(probe, COND_D123))

f_d123 = gen_fun(enumerate_2colored(N - 1, COND_D123), N)
f_d1234 = gen_fun(enumerate_2colored(N - 1, COND_D1234), N)
print("\ncounting by size (x = 1):")
print("  D1-D3:", f_d123.eval_x1().coeffs[:10])
print("  D1-D4:", f_d1234.eval_x1().coeffs[:10])

print("\nproduct sides match:")
print("  (q^2,q^4;q^6)/(q,q,q^3,q^3,q^5,q^5;q^6):",
      f_d123.eval_x1() == pochhammer_expand(PRODUCT_D123, N))
print("  1/(q^2,q^3,q^3,q^4;q^6):               ",
      f_d1234.eval_x1() == pochhammer_expand(PRODUCT_D1234, N))

print("\nbigraded coefficients [x^len q^size] around q^6:")
for m in range(1, 4):
    print(f"  x^{m}:", [f_d1234.coeff(m, i) for i in range(8)])
