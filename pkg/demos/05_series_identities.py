"""Exact series arithmetic: products, filtrations, and identity checks.

Every generating function is expanded with exact integer coefficients, each
identity's two sides are built by independent routes, and the verifier
compares them coefficient by coefficient.
"""

from butterflyseq import (
    div_exact,
    expand_product,
    filtered_series,
    filtration_term,
    named_sequence,
    theta_triangular,
    verify_all,
    verify_identity,
)

N = 40
d = expand_product("distinct", N)
q = named_sequence("q", N)
print("product over (1+x^n) reproduces the strict counts:",
      all(d[n] == q[n] for n in range(N + 1)))

bf = filtered_series("butterfly_parts", N)
print("butterfly filtration coefficients 9..18:", [bf[n] for n in range(9, 19)])
print("its k=3 term at 15 (only 6+5+4):", filtration_term("butterfly", 3, N)[15])

quot = div_exact(expand_product("odd_reciprocal", N, 5), (1, 1, 1))
s = named_sequence("s", N)
print("odd-ge-5 product divided by 1+x+x^2 gives the butterfly series:",
      all(quot[n] == s[n] for n in range(N + 1)))

print()
print("the double product (1+x^m)(1-x^{2m}) collapses to triangular powers:")
print("  ", expand_product("double", 21).coeffs)
print("  ", theta_triangular(21).coeffs)

print()
print("all registered identities at order 60:")
for report in verify_all(60):
    print(" ", report)

print()
print("a deliberately mis-indexed reading, for contrast:")
print(" ", verify_identity("butterfly-filtration-printed", 30))
