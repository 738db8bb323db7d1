"""
Finite groups: lcm of characteristic polynomials
================================================

For a finite group acting linearly, the universal denominator is the lcm of
det(1 - t g) over the group.  Molien's formula gives the actual Hilbert
series, which lets us see how much of the universal denominator survives.
"""

from udenom.cyclo import factored_div, series_expand
from udenom.molien import (
    GroupFamily,
    PermutationGroup,
    alt_denom_closed,
    group_elements,
    molien_series,
    udenom_finite,
)

# Symmetric group on 5 letters: the invariants form a polynomial ring,
# so both denominators coincide with (1-t)(1-t^2)...(1-t^5)
s5 = GroupFamily("symmetric", 5)
pairs, size = group_elements(s5)
print("S_5 udenom  ", udenom_finite(s5))
print("S_5 Molien  ", molien_series(pairs, size))

# The alternating group on 10 letters is different: the reduced Hilbert
# series loses one factor phi_6 compared with the universal denominator
a10 = GroupFamily("alternating", 10)
pairs, size = group_elements(a10)
u = udenom_finite(a10)
h = molien_series(pairs, size)
print("A_10 udenom ", u)
print("A_10 denom  ", h.denominator)
print("closed form ", alt_denom_closed(10))
print("gap         ", factored_div(u, h.denominator))

# Any permutation group given by generators (0-based images here)
d4 = PermutationGroup(4, ((1, 2, 3, 0), (3, 2, 1, 0)))
pairs, size = group_elements(d4)
print("D_4 order", size, "udenom", udenom_finite(d4))
print("first invariant dimensions", series_expand(molien_series(pairs, size), 10))
