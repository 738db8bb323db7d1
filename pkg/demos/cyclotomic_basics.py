"""
Cyclotomic factors and rational functions
=========================================

Everything is kept as products of cyclotomic polynomials, normalized so
that phi_k(0) = 1.
"""

from udenom.cyclo import (
    RationalFn,
    SparsePoly,
    cyclo_expand,
    factor_one_minus,
    factored_lcm,
    reduce_rational,
    series_expand,
)

# phi_1 = 1 - t, and phi_6 has the familiar coefficients
print(cyclo_expand(1))
print(cyclo_expand(6))

# 1 - t^12 splits into one factor per divisor of 12
f = factor_one_minus(12)
print(f, "=", f.expand())

# a degree vector (4, 2) in two variables: 1 - t1^4 t2^2 = phi_(2,1) phi_(4,2)
print(factor_one_minus((4, 2)))

# lcm works exponentwise on the factored form
print(factored_lcm(factor_one_minus(4), factor_one_minus(6)))

# (1 + t) / (1 - t^2) cancels down to 1 / (1 - t)
h = reduce_rational(SparsePoly.from_coeffs([1, 1]), factor_one_minus(2))
print(h)

# power series of 1 / (1 - t^3)
print(series_expand(RationalFn(SparsePoly.constant(1), factor_one_minus(3)), 8))
