"""
SL2 on binary forms
===================

The maximal torus of SL2 acts on forms of degree n with weights
-n, -n+2, ..., n.  Correcting the exponents of phi_1 and phi_2 gives the
universal denominator for SL2 itself, which matches the three closed forms
by residue of n.
"""

from udenom.binary_forms import (
    BinaryFormsCase,
    dixmier_closed,
    sl2_udenom_via_torus,
    torus_udenom,
)
from udenom.cli import factored_text

for n in range(3, 13):
    pipeline = sl2_udenom_via_torus(n)
    closed = dixmier_closed(n)
    print(f"n={n:2d} ({BinaryFormsCase(n).residue:8s}) agree={pipeline == closed}  {factored_text(pipeline)}")

# the torus alone sees more factors
print(torus_udenom(6), "vs", sl2_udenom_via_torus(6))
