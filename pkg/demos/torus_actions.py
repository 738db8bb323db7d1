"""
Torus actions and residue classes
=================================

A one-dimensional torus acting on K[y_1..y_n] with weights w_i.  Two routes
to the universal denominator: the subset/lattice algorithm, and the
residue-class count that only works for a single weight row.
"""

from udenom.torus import (
    WeightSystem,
    rank1_evidence,
    torus_udenom_general,
    torus_udenom_rank1,
)

weights = [-3, -2, 2, 5, 6]

# the general algorithm walks every subset whose weights surround 0
print(torus_udenom_general(WeightSystem.rank_one(weights)))

# the residue-class formula agrees
print(torus_udenom_rank1(weights))

# per-order evidence: which classes a + dZ hold weights of both signs
for row in rank1_evidence(weights):
    print(row.format())

# two torus coordinates, bigraded: y1 has weight 1 and degree (1,0),
# y2 has weight -1 and degree (0,1); the only invariant is y1*y2
ws = WeightSystem([(1,), (-1,)], [(1, 0), (0, 1)])
print(torus_udenom_general(ws))
