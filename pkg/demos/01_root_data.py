# coding: utf-8
# Root data, weights and the pairings everything else is built on.
#
# Run with:  python demos/01_root_data.py

# %%
from fractions import Fraction

from mtlift import (RootDatum, centre, fundamental_coweight, fundamental_weight, irrep_weights,
                    pairing_values, simple_roots, weyl_orbit)
from mtlift.rootsys import fmt_q

# A root datum is just a family letter and a rank.  Coordinates are the usual
# epsilon coordinates, stored as exact fractions.

D5 = RootDatum("D", 5)
for a in simple_roots(D5):
    print(" ".join(fmt_q(x) for x in a))

# %%
# Fundamental weights come from closed forms; the last two nodes of D_k are the
# half-spin weights.

for s in D5.nodes:
    print(s, [fmt_q(x) for x in fundamental_weight(D5, s)])

# %%
# The orbit of a minuscule weight under the Weyl group is the full weight set of
# its representation.  For the half-spin weight of D_5 that is 16 sign vectors
# with an even number of minus signs.

orbit = weyl_orbit(D5, fundamental_weight(D5, 5))
print(len(orbit))
print(sorted(orbit)[:3])

# %%
# Pairing those weights with the coweight of node 5 gives the values a Hodge
# cocharacter sitting at that node would see.  Three values, so this is not a
# two-weight situation.

vals = pairing_values(irrep_weights(D5, 5), fundamental_coweight(D5, 5))
for v in sorted(vals, reverse=True):
    print(f"{fmt_q(v):>5}  x{vals[v]}")

# %%
# The vector representation against the tail coweight is the familiar case:
# weights 1, 0 and -1.

print(dict(pairing_values(irrep_weights(D5, 1), fundamental_coweight(D5, 1))))

# %%
# Centres.  P/Q is Z/4 for odd k and Z/2 x Z/2 for even k; the class of each
# fundamental weight is recorded as a character of that group.

for k in (4, 5, 6, 7):
    Z = centre(RootDatum("D", k))
    print(f"D{k}: {Z}, classes {Z.char_of_fundamental}")

assert sum(irrep_weights(D5, 5).values()) == 16
assert set(vals) == {Fraction(5, 4), Fraction(1, 4), Fraction(-3, 4)}
