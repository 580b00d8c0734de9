# coding: utf-8
# Which fundamental representations see only two weights of a Hodge coweight?
#
# Run with:  python demos/02_two_weight_table.py

# %%
from mtlift import (RootDatum, faithful_fundamental_requires_spin,
                    spin_three_weight_obstruction, two_weight_fundamentals)
from mtlift.twoweight import two_weight_table

# The table maps (family, rank, node) to the set of fundamental weights whose
# representation has exactly two weights under the node coweight.  For type A
# every node is listed; for B, C and D only the endpoints can carry a Hodge
# cocharacter.

table = two_weight_table(5)
for (fam, k, node), S in table.items():
    if k in (4, 5):
        print(f"{fam}{k} node {node}: {sorted(S)}")

# %%
# Spot checks.  The spin representation is the only choice for B_k, the
# standard one for C_k.  In type A the first node works with every s, while an
# inner node works only with the two ends.

print(two_weight_fundamentals(RootDatum("B", 4), 1))
print(two_weight_fundamentals(RootDatum("C", 4), 4))
print(two_weight_fundamentals(RootDatum("A", 5), 1), two_weight_fundamentals(RootDatum("A", 5), 3))

# %%
# With the Hodge node on the fork of D_k, neither half-spin representation is a
# two-weight representation once k >= 5.  At k = 4 one of them still is, which is
# why D_4 needs separate treatment.

for k in range(4, 10):
    print(k, spin_three_weight_obstruction(k)["min_distinct_values"])

# %%
# And a faithful representation of Spin(2k) built from fundamentals has to use a
# half-spin weight somewhere (checked over all subsets of nodes).

print([faithful_fundamental_requires_spin(k) for k in range(5, 10)])
