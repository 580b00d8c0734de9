# coding: utf-8
# Type D factors with the Hodge node on the fork, and their simply connected lifts.
#
# Run with:  python demos/04_fork_lift.py

# %%
from mtlift import abelianized_hodge, classify_D, dkh_lift, make_datum, normalize_hodge_nodes
from mtlift.datum import fork_field_degree
from mtlift.formats import load_datum
from mtlift.rootsys import fmt_q
from mtlift.selfcheck import FIXTURES

# Two D_6 components swapped by Galois, where the swap also exchanges the fork
# nodes on one side.  The Hodge nodes are 6 and 5, so the data is not yet in
# normal form.

f = make_datum("D", 6, "ab", [({"a": "b", "b": "a"}, {"a": {5: 6, 6: 5}})],
               hodge_nodes={"a": 6, "b": 5})
print(classify_D(f))

# %%
# Normalizing relabels the fork on each component so every Hodge node is 6.

g = normalize_hodge_nodes(f)
print(g.hodge_node)
print("[K:K0] =", fork_field_degree(g))

# %%
# The stabilizer of a component moves its fork, so this is the quadratic case.
# The lift splits the index set in two; half-integral blocks get a torus
# exponent of 1/2 on one line and -1/2 on its conjugate.

ld = dkh_lift(g)
print(ld.case_tag, ld.tori[0].base)
for b in ld.blocks:
    if not b.compact:
        tot = " ".join(fmt_q(v) for v in sorted({v for v, _ in b.total_weights}))
        print(f"{b.torus_line:8} w_{b.highest_weights[0]}  exp {fmt_q(b.torus_exponent):>4}  totals {tot}")

# %%
# For odd k the weights of the half-spin blocks live in 1/4 + Z or -1/4 + Z, and
# the torus shifts them back by a quarter.

(d5,) = load_datum(FIXTURES / "d5_dh.datum")
ld5 = dkh_lift(normalize_hodge_nodes(d5))
print(ld5.case_tag)
for line, x, conj, y in abelianized_hodge(ld5):
    print(f"{line}: {fmt_q(x)}   {conj}: {fmt_q(y)}")

# %%
# D_4 is decided by a search instead: the factor is of fork type when no
# Galois-stable set of two endpoints per component avoids the Hodge nodes.

(tri,) = load_datum(FIXTURES / "d4_triality.datum")
v = classify_D(tri)
print(v.subtype, v.note)
