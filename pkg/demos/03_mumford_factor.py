# coding: utf-8
# Three copies of SL_2 permuted cyclically by Galois.
#
# Run with:  python demos/03_mumford_factor.py

# %%
from mtlift import RootDatum, is_essentially_unliftable, unliftable_lift, validate
from mtlift.formats import load_datum
from mtlift.isogeny import cover_from_kernel, simply_connected_cover
from mtlift.selfcheck import FIXTURES

(f,) = load_datum(FIXTURES / "mumford.datum")
print(f.I, f.hodge_node)
print("violations:", validate(f))

# %%
# The group that arises from this datum has derived group SL_2^3 modulo a
# subgroup of the centre (Z/2)^3: the elements whose three signs multiply to 1.
# That kernel is nontrivial, so the factor is not essentially unliftable in its
# original form.

A1 = RootDatum("A", 1)
signs = [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
quotient = cover_from_kernel(A1, [tuple((x,) for x in z) for z in signs], components=3)
print(quotient.label, quotient.kernel_order)
print(is_essentially_unliftable([f], [quotient]))

# %%
# Replacing the derived group by SL_2^3 itself gives the unliftable form.

print(is_essentially_unliftable([f], [simply_connected_cover(A1, 3)]))

# %%
# The lift construction produces exactly that cover.  Each block is the
# standard representation of one SL_2, whose weights are already +-1/2, so no
# central twist is needed; the torus lines bring the totals to 0 and 1.

ld = unliftable_lift([f])
print(ld.covers[0].label)
for b in ld.blocks[:2]:
    print(b.index, b.cochar_weights, b.central_exponent, b.torus_exponent, b.total_weights)
print(ld.flags)
