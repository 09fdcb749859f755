"""Base polytope geometry versus the combinatorial flacet description.

A proper flat F of a connected matroid should cut out a facet of the base
polytope exactly when M|F and M/F are both connected.  All arithmetic here
is over the integers.
"""

from splitmat import catalog, crosscheck_flacets, flat_face_dim, polytope_dim
from splitmat.core import flats, format_set, is_connected
from splitmat.enumeration import catalog_members

mw2 = catalog("MW2")
print("dim P(M(W2)) =", polytope_dim(mw2))
for f in flats(mw2):
    print(f"  face of flat {{{format_set(f)}}}: dim {flat_face_dim(mw2, f)}")
print(crosscheck_flacets(mw2).to_text())

# Sweep every connected matroid on up to six elements.
total = agree = 0
for n in range(1, 7):
    for m in catalog_members(n):
        if is_connected(m):
            total += 1
            agree += crosscheck_flacets(m).agree
print(f"{agree}/{total} connected matroids agree")
