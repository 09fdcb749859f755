"""Recognising split matroids.

A connected matroid fails to be split exactly when some proper cyclic flat Z
has M|Z and M/Z connected with at least one of them non-uniform.  Run with
``python demos/01_split_check.py``.
"""

from splitmat import catalog, cyclic_flats, is_split, validate
from splitmat.core import format_set

# M(W2): a triangle with one doubled edge.  Elements 2 and 3 are parallel.
mw2 = validate(4, 2, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
print("cyclic flats of M(W2):", [format_set(z) or "{}" for z in cyclic_flats(mw2)])
print(is_split(mw2).to_text())

# Its only proper cyclic flat is the parallel pair, and both sides are
# uniform, so M(W2) is split.  The excluded minors are not:
for name in ("S1", "S2", "S3", "S4"):
    print(f"\n{name}")
    print(is_split(catalog(name)).to_text())

# S0 is disconnected.  Each component is split, but two are non-uniform.
print("\nS0")
print(is_split(catalog("S0")).to_text())
