"""Minors with witnesses, isomorphism, and duality among S0-S4."""

from splitmat import apply_witness, catalog, dual, has_minor, is_isomorphic, verify_excluded_minor

s3, mw2 = catalog("S3"), catalog("MW2")

# has_minor returns which elements to contract and delete, plus a relabelling
# that turns the minor into the target exactly (not just up to isomorphism).
w = has_minor(s3, mw2)
print(w.to_text())
print("rebuilt exactly:", apply_witness(s3, w) == mw2)

# S1 and S2 are dual to each other; S3, S4 and M(W2) are self-dual.
print("S1* ~ S2:", is_isomorphic(dual(catalog("S1")), catalog("S2")))
for name in ("S3", "S4", "MW2"):
    m = catalog(name)
    print(f"{name} self-dual:", is_isomorphic(m, dual(m)))

# Each Si is non-split while every single-element deletion and contraction is.
for name in ("S0", "S1", "S2", "S3", "S4"):
    print(name, "excluded minor:", verify_excluded_minor(catalog(name)))
