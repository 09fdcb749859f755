"""Enumerate small matroids and check the excluded-minor theorem on them.

Raise MAX_N to 8 for the full check (about a minute on one core).
"""

from splitmat import catalog_shards, verify_theorem

MAX_N = 7

for n in range(1, MAX_N + 1):
    sizes = [len(s) for s in catalog_shards(n)]
    print(f"n={n}: {sum(sizes):5d} matroids, by rank {sizes}")

report = verify_theorem(MAX_N)
print(report.to_text().splitlines()[-1])

# How often each excluded minor is the first obstruction found
for name, found in sorted(report.obstructions.items()):
    print(f"  first obstruction {name}: {len(found)} matroids")
