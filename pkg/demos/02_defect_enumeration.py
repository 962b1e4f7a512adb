"""
Defect enumeration walkthrough
==============================

Insertable sites inside a D-triangle, and counts of admissible inserted
pairs/triples/quadruples for each sublattice class.
"""

from hct import (
    Sublattice,
    count_defects,
    enumerate_pair_defects,
    insertable_sites_in_triangle,
    pairable_insertable_sites,
)

# the two classes at n=49 each have 12 insertable sites in one triangle
for a, b in [(7, 0), (5, 3)]:
    sites = insertable_sites_in_triangle((0, 0), (a, b))
    print((a, b), len(sites), "insertable sites:", sites)

# pairs / triples / quadruples across the stacked triangles
for a, b in [(7, 0), (5, 3), (13, 0), (8, 7), (11, 2), (7, 7)]:
    d = count_defects(Sublattice(a, b))
    print((a, b), "pairs", d.pairs, "triples", d.triples, "quadruples", d.quadruples)

# sites with at least one admissible partner in the opposite stack; their
# square is the nominal pair count before cross-stack admissibility
for a, b in [(8, 7), (13, 0), (11, 2), (7, 7)]:
    pa, pb = pairable_insertable_sites(Sublattice(a, b))
    print((a, b), "pairable", len(pa), "nominal pairs", len(pa) * len(pb))

# the six admissible pairs of the (5,3) class, listed explicitly
for p, q in enumerate_pair_defects(Sublattice(5, 3)):
    print("pair", p, q)
