"""
Dominance scan walkthrough
==========================

For every Case3 diameter up to a bound, count admissible inserted pairs per
sublattice class and check whether a single class dominates, and whether the
cheap geometric heuristic picks the same class.
"""

import io

from hct import rows_to_csv, scan_dominance

rows = list(scan_dominance(2000, jobs=2))
print("Case3 diameters up to 2000:", len(rows))

# the first few rows
for r in rows[:5]:
    print(r.n, r.classes, r.pair_counts, "dominant", r.dominant,
          "heuristic", r.heuristic_class, "match", r.heuristic_match)

ties = [r for r in rows if not r.unique_dominant]
print("rows without a unique dominant class:", [(r.n, r.pair_counts) for r in ties])

mismatch = [r for r in rows if not r.heuristic_match]
print("heuristic mismatches:", len(mismatch), "of", len(rows))

buf = io.StringIO()
buf.write(rows_to_csv(rows[:3]))
print(buf.getvalue())
