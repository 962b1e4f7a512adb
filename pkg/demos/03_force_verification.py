"""
Force family verification walkthrough
=====================================

Exact-rational checks that the built-in force families are proper: inserted
triangle and lens types sum to 1, removed-type sums stay at most 1, and the
smallest slack of the nondeletable bound is computed exactly.
"""

from fractions import Fraction

from hct import (
    ForceFamily,
    Sublattice,
    builtin_force_family,
    min_delta_nondeletable,
    verify_inserted_lens_types,
    verify_inserted_triangle_types,
    verify_removed_types,
)

combos = [
    ("d7", (7, 0)), ("d7", (5, 3)),
    ("d13", (13, 0)), ("d13", (8, 7)),
    ("d147", (11, 2)), ("d147", (7, 7)),
]

for name, c in combos:
    fam = builtin_force_family(name)
    s = Sublattice(*c)
    tri_ok, _ = verify_inserted_triangle_types(fam, s)
    lens_ok, _ = verify_inserted_lens_types(fam, s)
    delta, (r1, r2) = min_delta_nondeletable(fam, s)
    print(name, c, "triangle", tri_ok, "lens", lens_ok,
          f"min delta {delta} at (f[{r1}], f[{r2}])")

# removed-type census for the smallest family: every tuple of removed
# particles around a deleted site keeps its force total at most 1
report = verify_removed_types(builtin_force_family("d7"))
print("d7 removed types: proper", report.proper,
      "distinct", report.distinct_types, "minimal", report.minimal_types)
print("tuple counts by size:", report.tuple_counts_by_size)

# zeroing one entry breaks the triangle equalities
d7 = builtin_force_family("d7")
broken = ForceFamily(49, tuple((r, Fraction(0) if r == 3 else v) for r, v in d7.values))
ok, totals = verify_inserted_triangle_types(broken, Sublattice(7, 0))
print("perturbed family proper:", ok, "first off total:",
      next((s, t) for s, t in totals if t != 1))
