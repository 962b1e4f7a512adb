"""
Diameter classification walkthrough
===================================

Which squared diameters are attainable on the triangular lattice, how they
split into three arithmetic cases, and how many ground states each one has.
"""

from hct import case_lists, classify_diameter, ground_state_count, loeschian_representations

# first values of each case
cl = case_lists(15)
for case in ("Case1", "Case2", "Case3"):
    print(case, cl[case])

# 49 is the smallest Case3 value: two inequivalent representations
dc = classify_diameter(49)
print("n=49 is", dc.case, "with representations", dc.representations)
print("ground states:", ground_state_count(49))

# the three smallest Case3 diameters and their sublattice classes
for n in (49, 147, 169):
    reps = loeschian_representations(n)
    counts = [r[0] * r[0] + r[0] * r[1] + r[1] * r[1] for r in reps]
    assert all(c == n for c in counts)
    print(n, "->", reps, "ground states", ground_state_count(n))
