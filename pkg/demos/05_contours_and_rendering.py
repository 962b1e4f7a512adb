"""
Contour supports and SVG rendering walkthrough
==============================================

Build a ground-state configuration on a finite region, punch out one vacancy,
locate the support of the resulting contour, and render pictures.
"""

import pathlib

from hct import (
    Configuration,
    GroundStateDescriptor,
    RenderSpec,
    Sublattice,
    contour_supports,
    from_ground_state,
    is_admissible,
    render_svg,
)

gs = GroundStateDescriptor(Sublattice(7, 0), False, (0, 0))
config = from_ground_state(gs, (-3, 4, -3, 4), 49)
print("ground-state sites in region:", len(config.occupied))
print("admissible:", is_admissible(config))
print("contour supports of the ground state:", contour_supports(config))

# remove the particle at the origin: one contour, nine dirty parallelograms
vacated = Configuration(config.occupied - {(0, 0)}, config.region, 49)
supports = contour_supports(vacated)
for s in supports:
    print("support with", len(s.parallelograms), "parallelograms:", s.parallelograms)

out = pathlib.Path("demo_renders")
out.mkdir(exist_ok=True)

svg = render_svg(RenderSpec("sublattice", sublattice=Sublattice(7, 0), viewport=(0, 14, 0, 14)))
(out / "sublattice_7_0.svg").write_text(svg)

svg = render_svg(RenderSpec("defect-geometry", sublattice=Sublattice(5, 3)))
(out / "defects_5_3.svg").write_text(svg)

svg = render_svg(RenderSpec("contours", configuration=vacated))
(out / "vacancy_contour.svg").write_text(svg)

print("wrote", sorted(p.name for p in out.iterdir()))
