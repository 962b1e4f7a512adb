"""Deterministic SVG rendering of sublattices, defect geometry, and contours.

Output is byte-stable for fixed inputs: coordinates are formatted with a
fixed precision and all element orders are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configurations import Configuration, contour_supports
from .errors import InvalidViewport
from .excitations import insertable_sites_in_triangle
from .lattice import Site, Sublattice, embed

SCALE = 24.0
MARGIN = 1.5


@dataclass(frozen=True)
class RenderSpec:
    mode: str  # sublattice | defect-geometry | contours
    sublattice: Sublattice | None = None
    configuration: Configuration | None = None
    viewport: tuple[int, int, int, int] | None = None  # m_lo, m_hi, n_lo, n_hi


def _fmt(x: float) -> str:
    return f"{x:.4f}"


class _Canvas:
    def __init__(self, viewport):
        m_lo, m_hi, n_lo, n_hi = viewport
        if m_hi <= m_lo or n_hi <= n_lo:
            raise InvalidViewport(f"empty viewport {viewport}")
        xs = [embed((m, n))[0] for m in (m_lo, m_hi) for n in (n_lo, n_hi)]
        ys = [embed((m, n))[1] for m in (m_lo, m_hi) for n in (n_lo, n_hi)]
        self.x_lo = min(xs) - MARGIN
        self.y_lo = min(ys) - MARGIN
        self.width = (max(xs) - min(xs) + 2 * MARGIN) * SCALE
        self.height = (max(ys) - min(ys) + 2 * MARGIN) * SCALE
        self.viewport = viewport
        self.body: list[str] = []

    def xy(self, site: Site) -> tuple[float, float]:
        ex, ey = embed(site)
        # flip y so the lattice is drawn with n increasing upward
        return ((ex - self.x_lo) * SCALE, self.height - (ey - self.y_lo) * SCALE)

    def in_view(self, site: Site) -> bool:
        m_lo, m_hi, n_lo, n_hi = self.viewport
        return m_lo <= site[0] < m_hi and n_lo <= site[1] < n_hi

    def sites_in_view(self):
        m_lo, m_hi, n_lo, n_hi = self.viewport
        for m in range(m_lo, m_hi):
            for n in range(n_lo, n_hi):
                yield (m, n)

    def circle(self, site: Site, r: float, fill: str, stroke: str = "none"):
        x, y = self.xy(site)
        self.body.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" '
            f'fill="{fill}" stroke="{stroke}"/>'
        )

    def polygon(self, corners, fill: str, opacity: str = "1"):
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (self.xy(c) for c in corners))
        self.body.append(f'<polygon points="{pts}" fill="{fill}" fill-opacity="{opacity}"/>')

    def document(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{_fmt(self.width)}" height="{_fmt(self.height)}" '
            f'viewBox="0 0 {_fmt(self.width)} {_fmt(self.height)}">'
        )
        return "\n".join([head, *self.body, "</svg>"]) + "\n"


def _grid(cv: _Canvas):
    for site in cv.sites_in_view():
        cv.circle(site, 1.2, "#cccccc")


def render_sublattice(s: Sublattice, viewport) -> str:
    cv = _Canvas(viewport)
    _grid(cv)
    for site in cv.sites_in_view():
        if s.contains(site):
            cv.circle(site, 5.0, "#1f4e9c")
    return cv.document()


def render_defect_geometry(s: Sublattice, viewport=None) -> str:
    a, b = s.a, s.b
    corners = [(0, 0), (a, b), (-b, a + b), (a - b, a + 2 * b)]
    if viewport is None:
        ms = [c[0] for c in corners]
        ns = [c[1] for c in corners]
        viewport = (min(ms) - 1, max(ms) + 2, min(ns) - 1, max(ns) + 2)
    cv = _Canvas(viewport)
    _grid(cv)
    cv.polygon(corners, "#f2e2b8", "0.6")
    lower = insertable_sites_in_triangle((0, 0), (a, b))
    upper = insertable_sites_in_triangle((-b, a + b), (a, b))
    for z in sorted(lower + upper):
        cv.circle(z, 3.0, "#2e8540")
    for c in corners:
        cv.circle(c, 5.0, "white", "#b3261e")
    return cv.document()


def render_contours(c: Configuration, viewport=None) -> str:
    if viewport is None:
        m_lo, m_hi, n_lo, n_hi = c.site_bounds
        viewport = (m_lo, m_hi + 1, n_lo, n_hi + 1)
    cv = _Canvas(viewport)
    n = c.n
    for support in contour_supports(c):
        for k, l in sorted(support.parallelograms):
            tile = [
                (k * n, l * n),
                ((k + 1) * n, l * n),
                ((k + 1) * n, (l + 1) * n),
                (k * n, (l + 1) * n),
            ]
            cv.polygon(tile, "#f4b8b4", "0.5")
    _grid(cv)
    for site in sorted(c.occupied):
        if cv.in_view(site):
            cv.circle(site, 5.0, "#1f4e9c")
    return cv.document()


def render_svg(spec: RenderSpec) -> str:
    if spec.mode == "sublattice":
        if spec.sublattice is None or spec.viewport is None:
            raise InvalidViewport("sublattice mode needs a class and a viewport")
        return render_sublattice(spec.sublattice, spec.viewport)
    if spec.mode == "defect-geometry":
        if spec.sublattice is None:
            raise InvalidViewport("defect-geometry mode needs a class")
        return render_defect_geometry(spec.sublattice, spec.viewport)
    if spec.mode == "contours":
        if spec.configuration is None:
            raise InvalidViewport("contours mode needs a configuration")
        return render_contours(spec.configuration, spec.viewport)
    raise InvalidViewport(f"unknown render mode {spec.mode!r}")
