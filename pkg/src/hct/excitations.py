"""Small-contour defects: insertable sites in D-triangles and admissible
pairs/triples/quadruples of inserted particles across a D-parallelogram,
trapezoid, and 2D-triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Site, Sublattice, dist_squared


def third_vertex(a: Site, b: Site) -> Site:
    """The site completing the counterclockwise equilateral triangle on a, b."""
    return (a[0] + a[1] - b[1], b[0] + b[1] - a[0])


def insertable_sites_in_triangle(a: Site, b: Site) -> list[Site]:
    """Sites where an inserted particle repels exactly the triangle vertices.

    Scans the open bounding box of the triangle a, b, third_vertex(a, b) and
    keeps sites at squared distance >= |ab|^2 from the three vertices of the
    reflected (outward) triangles.  Column-major scan, ascending.
    """
    n = dist_squared(a, b)
    c = third_vertex(a, b)
    left = min(a[0], b[0], c[0])
    right = max(a[0], b[0], c[0])
    bottom = min(a[1], b[1], c[1])
    top = max(a[1], b[1], c[1])
    repelling = (third_vertex(b, a), third_vertex(a, c), third_vertex(c, b))
    out = []
    for i in range(left + 1, right):
        for j in range(bottom + 1, top):
            z = (i, j)
            if all(dist_squared(z, r) >= n for r in repelling):
                out.append(z)
    return out


def pairable_insertable_sites(s: Sublattice) -> tuple[list[Site], list[Site]]:
    """The stack sites that participate in at least one admissible pair
    across the D-parallelogram (one list per triangle stack).  These are the
    sites whose square is the nominal pair count."""
    n = s.index
    a, b = s.a, s.b
    t_a = insertable_sites_in_triangle((0, 0), (a, b))
    t_b = insertable_sites_in_triangle((a, b), (0, 0))
    pa = [p for p in t_a if any(dist_squared(p, q) >= n for q in t_b)]
    pb = [q for q in t_b if any(dist_squared(p, q) >= n for p in t_a)]
    return pa, pb


@dataclass(frozen=True)
class DefectCounts:
    sublattice: Sublattice
    pairs: int
    triples: int
    quadruples: int
    excess: int = 2  # removed minus inserted, same for all three kinds


def _stacks(s: Sublattice):
    a, b = s.a, s.b
    t_a = insertable_sites_in_triangle((0, 0), (a, b))
    t_b = insertable_sites_in_triangle((a, b), (0, 0))
    t_c = insertable_sites_in_triangle((-b, a + b), (a, b))
    t_d = insertable_sites_in_triangle((0, 0), (-b, a + b))
    return t_a, t_b, t_c, t_d


def count_defects(s: Sublattice) -> DefectCounts:
    """Pairs over the D-parallelogram, triples over the trapezoid, quadruples
    over the 2D-triangle, all inter-stack squared distances >= D^2."""
    n = s.index
    t_a, t_b, t_c, t_d = _stacks(s)
    pairs = sum(1 for p in t_a for q in t_b if dist_squared(p, q) >= n)
    triples = 0
    for p in t_a:
        for q in t_b:
            if dist_squared(p, q) < n:
                continue
            for r in t_c:
                if dist_squared(p, r) >= n and dist_squared(q, r) >= n:
                    triples += 1
    quadruples = 0
    for p in t_a:
        for q in t_b:
            if dist_squared(p, q) < n:
                continue
            for r in t_c:
                if dist_squared(p, r) < n or dist_squared(q, r) < n:
                    continue
                for t in t_d:
                    if (
                        dist_squared(p, t) >= n
                        and dist_squared(q, t) >= n
                        and dist_squared(r, t) >= n
                    ):
                        quadruples += 1
    return DefectCounts(s, pairs, triples, quadruples)


def enumerate_pair_defects(s: Sublattice) -> list[tuple[Site, Site]]:
    """The admissible pairs across the D-parallelogram, one inserted site in
    each of its two triangles (lower on edge 0-(a,b), upper on (a,b)-(-b,a+b)),
    canonically sorted."""
    n = s.index
    a, b = s.a, s.b
    lower = insertable_sites_in_triangle((0, 0), (a, b))
    upper = insertable_sites_in_triangle((-b, a + b), (a, b))
    out = []
    for p in lower:
        for q in upper:
            if dist_squared(p, q) >= n:
                out.append(tuple(sorted((p, q))))
    out.sort()
    return out
