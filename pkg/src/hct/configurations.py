"""Finite particle configurations: admissibility, local correctness, contour supports.

A configuration lives on a rectangle of common-parallelogram indices.  The
parallelogram F(k,l) covers lattice sites k*n <= m < (k+1)*n, l*n <= n_coord
< (l+1)*n, where n = D^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundaryTouching, OutOfRegion
from .lattice import (
    GroundStateDescriptor,
    Site,
    common_parallelogram_index,
    dist_squared,
    enumerate_ground_states,
)


@dataclass(frozen=True)
class Configuration:
    """Occupied sites on a rectangle of parallelogram indices.

    region is (k_lo, k_hi, l_lo, l_hi), half-open in both axes.
    """

    occupied: frozenset[Site]
    region: tuple[int, int, int, int]
    n: int

    def __post_init__(self):
        k_lo, k_hi, l_lo, l_hi = self.region
        for x in self.occupied:
            k, l = common_parallelogram_index(x, self.n)
            if not (k_lo <= k < k_hi and l_lo <= l < l_hi):
                raise OutOfRegion(f"occupied site {x} outside region {self.region}")

    @property
    def site_bounds(self) -> tuple[int, int, int, int]:
        """(m_lo, m_hi, n_lo, n_hi) half-open site rectangle of the region."""
        k_lo, k_hi, l_lo, l_hi = self.region
        return (k_lo * self.n, k_hi * self.n, l_lo * self.n, l_hi * self.n)

    def contains_site_rect(self, m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> bool:
        a, b, c, d = self.site_bounds
        return a <= m_lo and m_hi <= b and c <= n_lo and n_hi <= d


def from_ground_state(gs: GroundStateDescriptor, region: tuple[int, int, int, int], n: int) -> Configuration:
    k_lo, k_hi, l_lo, l_hi = region
    sites = gs.sites_in_rect(k_lo * n, k_hi * n, l_lo * n, l_hi * n)
    return Configuration(frozenset(sites), region, n)


def parse_configuration(text: str) -> Configuration:
    """Parse the text format: header "d2 <n>", then "m n" lines, "#" comments.

    The region is the smallest parallelogram rectangle covering the sites.
    """
    n = None
    sites = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("d2"):
            n = int(line.split()[1])
            continue
        m, nn = line.split()
        sites.append((int(m), int(nn)))
    if n is None:
        raise ValueError("missing 'd2 <n>' header")
    if sites:
        ks = [common_parallelogram_index(x, n) for x in sites]
        region = (
            min(k for k, _ in ks),
            max(k for k, _ in ks) + 1,
            min(l for _, l in ks),
            max(l for _, l in ks) + 1,
        )
    else:
        region = (0, 1, 0, 1)
    return Configuration(frozenset(sites), region, n)


def emit_configuration(c: Configuration) -> str:
    lines = [f"d2 {c.n}"]
    for m, nn in sorted(c.occupied):
        lines.append(f"{m} {nn}")
    return "\n".join(lines) + "\n"


def is_admissible(c: Configuration) -> bool:
    """True iff all pairwise squared distances are >= n.

    Buckets sites into parallelogram cells; any conflicting pair lies in the
    same or an edge/corner adjacent cell, so only 9 cells are scanned per site.
    """
    buckets: dict[tuple[int, int], list[Site]] = {}
    for x in c.occupied:
        buckets.setdefault(common_parallelogram_index(x, c.n), []).append(x)
    for (k, l), cell in buckets.items():
        for dk in (-1, 0, 1):
            for dl in (-1, 0, 1):
                other = buckets.get((k + dk, l + dl))
                if not other:
                    continue
                for x in cell:
                    for y in other:
                        if x != y and x <= y and dist_squared(x, y) < c.n:
                            return False
    return True


def phi_correct_site(c: Configuration, gs: GroundStateDescriptor, x: Site) -> bool:
    """sigma(x) = phi(x) = 1 and likewise for the six neighbors at distance D."""
    from .lattice import six_neighbors

    nbrs = [(x[0] + dm, x[1] + dn) for dm, dn in six_neighbors(gs.sublattice)]
    m_lo, m_hi, n_lo, n_hi = c.site_bounds
    for y in [x] + nbrs:
        if not (m_lo <= y[0] < m_hi and n_lo <= y[1] < n_hi):
            raise OutOfRegion(f"D-neighborhood of {x} leaves the region at {y}")
    if not (x in c.occupied and gs.contains(x)):
        return False
    return all(y in c.occupied and gs.contains(y) for y in nbrs)


def phi_correct_parallelogram(c: Configuration, gs: GroundStateDescriptor, kl: tuple[int, int]) -> bool:
    """sigma = phi on all sites of the 9 parallelograms around kl."""
    k, l = kl
    n = c.n
    m_lo, m_hi = (k - 1) * n, (k + 2) * n
    n_lo, n_hi = (l - 1) * n, (l + 2) * n
    if not c.contains_site_rect(m_lo, m_hi, n_lo, n_hi):
        raise OutOfRegion(f"3x3 block around {kl} leaves the region")
    phi_sites = set(gs.sites_in_rect(m_lo, m_hi, n_lo, n_hi))
    sigma_sites = {x for x in c.occupied if m_lo <= x[0] < m_hi and n_lo <= x[1] < n_hi}
    return phi_sites == sigma_sites


@dataclass(frozen=True)
class ContourSupport:
    parallelograms: frozenset[tuple[int, int]]
    restriction: frozenset[Site] = field(default=frozenset())


def contour_supports(c: Configuration, ground_states=None) -> list[ContourSupport]:
    """Connected components of parallelograms phi-correct for no ground state.

    For each phi, a parallelogram block is wrong iff the symmetric difference
    sigma XOR phi meets its 3x3 neighborhood, so we mark dirty neighborhoods
    of difference sites instead of comparing every block against every phi.
    """
    if ground_states is None:
        ground_states = enumerate_ground_states(c.n)
    k_lo, k_hi, l_lo, l_hi = c.region
    inner = [(k, l) for k in range(k_lo + 1, k_hi - 1) for l in range(l_lo + 1, l_hi - 1)]
    bad = set(inner)
    m_lo, m_hi, n_lo, n_hi = c.site_bounds
    for gs in ground_states:
        if not bad:
            break
        phi_sites = set(gs.sites_in_rect(m_lo, m_hi, n_lo, n_hi))
        dirty = set()
        for x in c.occupied.symmetric_difference(phi_sites):
            k, l = common_parallelogram_index(x, c.n)
            for dk in (-1, 0, 1):
                for dl in (-1, 0, 1):
                    dirty.add((k + dk, l + dl))
        bad &= dirty
    # a bad parallelogram next to a non-evaluable boundary tile makes the
    # component extent unreliable (the neighbor might be bad too)
    for k, l in bad:
        if k in (k_lo + 1, k_hi - 2) or l in (l_lo + 1, l_hi - 2):
            raise BoundaryTouching(f"bad parallelogram {(k, l)} touches the region boundary")
    # 8-neighbor connected components
    supports = []
    remaining = set(bad)
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            k, l = frontier.pop()
            for dk in (-1, 0, 1):
                for dl in (-1, 0, 1):
                    q = (k + dk, l + dl)
                    if q in remaining:
                        remaining.remove(q)
                        comp.add(q)
                        frontier.append(q)
        restriction = frozenset(
            x for x in c.occupied if common_parallelogram_index(x, c.n) in comp
        )
        supports.append(ContourSupport(frozenset(comp), restriction))
    supports.sort(key=lambda s: min(s.parallelograms))
    return supports
