"""Triangular-lattice geometry: metric, embedding, sublattices, tilings.

Sites are plain integer pairs (m, n) with Euclidean position
(m + n/2, n*sqrt(3)/2).  The squared distance is the integer quadratic
form dm^2 + dm*dn + dn^2, evaluated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .eisenstein import ground_state_count, is_attainable, loeschian_representations
from .errors import CoordinateOverflow, NotAttainable, OutOfDomain

Site = tuple[int, int]

COORD_BOUND = 1 << 30

_SQRT3_2 = math.sqrt(3.0) / 2.0


def _check(x: Site) -> None:
    if abs(x[0]) > COORD_BOUND or abs(x[1]) > COORD_BOUND:
        raise CoordinateOverflow(f"site {x} exceeds |m|,|n| <= 2^30")


def dist_squared(x: Site, y: Site) -> int:
    _check(x)
    _check(y)
    dm = x[0] - y[0]
    dn = x[1] - y[1]
    return dm * dm + dm * dn + dn * dn


def embed(x: Site) -> tuple[float, float]:
    return (x[0] + x[1] / 2.0, x[1] * _SQRT3_2)


def reflect(x: Site) -> Site:
    """Reflection about the lattice diagonal, (m, n) -> (n, m)."""
    return (x[1], x[0])


def rotate60(x: Site) -> Site:
    """Counterclockwise rotation by 60 degrees, (m, n) -> (-n, m + n)."""
    return (-x[1], x[0] + x[1])


@dataclass(frozen=True)
class Sublattice:
    """The D-sublattice generated by (a, b) and (-b, a + b), a >= b >= 0."""

    a: int
    b: int

    def __post_init__(self):
        if not (self.a >= self.b >= 0) or (self.a, self.b) == (0, 0):
            raise ValueError(f"invalid sublattice generator {(self.a, self.b)}")

    @property
    def index(self) -> int:
        """D^2: the quadratic-form norm of the generator and the coset count."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    @property
    def basis(self) -> tuple[Site, Site]:
        return ((self.a, self.b), (-self.b, self.a + self.b))

    @property
    def chiral(self) -> bool:
        return self.a != self.b and self.a != 0 and self.b != 0

    def contains(self, x: Site) -> bool:
        # solve u*(a,b) + v*(-b,a+b) = (m,n); integer iff both Cramer
        # numerators are divisible by the determinant D^2
        m, n = x
        d = self.index
        return (m * (self.a + self.b) + n * self.b) % d == 0 and (self.a * n - self.b * m) % d == 0

    def coset_key(self, x: Site) -> tuple[int, int]:
        """A value constant on cosets and distinct across them."""
        m, n = x
        d = self.index
        return ((m * (self.a + self.b) + n * self.b) % d, (self.a * n - self.b * m) % d)

    @cached_property
    def coset_representatives(self) -> tuple[Site, ...]:
        """One site per coset, scanned row-major from the origin."""
        reps: dict[tuple[int, int], Site] = {}
        d = self.index
        for n in range(d):
            for m in range(d):
                key = self.coset_key((m, n))
                if key not in reps:
                    reps[key] = (m, n)
                    if len(reps) == d:
                        return tuple(reps.values())
        return tuple(reps.values())

    def sites_in_rect(self, m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> list[Site]:
        """Members with m_lo <= m < m_hi, n_lo <= n < n_hi."""
        a, b = self.a, self.b
        out = []
        # (u, v) ranges bounding the rectangle under the basis transform
        corners = [(m, n) for m in (m_lo, m_hi - 1) for n in (n_lo, n_hi - 1)]
        d = self.index
        us = [(m * (a + b) + n * b) / d for m, n in corners]
        vs = [(a * n - b * m) / d for m, n in corners]
        for u in range(math.floor(min(us)), math.ceil(max(us)) + 1):
            for v in range(math.floor(min(vs)), math.ceil(max(vs)) + 1):
                m = u * a - v * b
                n = u * b + v * (a + b)
                if m_lo <= m < m_hi and n_lo <= n < n_hi:
                    out.append((m, n))
        return out


def six_neighbors(s: Sublattice) -> list[Site]:
    """The six sublattice sites nearest the origin, in rotation order."""
    a, b = s.a, s.b
    return [(a, b), (-b, a + b), (-a - b, a), (-a, -b), (b, -a - b), (a + b, -a)]


def sublattice_contains(s: Sublattice, x: Site) -> bool:
    return s.contains(x)


@dataclass(frozen=True)
class GroundStateDescriptor:
    """A ground state: a sublattice class, optionally reflected, then shifted."""

    sublattice: Sublattice
    reflected: bool
    shift: Site

    def contains(self, x: Site) -> bool:
        v = (x[0] - self.shift[0], x[1] - self.shift[1])
        if self.reflected:
            v = reflect(v)
        return self.sublattice.contains(v)

    def sites_in_rect(self, m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> list[Site]:
        sm, sn = self.shift
        if not self.reflected:
            inner = self.sublattice.sites_in_rect(m_lo - sm, m_hi - sm, n_lo - sn, n_hi - sn)
            return [(m + sm, n + sn) for m, n in inner]
        # reflected: member v satisfies reflect(x - shift) in L
        inner = self.sublattice.sites_in_rect(n_lo - sn, n_hi - sn, m_lo - sm, m_hi - sm)
        return [(n + sm, m + sn) for m, n in inner]


def enumerate_ground_states(n: int) -> list[GroundStateDescriptor]:
    """All ground states for squared diameter n: shifts (and reflections) per class."""
    if not is_attainable(n):
        raise NotAttainable(f"{n} is not a Loeschian number")
    out = []
    for a, b in loeschian_representations(n):
        s = Sublattice(a, b)
        for shift in s.coset_representatives:
            out.append(GroundStateDescriptor(s, False, shift))
        if s.chiral:
            seen: set[tuple[int, int]] = set()
            d = s.index
            for nn in range(d):
                done = False
                for m in range(d):
                    key = s.coset_key(reflect((m, nn)))
                    if key not in seen:
                        seen.add(key)
                        out.append(GroundStateDescriptor(s, True, (m, nn)))
                        if len(seen) == d:
                            done = True
                            break
                if done:
                    break
    assert len(out) == ground_state_count(n)
    return out


def common_parallelogram_index(x: Site, n: int) -> tuple[int, int]:
    """The (k, l) of the D^2 x D^2 tile containing x (floor semantics)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return (x[0] // n, x[1] // n)


def torus_distance_squared(x: Site, y: Site, k: int, n: int) -> int:
    """Quadratic form on componentwise toroidal differences, period 2kD^2.

    Each coordinate difference is reduced to the representative of smallest
    absolute value in (-kD^2, kD^2] (ties resolved to the positive one).
    """
    period = 2 * k * n
    half = k * n
    for s in (x, y):
        if not (-half <= s[0] < half and -half <= s[1] < half):
            raise OutOfDomain(f"site {s} outside [{-half}, {half})^2")

    def wrap(d: int) -> int:
        d %= period
        return d - period if d > half else d

    dm = wrap(y[0] - x[0])
    dn = wrap(y[1] - x[1])
    return dm * dm + dm * dn + dn * dn
