"""Exact-rational verification of local repelling-force families.

A family assigns a rational force f_r to each attainable squared distance
r < D^2.  It is proper when every inserted site's repelled triangle or lens
corners receive total force exactly 1 and every removed site's repelling set
receives total force at most 1.  All arithmetic is Fraction, never float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import is_attainable
from .errors import (
    IncompatibleFamily,
    NoAdmissiblePairs,
    SixTupleFound,
    UnknownFamily,
)
from .excitations import insertable_sites_in_triangle
from .lattice import Site, Sublattice, dist_squared

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ForceFamily:
    """Map r -> f_r for attainable squared distances 1 <= r < n; absent keys are 0."""

    n: int
    values: tuple[tuple[int, Fraction], ...]
    name: str = ""

    def __post_init__(self):
        for r, v in self.values:
            if not (1 <= r < self.n) or not is_attainable(r):
                raise ValueError(f"key {r} is not an attainable distance below {self.n}")
            if not (ZERO <= v <= ONE):
                raise ValueError(f"f_{r} = {v} outside [0, 1]")

    def __getitem__(self, r: int) -> Fraction:
        return dict(self.values).get(r, ZERO)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.values)


def _family(n, name, table):
    return ForceFamily(n, tuple((r, Fraction(p, q)) for r, p, q in table), name)


_D7_TABLE = [
    (1, 44, 56), (3, 40, 56), (4, 40, 56), (7, 31, 56), (9, 31, 56),
    (12, 22, 56), (13, 22, 56), (16, 17, 56), (19, 17, 56), (21, 17, 56),
    (25, 8, 56), (27, 8, 56), (28, 8, 56), (31, 8, 56), (36, 4, 56),
    (37, 4, 56), (39, 4, 56), (43, 4, 56), (48, 4, 56),
]

_D13_TABLE = [
    (1, 131, 135), (3, 127, 135), (4, 251, 270), (7, 241, 270), (9, 116, 135),
    (12, 37, 45), (13, 221, 270), (16, 7, 9), (19, 133, 180), (21, 383, 540),
    (25, 179, 270), (27, 19, 30), (28, 169, 270), (31, 317, 540), (36, 281, 540),
    (37, 14, 27), (39, 131, 270), (43, 41, 90), (48, 37, 90), (49, 43, 108),
    (52, 103, 270), (57, 35, 108), (61, 53, 180), (63, 151, 540), (64, 5, 18),
    (67, 7, 27), (73, 119, 540), (75, 11, 54), (76, 109, 540), (79, 11, 60),
    (81, 22, 135), (84, 83, 540), (91, 2, 15), (93, 31, 270), (97, 29, 270),
    (100, 1, 9), (103, 4, 45), (108, 2, 27), (109, 2, 27), (111, 7, 108),
    (112, 1, 15), (117, 2, 45), (121, 11, 270), (124, 23, 540), (127, 11, 270),
    (129, 4, 135), (133, 4, 135), (139, 2, 135), (144, 1, 54), (147, 2, 135),
    (148, 2, 135), (151, 1, 270), (156, 1, 270), (157, 1, 180), (163, 0, 1),
]

_D147_TABLE = [
    (1, 1, 1), (3, 1, 1), (4, 1, 1), (7, 23, 24), (9, 11, 12),
    (12, 7, 8), (13, 7, 8), (16, 5, 6), (19, 19, 24), (21, 3, 4),
    (25, 2, 3), (27, 5, 8), (28, 5, 8), (31, 7, 12), (36, 1, 2),
    (37, 1, 2), (39, 11, 24), (43, 5, 12), (48, 3, 8), (49, 1, 3),
    (52, 7, 24), (57, 1, 4), (61, 5, 24), (63, 1, 6), (64, 1, 6),
    (67, 1, 6), (73, 1, 8), (75, 1, 8), (76, 1, 12), (79, 1, 12),
    (81, 1, 12), (84, 1, 12), (91, 1, 24), (93, 1, 24), (97, 1, 24),
]

_BUILTINS = {
    "d7": (49, _D7_TABLE),
    "d13": (169, _D13_TABLE),
    "d147": (147, _D147_TABLE),
}


def builtin_force_family(name: str) -> ForceFamily:
    try:
        n, table = _BUILTINS[name]
    except KeyError:
        raise UnknownFamily(f"no built-in force family named {name!r}") from None
    return _family(n, name, table)


def parse_force_family(text: str, name: str = "") -> ForceFamily:
    """Parse the text format: header "d2 <n>", then "<r> <p>/<q>" lines."""
    n = None
    values = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("d2"):
            n = int(line.split()[1])
            continue
        r, frac = line.split()
        values.append((int(r), Fraction(frac)))
    if n is None:
        raise ValueError("missing 'd2 <n>' header")
    return ForceFamily(n, tuple(values), name)


def emit_force_family(f: ForceFamily) -> str:
    lines = [f"d2 {f.n}"]
    for r, v in sorted(f.values):
        lines.append(f"{r} {v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"


def distances_in_disk(n: int) -> list[int]:
    """All attainable squared distances r with 1 <= r < n."""
    return [r for r in range(1, n) if is_attainable(r)]


def _check_compatible(f: ForceFamily, s: Sublattice) -> None:
    if s.index != f.n:
        raise IncompatibleFamily(f"family has D^2 = {f.n}, sublattice has {s.index}")


def verify_inserted_triangle_types(f, s):
    """Check that every insertable triangle site gets total corner force exactly 1.

    Returns (all_ok, [(site, total), ...]) over the insertable sites of the
    triangle {0, (a,b), (-b,a+b)}.
    """
    _check_compatible(f, s)
    a, b = s.a, s.b
    n = f.n
    fd = f.as_dict()
    corners = ((0, 0), (a, b), (-b, a + b))
    repelling = ((a - b, a + 2 * b), (-a - b, a), (a + b, -a))
    results = []
    ok = True
    for i in range(-b + 1, a):
        for j in range(1, a + b):
            z = (i, j)
            if all(dist_squared(z, r) >= n for r in repelling):
                total = sum((fd.get(dist_squared(z, c), ZERO) for c in corners), ZERO)
                results.append((z, total))
                if total != ONE:
                    ok = False
    return ok, results


def verify_inserted_lens_types(f, s):
    """Check the four-corner force sum over lens sites of the D-parallelogram.

    Lens sites lie at distance < D from both far corners (0,0) and (a-b,a+2b).
    """
    _check_compatible(f, s)
    a, b = s.a, s.b
    n = f.n
    fd = f.as_dict()
    far = ((0, 0), (a - b, a + 2 * b))
    corners = ((0, 0), (a, b), (-b, a + b), (a - b, a + 2 * b))
    results = []
    ok = True
    for i in range(-b + 1, a):
        for j in range(b + 1, a + b):
            z = (i, j)
            if dist_squared(z, far[0]) < n and dist_squared(z, far[1]) < n:
                total = sum((fd.get(dist_squared(z, c), ZERO) for c in corners), ZERO)
                results.append((z, total))
                if total != ONE:
                    ok = False
    return ok, results


def _angle_region(x: Site) -> int:
    """0 on the positive real axis, 1 in the open upper half plane, 2 on the
    negative real axis, 3 in the open lower half plane (embedded coordinates)."""
    # embedded: (X/2, Y*sqrt(3)/2) with X = 2m + n, Y = n
    xx = 2 * x[0] + x[1]
    y = x[1]
    if y == 0:
        return 0 if xx > 0 else 2
    return 1 if y > 0 else 3


def canonical_less(p: Site, q: Site) -> bool:
    """Strict order: ascending squared norm, then polar angle in [0, 2pi).

    Angle comparison is exact: half-plane class, then a cross-product sign
    (the sqrt(3) factors of the embedding cancel in the sign).
    """
    np_, nq = dist_squared(p, (0, 0)), dist_squared(q, (0, 0))
    if np_ != nq:
        return np_ < nq
    rp, rq = _angle_region(p), _angle_region(q)
    if rp != rq:
        return rp < rq
    if rp in (0, 2):
        return False  # same norm and same axis ray means same site
    cross = (2 * p[0] + p[1]) * q[1] - (2 * q[0] + q[1]) * p[1]
    return cross > 0


def disk_sites_in_canonical_order(n: int) -> list[Site]:
    """Nonzero sites with squared norm < n, sorted by (norm, polar angle)."""
    import functools

    size = math.isqrt(n * 4 // 3) + 1
    sites = [
        (i, j)
        for i in range(-size, size)
        for j in range(-size, size)
        if (i or j) and i * i + i * j + j * j < n
    ]
    sites.sort(key=functools.cmp_to_key(lambda p, q: -1 if canonical_less(p, q) else 1))
    return sites


@dataclass(frozen=True)
class PropernessReport:
    proper: bool
    tuple_counts_by_size: dict[int, int]
    distinct_types: int
    minimal_types: int
    first_violation: tuple[tuple[Site, ...], Fraction] | None = None


class _TrieNode:
    __slots__ = ("children", "height", "sorted_children")

    def __init__(self):
        self.children = {}
        self.height = 0
        self.sorted_children = ()


def _build_trie(types):
    root = _TrieNode()
    for t in types:
        node = root
        for v in t:
            nxt = node.children.get(v)
            if nxt is None:
                nxt = node.children[v] = _TrieNode()
            node = nxt

    def finish(node):
        h = 0
        items = sorted(node.children.items())
        node.sorted_children = items
        for _, child in items:
            h = max(h, 1 + finish(child))
        node.height = h
        return h

    finish(root)
    return root


def _covered(root, t) -> bool:
    """True iff some other type t' with len >= len(t) satisfies t'_i <= t_i
    for all i < len(t) (componentwise prefix dominance)."""
    big = len(t)

    def rec(node, i, strict):
        if node.height < big - i:
            return False
        if i == big:
            # strict somewhere, or equal prefix of a strictly longer type
            return strict or bool(node.children)
        ti = t[i]
        for v, child in node.sorted_children:
            if v > ti:
                break
            if rec(child, i + 1, strict or v < ti):
                return True
        return False

    return rec(root, 0, False)


def count_minimal_types(types) -> int:
    root = _build_trie(types)
    return sum(1 for t in types if not _covered(root, t))


def verify_removed_types(f: ForceFamily, count_minimal: bool = True) -> PropernessReport:
    """Enumerate every admissible tuple of 1..5 sites in the open punctured
    D-disk and check the force sum over each distinct repelling type.

    Streaming depth-first enumeration in canonical site order; tuples are
    never materialized level by level.  Probes for an admissible 6-tuple and
    raises SixTupleFound if one exists.
    """
    n = f.n
    sites = disk_sites_in_canonical_order(n)
    m = len(sites)
    norms = [dist_squared(z, (0, 0)) for z in sites]
    # masks[i]: canonical successors of site i at squared distance >= n
    masks = []
    for i in range(m):
        mask = 0
        for j in range(i + 1, m):
            if dist_squared(sites[i], sites[j]) >= n:
                mask |= 1 << j
        masks.append(mask)

    counts = {k: 0 for k in range(1, 6)}
    witnesses: dict[tuple[int, ...], tuple[int, ...]] = {}

    def dfs(idx_tuple, norm_tuple, allowed, size):
        a = allowed
        while a:
            low = a & -a
            j = low.bit_length() - 1
            a ^= low
            nt = norm_tuple + (norms[j],)
            counts[size] += 1
            key = tuple(sorted(nt))
            if key not in witnesses:
                witnesses[key] = idx_tuple + (j,)
            na = allowed & masks[j]
            if na:
                if size == 5:
                    raise SixTupleFound(
                        f"admissible 6-tuple exists in the open punctured disk of D^2={n}"
                    )
                dfs(idx_tuple + (j,), nt, na, size + 1)

    for i in range(m):
        counts[1] += 1
        key = (norms[i],)
        if key not in witnesses:
            witnesses[key] = (i,)
        if masks[i]:
            dfs((i,), key, masks[i], 2)

    fd = f.as_dict()
    proper = True
    violation = None
    for key in sorted(witnesses):
        total = sum((fd.get(r, ZERO) for r in key), ZERO)
        if total > ONE:
            proper = False
            if violation is None:
                violation = (tuple(sites[i] for i in witnesses[key]), total)
    minimal = count_minimal_types(list(witnesses)) if count_minimal else 0
    return PropernessReport(proper, counts, len(witnesses), minimal, violation)


def report_to_json_dict(report: PropernessReport) -> dict:
    out = {
        "proper": report.proper,
        "tupleCountsBySize": {str(k): v for k, v in report.tuple_counts_by_size.items()},
        "distinctTypes": report.distinct_types,
        "minimalTypes": report.minimal_types,
    }
    if report.first_violation is not None:
        sites, total = report.first_violation
        out["violation"] = {
            "sites": [list(z) for z in sites],
            "total": f"{total.numerator}/{total.denominator}",
        }
    return out


def min_delta_nondeletable(f: ForceFamily, s: Sublattice):
    """Minimal deficit 1 - max(f[d(p,v)] + f[d(q,v)]) over admissible pairs
    (p, q) from the two insertable triangle stacks, v = (a, b) the shared
    removed vertex.  Returns (delta, (r_p, r_q)) with the first maximizer."""
    _check_compatible(f, s)
    a, b = s.a, s.b
    n = f.n
    fd = f.as_dict()
    v = (a, b)
    t_a = insertable_sites_in_triangle((0, 0), (a, b))
    t_b = insertable_sites_in_triangle((a, b), (0, 0))
    max_force = ZERO
    witness = None
    for p in t_a:
        for q in t_b:
            if dist_squared(p, q) < n:
                continue
            rp = dist_squared(p, v)
            rq = dist_squared(q, v)
            force = fd.get(rp, ZERO) + fd.get(rq, ZERO)
            if witness is None or force > max_force:
                max_force = force
                witness = (rp, rq)
    if witness is None:
        raise NoAdmissiblePairs(f"no admissible pair for sublattice ({a},{b})")
    return ONE - max_force, witness
