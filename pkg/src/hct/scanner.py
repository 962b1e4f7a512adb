"""Dominance scan over attainable squared diameters.

For every attainable n with at least two representation classes, count the
admissible pair defects of each class and report which class dominates,
together with the nearest-insertable-site heuristic.  Counting is vectorized
with numpy (the exact module excitations stays integer-for-integer equivalent,
which the tests assert on the theorem diameters).
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .eisenstein import classify_diameter, is_attainable, loeschian_representations
from .excitations import third_vertex


def _insertable_array(a: int, b: int, A, B) -> np.ndarray:
    """Vectorized insertable_sites_in_triangle, same site set, int64 (k, 2)."""
    C = third_vertex(A, B)
    n = (A[0] - B[0]) ** 2 + (A[0] - B[0]) * (A[1] - B[1]) + (A[1] - B[1]) ** 2
    left = min(A[0], B[0], C[0])
    right = max(A[0], B[0], C[0])
    bottom = min(A[1], B[1], C[1])
    top = max(A[1], B[1], C[1])
    ii, jj = np.meshgrid(
        np.arange(left + 1, right, dtype=np.int64),
        np.arange(bottom + 1, top, dtype=np.int64),
        indexing="ij",
    )
    keep = np.ones(ii.shape, dtype=bool)
    for r in (third_vertex(B, A), third_vertex(A, C), third_vertex(C, B)):
        dm = ii - r[0]
        dn = jj - r[1]
        keep &= dm * dm + dm * dn + dn * dn >= n
    return np.stack([ii[keep], jj[keep]], axis=1)


def _pair_count(a: int, b: int) -> int:
    n = a * a + a * b + b * b
    P = _insertable_array(a, b, (0, 0), (a, b))
    Q = _insertable_array(a, b, (a, b), (0, 0))
    if len(P) == 0 or len(Q) == 0:
        return 0
    dm = P[:, 0, None] - Q[None, :, 0]
    dn = P[:, 1, None] - Q[None, :, 1]
    return int((dm * dm + dm * dn + dn * dn >= n).sum())


def _heuristic_min_dist2(a: int, b: int) -> int | None:
    """Min over insertable sites of the squared distance to the nearest
    triangle vertex, for the triangle {0, (a,b), (-b,a+b)}."""
    P = _insertable_array(a, b, (0, 0), (a, b))
    if len(P) == 0:
        return None
    best = None
    for v in ((0, 0), (a, b), (-b, a + b)):
        dm = P[:, 0] - v[0]
        dn = P[:, 1] - v[1]
        d = int((dm * dm + dm * dn + dn * dn).min())
        best = d if best is None else min(best, d)
    return best


@dataclass(frozen=True)
class ScanRow:
    n: int
    case: str
    classes: tuple[tuple[int, int], ...]
    pair_counts: tuple[int, ...]
    dominant: tuple[int, int] | None
    unique_dominant: bool
    heuristic_class: tuple[int, int] | None
    heuristic_min_dist2: int | None
    heuristic_match: bool


def heuristic_class(n: int):
    """The class whose insertable triangle holds the site nearest a vertex.

    Returns (class or None on a tie, min squared distance).  Minimizes over
    all three triangle vertices; the wording leaves the vertex unspecified.
    """
    classes = loeschian_representations(n)
    per = [(_heuristic_min_dist2(a, b), (a, b)) for a, b in classes]
    per = [(d, c) for d, c in per if d is not None]
    if not per:
        return None, None
    best = min(d for d, _ in per)
    winners = [c for d, c in per if d == best]
    return (winners[0] if len(winners) == 1 else None), best


def _scan_one(n: int) -> ScanRow | None:
    classes = tuple(loeschian_representations(n))
    counts = tuple(_pair_count(a, b) for a, b in classes)
    best = max(counts)
    winners = [c for c, k in zip(classes, counts) if k == best]
    unique = len(winners) == 1
    dominant = winners[0] if unique else None
    h_class, h_dist = heuristic_class(n)
    return ScanRow(
        n,
        classify_diameter(n).case,
        classes,
        counts,
        dominant,
        unique,
        h_class,
        h_dist,
        h_class is not None and h_class == dominant,
    )


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("HCT_JOBS", "1")))
    except ValueError:
        return 1


def scan_dominance(max_n: int, min_classes: int = 2, jobs: int | None = None):
    """Yield one ScanRow per attainable n <= max_n with >= min_classes classes,
    in ascending n.  Output is independent of the worker count."""
    if jobs is None:
        jobs = default_jobs()
    targets = [
        n
        for n in range(1, max_n + 1)
        if is_attainable(n) and len(loeschian_representations(n)) >= min_classes
    ]
    if jobs <= 1:
        for n in targets:
            yield _scan_one(n)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, so the merge is deterministic by n
        yield from pool.map(_scan_one, targets, chunksize=16)


def _fmt_class(c) -> str:
    return "" if c is None else f"{c[0]}:{c[1]}"


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        [
            "n", "case", "num_classes", "classes", "pair_counts", "dominant",
            "unique_dominant", "heuristic_class", "heuristic_min_dist2",
            "heuristic_match",
        ]
    )
    for r in rows:
        w.writerow(
            [
                r.n,
                r.case,
                len(r.classes),
                ";".join(_fmt_class(c) for c in r.classes),
                ";".join(str(k) for k in r.pair_counts),
                _fmt_class(r.dominant),
                str(r.unique_dominant).lower(),
                _fmt_class(r.heuristic_class),
                "" if r.heuristic_min_dist2 is None else r.heuristic_min_dist2,
                str(r.heuristic_match).lower(),
            ]
        )
    return buf.getvalue()


def row_to_json_dict(r: ScanRow) -> dict:
    return {
        "n": r.n,
        "case": r.case,
        "num_classes": len(r.classes),
        "classes": [list(c) for c in r.classes],
        "pair_counts": list(r.pair_counts),
        "dominant": list(r.dominant) if r.dominant else None,
        "unique_dominant": r.unique_dominant,
        "heuristic_class": list(r.heuristic_class) if r.heuristic_class else None,
        "heuristic_min_dist2": r.heuristic_min_dist2,
        "heuristic_match": r.heuristic_match,
    }


def rows_to_json_stream(rows) -> str:
    return "".join(json.dumps(row_to_json_dict(r)) + "\n" for r in rows)
