"""Command-line interface.  Exit codes: 0 success, 1 domain error, 2 usage."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import configurations, eisenstein, excitations, forces, lattice, scanner, svg
from .errors import HctError


def _parse_class(text: str) -> lattice.Sublattice:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return lattice.Sublattice(a, b)


def _parse_viewport(text: str):
    try:
        parts = tuple(int(t) for t in text.split(","))
        if len(parts) != 4:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'm_lo,m_hi,n_lo,n_hi', got {text!r}") from None
    return parts


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_classify(args) -> int:
    dc = eisenstein.classify_diameter(args.n)
    _emit(
        {
            "n": dc.n,
            "case": dc.case,
            "representations": [list(r) for r in dc.representations],
            "ground_states": eisenstein.ground_state_count(args.n),
        }
    )
    return 0


def _cmd_reps(args) -> int:
    _emit({"n": args.n, "representations": [list(r) for r in eisenstein.loeschian_representations(args.n)]})
    return 0


def _cmd_ground_states(args) -> int:
    descriptors = lattice.enumerate_ground_states(args.n)
    by_class: dict = {}
    for gs in descriptors:
        key = f"{gs.sublattice.a},{gs.sublattice.b}"
        by_class[key] = by_class.get(key, 0) + 1
    _emit({"n": args.n, "count": len(descriptors), "by_class": by_class})
    return 0


def _cmd_defects(args) -> int:
    counts = excitations.count_defects(lattice.Sublattice(args.a, args.b))
    _emit({"pairs": counts.pairs, "triples": counts.triples, "quadruples": counts.quadruples})
    return 0


def _load_family(name: str) -> forces.ForceFamily:
    if name in ("d7", "d13", "d147"):
        return forces.builtin_force_family(name)
    return forces.parse_force_family(Path(name).read_text(), name=name)


def _frac(v) -> str:
    return f"{v.numerator}/{v.denominator}"


def _cmd_forces_verify(args) -> int:
    fam = _load_family(args.family)
    out: dict = {"family": args.family, "n": fam.n}
    if args.sublattice is not None:
        tri_ok, _ = forces.verify_inserted_triangle_types(fam, args.sublattice)
        lens_ok, _ = forces.verify_inserted_lens_types(fam, args.sublattice)
        out["sublattice"] = [args.sublattice.a, args.sublattice.b]
        out["triangle_types_proper"] = tri_ok
        out["lens_types_proper"] = lens_ok
    if args.removed_types:
        report = forces.verify_removed_types(fam)
        out["removed_types"] = forces.report_to_json_dict(report)
    _emit(out)
    return 0


def _cmd_forces_min_delta(args) -> int:
    fam = _load_family(args.family)
    delta, (rp, rq) = forces.min_delta_nondeletable(fam, args.sublattice)
    print(f"{_frac(delta)} (f[{rp}], f[{rq}])")
    return 0


def _cmd_scan(args) -> int:
    rows = scanner.scan_dominance(args.max_n, jobs=args.jobs)
    if args.json:
        text = scanner.rows_to_json_stream(rows)
    else:
        text = scanner.rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_contours(args) -> int:
    config = configurations.parse_configuration(Path(args.config).read_text())
    supports = configurations.contour_supports(config)
    _emit(
        {
            "n": config.n,
            "admissible": configurations.is_admissible(config),
            "supports": [
                {
                    "parallelograms": [list(kl) for kl in sorted(s.parallelograms)],
                    "restriction": [list(x) for x in sorted(s.restriction)],
                }
                for s in supports
            ],
        }
    )
    return 0


def _cmd_render(args) -> int:
    config = None
    if args.config:
        config = configurations.parse_configuration(Path(args.config).read_text())
    spec = svg.RenderSpec(
        mode=args.mode,
        sublattice=args.sublattice,
        configuration=config,
        viewport=args.viewport,
    )
    doc = svg.render_svg(spec)
    if args.out:
        Path(args.out).write_text(doc)
    else:
        sys.stdout.write(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hct",
        description="Exact arithmetic for hard-core configurations on the triangular lattice",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="case classification of a squared diameter")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("reps", help="representations a^2+ab+b^2 = n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_reps)

    sp = sub.add_parser("ground-states", help="ground-state census for n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_ground_states)

    sp = sub.add_parser("defects", help="pair/triple/quadruple defect counts for class (a,b)")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.set_defaults(func=_cmd_defects)

    fp = sub.add_parser("forces", help="force-family verification")
    fsub = fp.add_subparsers(dest="forces_command", required=True)

    sp = fsub.add_parser("verify", help="properness checks")
    sp.add_argument("--family", required=True, help="d7, d13, d147, or a file path")
    sp.add_argument("--sublattice", type=_parse_class, default=None, metavar="a,b")
    sp.add_argument("--removed-types", action="store_true")
    sp.set_defaults(func=_cmd_forces_verify)

    sp = fsub.add_parser("min-delta", help="minimal deficit over non-deletable parallelograms")
    sp.add_argument("--family", required=True)
    sp.add_argument("--sublattice", type=_parse_class, required=True, metavar="a,b")
    sp.set_defaults(func=_cmd_forces_min_delta)

    sp = sub.add_parser("scan", help="dominance scan over attainable n")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--out", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("contours", help="contour supports of a configuration file")
    sp.add_argument("--config", required=True)
    sp.set_defaults(func=_cmd_contours)

    sp = sub.add_parser("render", help="SVG rendering")
    sp.add_argument("--mode", required=True, choices=["sublattice", "defect-geometry", "contours"])
    sp.add_argument("--sublattice", type=_parse_class, default=None, metavar="a,b")
    sp.add_argument("--config", default=None)
    sp.add_argument("--viewport", type=_parse_viewport, default=None, metavar="m0,m1,n0,n1")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_render)

    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "jobs", "absent") is None and "HCT_JOBS" in os.environ:
        args.jobs = scanner.default_jobs()
    try:
        return args.func(args)
    except HctError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
