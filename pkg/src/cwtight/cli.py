"""Command-line front end: ``cwtight <subcommand> ...``.

Exit status is 0 on success, 2 for unreadable or malformed input and 3 when
the input is well formed but violates a precondition of the computation.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

from . import __version__
from .complex import codim1_cohomology, loads_complex, top_cohomology
from .deficient import deficient_set
from .degree import degree_density_verdict, degree_report, loads_map
from .errors import CwTightError, InputError
from .tightness import is_tight

DEFAULT_SEED = 20240101
EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 2, 3


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write_atomic(path: str, text: str) -> None:
    # write beside the target and rename, so a failed run leaves nothing behind
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cwtight-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_complex(path):
    try:
        return loads_complex(_read(path))
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_map(path, K):
    try:
        return loads_map(_read(path), K)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


# -- subcommands: each returns (structured dict, human text) -----------------

def cmd_cohomology(args):
    K = _load_complex(args.complex)
    top = top_cohomology(K)
    low = codim1_cohomology(K)
    doc = {
        "n": K.n,
        "cells": K.m,
        "spheres": K.k,
        "topCohomology": {"freeRank": top.free_rank, "torsion": list(top.torsion), "text": str(top)},
        "codimOneCohomology": {
            "freeRank": low.group.free_rank,
            "torsion": list(low.group.torsion),
            "text": str(low.group),
            "abelianizedAttaching": low.abelianized_attaching,
        },
    }
    lines = [f"H^{K.n} = {top}", f"H^{K.n - 1} = {low.group}"]
    if low.abelianized_attaching:
        lines.append("  (n = 2: computed from abelianized attaching words)")
    return doc, "\n".join(lines)


def cmd_tight(args):
    K = _load_complex(args.complex)
    report = is_tight(K)
    cells = []
    lines = []
    for v in report.per_cell:
        witness = list(v.witness.coefficients) if v.witness is not None else None
        cells.append({"cell": v.cell, "removalInjective": v.injective, "witness": witness})
        note = f"  witness {witness}" if witness is not None else ""
        lines.append(f"cell {v.cell}: removal injective = {str(v.injective).lower()}{note}")
    lines.append(f"n-tight: {str(report.tight).lower()}")
    return {"cells": cells, "tight": report.tight}, "\n".join(lines)


def _degree_doc(f):
    rep = degree_report(f)
    check = degree_density_verdict(f)
    doc = {
        "degree": {"value": rep.deg_class.value, "modulus": rep.deg_class.modulus, "text": str(rep.deg_class)},
        "kPerCell": list(rep.k_per_cell),
        "kf": rep.kf,
        "absoluteDegree": rep.absolute_degree,
        "densityVerdict": check.verdict.value,
        "verdictReason": check.reason,
    }
    lines = [
        f"deg f = {rep.deg_class}",
        f"k per cell = {list(rep.k_per_cell)}",
        f"k_f = {rep.kf}, A(f) = {rep.absolute_degree}",
        f"verdict: {check.verdict.value} ({check.reason})",
    ]
    return doc, lines


def cmd_degree(args):
    K = _load_complex(args.complex)
    f = _load_map(args.map, K)
    doc, lines = _degree_doc(f)
    return doc, "\n".join(lines)


def cmd_deficient(args):
    K = _load_complex(args.complex)
    f = _load_map(args.map, K)
    doc, lines = _degree_doc(f)
    desc = deficient_set(f)
    regions = []
    for r in desc.reports:
        regions.append({
            "region": str(r.region),
            "preimageCount": r.preimage_count,
            "essentialExact": r.essential_exact,
            "essentialUpperBound": r.essential_upper,
            "localClasses": [c.value for c in r.local_classes],
            "inEf": r.in_ef.value,
        })
        count = "non-discrete" if r.preimage_count is None else f"{r.preimage_count} preimage{'' if r.preimage_count == 1 else 's'}"
        lines.append(f"  {r.region}: {count}, in E_f: {r.in_ef.value}")
    members = [str(r.region) for r in desc.regions_in_ef]
    doc.update({"regions": regions, "ef": members, "efDimension": desc.dimension})
    lines.append("E_f = " + (" ∪ ".join(members) if members else "∅"))
    lines.append(f"dim E_f = {desc.dimension}")
    return doc, "\n".join(lines)


def cmd_sample(args):
    from .treemap import (
        BACKEND, assemble_complex_map, build_tree, point_cloud_csv, render_svg,
        sample_disc, single_point_stats, stage_map,
    )

    if args.samples < 1:
        raise InputError("--samples must be positive")
    if args.epsilon <= 0:
        raise InputError("--epsilon must be positive")
    if args.dim < 2:
        raise InputError("--dim must be at least 2")
    if args.cells < 1:
        raise InputError("--cells must be positive")
    if args.svg and args.dim != 2:
        raise InputError("--svg is only available for --dim 2")
    tree = build_tree(args.scale, args.angle, args.depth)
    assembly = assemble_complex_map(args.cells, tree, n=args.dim)
    points = sample_disc(args.dim, args.samples, args.seed)
    stages = []
    lines = [f"tree: scale {args.scale}, angle {args.angle}, depth {args.depth}, "
             f"{len(tree.starts)} segments, embedded"]
    if args.cells > 1:
        lines.append(f"{args.cells} rotated copies meet only at the origin")
    for m in range(args.depth + 1):
        g = stage_map(args.dim, tree, m)
        s = single_point_stats(g, args.samples, args.epsilon, args.seed, points=points)
        stages.append({
            "stage": m,
            "injectiveFraction": s.injective_fraction,
            "activeFraction": s.active_fraction,
            "epsCollisionFraction": s.eps_collision_fraction,
            "cauchyBound": g.cauchy_bound,
        })
        lines.append(f"stage {m}: injective {s.injective_fraction:.4f}  "
                     f"eps-collisions {s.eps_collision_fraction:.4f}")
    images, settled = g.evaluate(points)
    if args.out:
        _write_atomic(args.out, point_cloud_csv(points, images, settled))
    if args.svg:
        _write_atomic(args.svg, render_svg(tree, images, settled))
    doc = {
        "dim": args.dim,
        "depth": args.depth,
        "scale": args.scale,
        "angle": args.angle,
        "cells": args.cells,
        "samples": args.samples,
        "epsilon": args.epsilon,
        "seed": args.seed,
        "rho": g.rho,
        "offset": g.offset,
        "trunkLength": tree.trunk_length,
        "segments": len(tree.starts),
        "stages": stages,
    }
    lines.append(f"kernels: {BACKEND}")
    return doc, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cwtight", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "structured"), default="human")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def with_report(p):
        p.add_argument("--out", help="write the report here instead of stdout")
        return p

    p = with_report(sub.add_parser("cohomology", parents=[common], help="top and codimension-one cohomology"))
    p.add_argument("complex")
    p.set_defaults(func=cmd_cohomology)

    p = with_report(sub.add_parser("tight", parents=[common], help="decide n-tightness"))
    p.add_argument("complex")
    p.set_defaults(func=cmd_tight)

    for name, func, text in (("degree", cmd_degree, "degree invariants of a cellular map"),
                             ("deficient", cmd_deficient, "essentially deficient set of a cellular map")):
        p = with_report(sub.add_parser(name, parents=[common], help=text))
        p.add_argument("complex")
        p.add_argument("map")
        p.set_defaults(func=func)

    p = sub.add_parser("orevkov", aliases=["sample"], parents=[common], help="sample stage maps into a fractal tree")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--epsilon", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--scale", type=float, default=0.45)
    p.add_argument("--angle", type=float, default=math.pi / 4)
    p.add_argument("--cells", type=int, default=1, help="number of rotated tree copies")
    p.add_argument("--out", help="point-cloud table (CSV)")
    p.add_argument("--svg", help="SVG picture of the tree and images (dim 2 only)")
    p.set_defaults(func=cmd_sample, command="orevkov")
    return parser


def render(doc: dict, command: str, fmt: str, human: str) -> str:
    if fmt == "human":
        return human + "\n"
    body = {"command": command, "version": __version__, "result": doc}
    return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, human = args.func(args)
        text = render(doc, args.command, args.format, human)
        if getattr(args, "out", None) and args.func is not cmd_sample:
            _write_atomic(args.out, text)
        else:
            sys.stdout.write(text)
    except InputError as exc:
        print(f"cwtight: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CwTightError as exc:
        print(f"cwtight: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
