"""Command-line front end.

Exit status: 0 on success, 2 on usage errors (argparse), 1 when the
computation itself fails.  With ``--format json`` failures are reported as
a JSON object on stdout as well.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classify import (
    ClassificationError,
    ClassificationReport,
    Level,
    classify,
    cox_descriptor,
    mds_bidegree_region,
)
from .cohomology import h0_X, koszul_hilbert, CoxPresentation
from .cones import ConeError
from .git import GITError, NotStabilizedError, WeightSystem, chamber_fan
from .hypersurface import (
    AmbientProduct,
    Hypersurface,
    IndeterminacyError,
    NotOnVarietyError,
    cox_equations,
    flip_backward,
    flip_forward,
    hypersurface_from_text,
    intersection_number,
    parse_point,
    sample_points,
    standard_slices,
)
from .polyalg import BudgetExceeded, format_poly

SCHEMA = 1

COMPUTATION_ERRORS = (
    BudgetExceeded, IndeterminacyError, NotOnVarietyError, NotStabilizedError,
    ClassificationError, GITError, ConeError, ValueError, RuntimeError,
)


def int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def class_list(text: str) -> list[tuple[int, ...]]:
    return [int_list(part) for part in text.split(";")]


def level_arg(text: str) -> Level:
    try:
        return Level.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------------------------------------------------------
# output


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _fmt_vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def report_text(r: ClassificationReport) -> str:
    rows = [
        ("ambient", " x ".join(f"P^{n}" for n in r.ambient)),
        ("multidegree", _fmt_vec(r.multidegree)),
        ("level", r.level.label),
        ("case_tag", r.case_tag),
        ("mds", r.mds_status.value),
        ("required_level", r.required_level.label),
        ("picard_rank", "?" if r.picard_rank is None else str(r.picard_rank)),
        ("canonical", _fmt_vec(r.canonical)),
        ("eff", str(r.eff) if r.eff else "-"),
        ("mov", str(r.mov) if r.mov else "-"),
        ("nef", str(r.nef) if r.nef else "-"),
    ]
    for c in r.mov_chambers:
        rows.append(("chamber", f"{c.label}: {c.cone}"))
    if r.cox is not None:
        gens = " + ".join(f"{c}x{_fmt_vec(deg)}" for _, c, deg in r.cox.blocks)
        rels = ", ".join(_fmt_vec(d) for d in r.cox.relation_degrees)
        rows.append(("cox", f"generators {gens}; relations {rels}"))
    if r.eff_lower_bound is not None:
        rows.append(("eff_lower_bound", str(r.eff_lower_bound)))
    for note in r.notes:
        rows.append(("note", note))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def report_tsv(r: ClassificationReport) -> str:
    obj = r.to_json()
    lines = []
    for k, v in obj.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v, separators=(",", ":"))
        lines.append(f"{k}\t{'' if v is None else v}")
    return "\n".join(lines)


def emit_report(report: ClassificationReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (dump_json(report.to_json()) + "\n").encode()
    if fmt == "tsv":
        return (report_tsv(report) + "\n").encode()
    return (report_text(report) + "\n").encode()


def _table(rows: list[list], header: list[str], fmt: str) -> str:
    if fmt == "tsv":
        return "\n".join("\t".join(str(c) for c in row) for row in [header] + rows)
    cells = [[str(c) for c in row] for row in [header] + rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


# ---------------------------------------------------------------------------
# subcommands; each returns the text to print


def cmd_classify(args) -> str:
    r = classify(AmbientProduct(args.factors), args.degree, args.level)
    return emit_report(r, args.format).decode().rstrip("\n")


def cmd_classify_grid(args) -> str:
    grid = mds_bidegree_region(args.n, args.dmax, args.emax, args.level)
    if args.format == "json":
        return dump_json({
            "schema": SCHEMA, "n": args.n, "level": args.level.label,
            "cells": [{"d": d, "e": e, "mds": s.value} for (d, e), s in sorted(grid.items())],
        })
    short = {"yes": "Y", "no": "N", "conditional": "c", "out_of_classification": "?"}
    header = ["d\\e"] + [str(e) for e in range(1, args.emax + 1)]
    rows = [[d] + [short[grid[d, e].value] for e in range(1, args.emax + 1)] for d in range(1, args.dmax + 1)]
    return _table(rows, header, args.format)


def cmd_hilbert(args) -> str:
    d, e, n = args.d, args.e, args.n
    X = Hypersurface.p1pn(d, e, n)
    P = CoxPresentation.p1pn(d, e, n) if d <= n else None
    rows = []
    for a in range(args.amin, args.amax + 1):
        for b in range(args.bmin, args.bmax + 1):
            h = h0_X(X, (a, b))
            k = koszul_hilbert(P, (a, b)) if P else None
            rows.append((a, b, h, k))
    if args.format == "json":
        return dump_json({
            "schema": SCHEMA, "d": d, "e": e, "n": n,
            "rows": [{"a": a, "b": b, "h0": h if isinstance(h, int) else str(h), "koszul": k}
                     for a, b, h, k in rows],
        })
    return _table([[a, b, h, "-" if k is None else k] for a, b, h, k in rows], ["a", "b", "h0", "koszul"], args.format)


def _flip_variety(args) -> Hypersurface:
    if args.f:
        X = hypersurface_from_text(args.f, args.n, args.mod)
        if (X.d, X.e) != (args.d, args.e):
            raise ValueError(f"form has bidegree {(X.d, X.e)}, expected {(args.d, args.e)}")
        return X
    return Hypersurface.from_slices(standard_slices(args.d, args.e, args.n, args.mod), args.e)


def cmd_flip_eval(args) -> str:
    X = _flip_variety(args)
    step = flip_backward if args.inverse else flip_forward
    if args.point:
        points = [parse_point(args.point, args.mod)]
    else:
        points = sample_points(X, args.count, args.mod, args.seed)
        if args.inverse:
            # sampled points live on X; move them to X+ first
            points = [flip_forward(X, p) for p in points]
    pairs = [(p, step(X, p)) for p in points]
    if args.format == "json":
        return dump_json({
            "schema": SCHEMA, "direction": "inverse" if args.inverse else "forward", "modulus": args.mod,
            "pairs": [{"point": p.to_json(), "image": q.to_json()} for p, q in pairs],
        })
    if args.format == "tsv":
        return "\n".join(f"{p}\t{q}" for p, q in pairs)
    return "\n".join(f"{p} -> {q}" for p, q in pairs)


def cmd_git_chambers(args) -> str:
    W = WeightSystem.standard(args.d, args.e, args.n)
    fan = chamber_fan(W, args.bound)
    if args.format == "json":
        return dump_json({"schema": SCHEMA, "weights": W.to_json(), "chambers": [c.to_json() for c in fan]})
    lines = []
    for c in fan:
        kind = "wall" if c.wall else "chamber"
        gens = ", ".join("*".join(m) for m in c.generators)
        if args.format == "tsv":
            lines.append(f"{c.label}\t{kind}\t{c.cone}\t{gens}")
        else:
            lines.append(f"{c.label:<3} {kind:<8} {c.cone}\n    B = ({gens})")
    return "\n".join(lines)


def cmd_intersect(args) -> str:
    X = Hypersurface(AmbientProduct(args.factors), args.degree)
    if args.classes is not None:
        classes = args.classes
    elif args.power is not None:
        classes = [args.power] * X.dim
    else:
        raise ValueError("give --classes or --power")
    value = intersection_number(X, classes)
    if args.format == "json":
        return dump_json({"schema": SCHEMA, "classes": [list(c) for c in classes], "degree": value})
    return str(value)


def cmd_cox(args) -> str:
    r = classify(AmbientProduct(args.factors), args.degree, args.level)
    P = cox_descriptor(r)
    relations = []
    if P is not None and args.equations:
        if not any(prefix == "z" for prefix, _, _ in P.blocks):
            raise ValueError("explicit equations are only produced for the P^1 x P^n presentation")
        d, e = args.degree
        n = args.factors[1]
        X = Hypersurface.from_slices(standard_slices(d, e, n), e)
        relations = [format_poly(g) for g in cox_equations(X)]
    if args.format == "json":
        obj = {"schema": SCHEMA, "case_tag": r.case_tag, "cox": None if P is None else P.to_json()}
        if P is not None:
            obj["cox"]["relations"] = relations
            obj["krull_dimension"] = P.krull_dimension
        return dump_json(obj)
    if P is None:
        return f"{r.case_tag}: no explicit Cox presentation"
    lines = [f"case_tag {r.case_tag}"]
    for prefix, count, deg in P.blocks:
        lines.append(f"{prefix}\t{count}\t{_fmt_vec(deg)}" if args.format == "tsv"
                     else f"{prefix}: {count} of degree {_fmt_vec(deg)}")
    degs = ", ".join(_fmt_vec(d) for d in P.relation_degrees)
    lines.append(f"relations\t{degs}" if args.format == "tsv" else f"{P.relation_count} relations of degrees {degs}")
    lines.extend(relations)
    return "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxcones", description="Cones, Cox rings and flips of hypersurfaces "
                                     "in products of projective spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
        p.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
        return p

    p = add("classify", cmd_classify, "Mori dream space status and cones of one hypersurface")
    p.add_argument("--factors", type=int_list, required=True, help="factor dimensions, e.g. 1,3")
    p.add_argument("--degree", type=int_list, required=True, help="multidegree, e.g. 2,2")
    p.add_argument("--level", type=level_arg, default=Level.GENERAL,
                   help="arbitrary | general | very_general (default general)")

    p = add("classify-grid", cmd_classify_grid, "status matrix over bidegrees on P^1 x P^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--emax", type=int, default=6)
    p.add_argument("--level", type=level_arg, default=Level.VERY_GENERAL)

    p = add("hilbert", cmd_hilbert, "h^0(X, aH1+bH2) next to the Cox ring Hilbert function")
    for flag in ("--d", "--e", "--n"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--amin", type=int, default=-1)
    p.add_argument("--amax", type=int, default=5)
    p.add_argument("--bmin", type=int, default=0)
    p.add_argument("--bmax", type=int, default=6)

    p = add("flip-eval", cmd_flip_eval, "evaluate the flip X --> X+ (or its inverse) at points")
    for flag in ("--d", "--e", "--n"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--f", help="defining form in x0,x1,y0..yn (default: sum of x-monomials times y_i^e)")
    p.add_argument("--point", help='point such as "1,1;1,2,0,0"; sampled when omitted')
    p.add_argument("--count", type=int, default=5, help="number of sampled points")
    p.add_argument("--inverse", action="store_true", help="apply X+ --> X instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mod", type=int, default=10007)

    p = add("git-chambers", cmd_git_chambers, "GIT chambers, walls and irrelevant ideals of the Cox ring grading")
    for flag in ("--d", "--e", "--n"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--bound", type=int, default=None, help="enumeration degree bound")

    p = add("intersect", cmd_intersect, "intersection number of divisor classes on X")
    p.add_argument("--factors", type=int_list, required=True)
    p.add_argument("--degree", type=int_list, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--classes", type=class_list, help='classes separated by ";", e.g. "1,0;0,1;0,1"')
    group.add_argument("--power", type=int_list, help="one class taken dim X times")

    p = add("cox", cmd_cox, "Cox ring presentation")
    p.add_argument("--factors", type=int_list, required=True)
    p.add_argument("--degree", type=int_list, required=True)
    p.add_argument("--level", type=level_arg, default=Level.GENERAL)
    p.add_argument("--equations", action="store_true", help="print relations for f_i = y_i^e")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except COMPUTATION_ERRORS as exc:
        if args.format == "json":
            out.write(dump_json({"schema": SCHEMA, "error": {"type": type(exc).__name__, "message": str(exc)}}) + "\n")
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    out.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
