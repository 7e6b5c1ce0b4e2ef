"""Command-line front end.

Every subcommand assembles a report dict; ``--json`` prints it as JSON, the
default renders the same data as ``key = value`` lines.  Exit codes: 0 on
success, 1 when a verification or assertion fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, groebner, homalg, session
from .catalog import FamilySpec, instantiate, named_point
from .extsolver import (ExtProblem, build_extension, solve_extensions,
                        stability_dimension, twist_scan)
from .matfac import (CurvePoint, GradedMatrix, fitting_ideal,
                     locally_free_test, mf_verify)
from .matio import (load_matrix, matrix_to_json, matrix_to_text,
                    parse_ring_spec)
from .rings import f_polynomial, nodal_ring


def parse_point(text):
    if text in catalog.NAMED_POINTS:
        return named_point(text)
    if text in ("inf", "infinity"):
        return CurvePoint.infinity()
    if text == "parametric":
        return CurvePoint.parametric()
    try:
        l1, l2 = (Fraction(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(f"cannot parse point {text!r}")
    return CurvePoint.affine(l1, l2)


def matrix_source(text):
    """Matrix factorization from ``family@params`` or the A-side of a file."""
    if "@" in text or text in catalog.FAMILIES:
        name, _, arg = text.partition("@")
        if name not in catalog.FAMILIES:
            raise SystemExit(f"unknown family {name!r}")
        params = catalog.FAMILIES[name]["params"]
        if params == "point":
            spec = FamilySpec(name, point=parse_point(arg or "xi"))
        elif params == "m":
            spec = FamilySpec(name, m=int(arg or 1))
        else:
            spec = FamilySpec(name)
        return instantiate(spec)
    m = load_matrix(text)
    from .matfac import make_mf
    return make_mf(m, f_polynomial(m.ring))


def render(report, as_json):
    if as_json:
        return json.dumps(report, indent=2, default=str)
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, (list, tuple)):
            if all(not isinstance(v, (dict, list, tuple)) for v in value):
                lines.append(f"{prefix} = {', '.join(str(v) for v in value)}")
            else:
                for i, v in enumerate(value):
                    walk(f"{prefix}[{i}]", v)
        else:
            lines.append(f"{prefix} = {value}")

    walk("", report)
    return "\n".join(lines)


def _ideal_report(gens):
    return [str(g) for g in gens]


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="gradedmf",
        description="Graded matrix factorizations over the nodal-cubic "
                    "hypersurface: verification, extensions, catalog replay.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="Groebner basis of an ideal")
    p.add_argument("--ring", default="nodal")
    p.add_argument("gens", help="generators separated by ';'")

    p = sub.add_parser("nf", help="normal form of a polynomial")
    p.add_argument("--ring", default="nodal")
    p.add_argument("poly")
    p.add_argument("gens", help="ideal generators separated by ';'")

    p = sub.add_parser("ideal-eq", help="compare two ideals")
    p.add_argument("--ring", default="nodal")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("verify", help="verify a matrix factorization")
    p.add_argument("source", help="family@params or matrix file")
    p.add_argument("--partner", help="matrix file for the B side")

    p = sub.add_parser("adjoint", help="adjugate of a square matrix")
    p.add_argument("source")

    p = sub.add_parser("fitting", help="Fitting ideal of a matrix")
    p.add_argument("source")
    p.add_argument("--index", type=int, required=True)

    p = sub.add_parser("locally-free", help="freeness along the singular line")
    p.add_argument("source")
    p.add_argument("--rank", type=int, default=None)

    p = sub.add_parser("ext", help="extension space of two factorizations")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--twist", type=int, default=0)
    p.add_argument("--twist-range", help="lo:hi scan instead of one solve")
    p.add_argument("--build", action="store_true",
                   help="emit the block factorization of the first basis element")

    p = sub.add_parser("stability", help="self-extension dimension")
    p.add_argument("source")

    p = sub.add_parser("tensor", help="reflexive hull of a tensor product")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("reflexive-hull", help="double dual presentation")
    p.add_argument("source")

    p = sub.add_parser("m2", help="the rank-two second-syzygy factorization")

    p = sub.add_parser("catalog", help="catalog operations")
    p.add_argument("action", choices=["list", "show", "verify"])
    p.add_argument("family", nargs="?")
    p.add_argument("--point", default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--points", default=None,
                   help="comma-separated named points or l1,l2 pairs joined by ';'")

    p = sub.add_parser("session", help="replay session scripts")
    p.add_argument("action", choices=["run"])
    p.add_argument("scripts", nargs="+")

    args = parser.parse_args(argv)
    try:
        report, ok = _dispatch(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(report, args.json))
    return 0 if ok else 1


def _dispatch(args):
    cmd = args.command
    if cmd == "gb":
        ring = parse_ring_spec(args.ring)
        gens = [ring.parse(g) for g in args.gens.split(";") if g.strip()]
        basis = groebner.groebner_basis(gens, ring)
        return {"command": "gb", "basis": _ideal_report(basis)}, True
    if cmd == "nf":
        ring = parse_ring_spec(args.ring)
        gens = [ring.parse(g) for g in args.gens.split(";") if g.strip()]
        basis = groebner.groebner_basis(gens, ring)
        nf = groebner.normal_form(ring.parse(args.poly), basis)
        return {"command": "nf", "normal_form": str(nf)}, True
    if cmd == "ideal-eq":
        ring = parse_ring_spec(args.ring)
        gens_a = [ring.parse(g) for g in args.a.split(";") if g.strip()]
        gens_b = [ring.parse(g) for g in args.b.split(";") if g.strip()]
        equal = groebner.ideal_equal(gens_a, gens_b, ring)
        return {"command": "ideal-eq", "equal": equal}, equal
    if cmd == "verify":
        mf = matrix_source(args.source)
        if args.partner:
            b = load_matrix(args.partner, ring=mf.a.ring)
        else:
            b = mf.b
        report = mf_verify(mf.a, b, f_polynomial(mf.a.ring))
        return ({"command": "verify", "source": args.source, "ok": report.ok,
                 "rank": report.rank, "failures": report.failures}, report.ok)
    if cmd == "adjoint":
        mf = matrix_source(args.source)
        return ({"command": "adjoint",
                 "matrix": matrix_to_json(mf.a.adjugate())}, True)
    if cmd == "fitting":
        mf = matrix_source(args.source)
        fit = fitting_ideal(mf.a, args.index)
        return ({"command": "fitting", "index": args.index,
                 "generators": _ideal_report(fit.gens)}, True)
    if cmd == "locally-free":
        mf = matrix_source(args.source)
        rank = args.rank if args.rank is not None else mf.rank
        lf = locally_free_test(mf.a, rank)
        rep = {"command": "locally-free", "verdict": lf.verdict}
        if lf.condition is not None:
            rep["condition"] = _ideal_report(lf.condition.gens)
        return rep, True
    if cmd == "ext":
        left = matrix_source(args.left)
        right = matrix_source(args.right)
        if args.twist_range:
            lo, hi = (int(x) for x in args.twist_range.split(":"))
            dims = twist_scan(left, right, range(lo, hi + 1))
            return ({"command": "ext", "scan": {str(k): v for k, v in dims.items()}},
                    True)
        problem = ExtProblem(left, right, args.twist)
        space = solve_extensions(problem)
        rep = {"command": "ext", "twist": args.twist,
               "template": problem.template,
               "solution_dimension": len(space.solution_coords),
               "quotient_dimension": space.quotient_dimension,
               "basis": [matrix_to_json(d) for d in space.solution_basis()]}
        if args.build and space.solution_coords:
            mf = build_extension(problem, space.solution_basis()[0])
            rep["factorization"] = {"a": matrix_to_json(mf.a),
                                    "b": matrix_to_json(mf.b),
                                    "rank": mf.rank}
        return rep, True
    if cmd == "stability":
        mf = matrix_source(args.source)
        dim = stability_dimension(mf)
        return ({"command": "stability", "dimension": dim, "stable": dim == 1},
                True)
    if cmd == "tensor":
        a = matrix_source(args.a)
        b = matrix_source(args.b)
        out = homalg.tensor_cm(a.a, b.a)
        return ({"command": "tensor", "rows": out.nrows, "cols": out.ncols,
                 "matrix": matrix_to_json(out)}, True)
    if cmd == "reflexive-hull":
        mf = matrix_source(args.source)
        out = homalg.reflexive_hull(mf.a)
        return ({"command": "reflexive-hull", "rows": out.nrows,
                 "cols": out.ncols, "matrix": matrix_to_json(out)}, True)
    if cmd == "m2":
        mf = homalg.build_M2()
        return ({"command": "m2", "rank": mf.rank,
                 "a": matrix_to_json(mf.a), "b": matrix_to_json(mf.b)}, True)
    if cmd == "catalog":
        if args.action == "list":
            return ({"command": "catalog", "families": catalog.FAMILY_NAMES}, True)
        if args.action == "show":
            if not args.family:
                raise ValueError("catalog show needs a family name")
            data = catalog.FAMILIES[args.family]
            spec = FamilySpec(args.family,
                              point=parse_point(args.point) if args.point else (
                                  named_point("xi") if data["params"] == "point" else None),
                              m=args.m if args.m is not None else (
                                  1 if data["params"] == "m" else None))
            mf = instantiate(spec)
            rep = {"command": "catalog", "family": spec.label(),
                   "rank": mf.rank, "size": mf.size,
                   "a": matrix_to_json(mf.a), "b": matrix_to_json(mf.b)}
            if "notes" in data:
                rep["notes"] = data["notes"]
            return rep, True
        points = None
        if args.points:
            points = [parse_point(p) for p in args.points.split(";") if p.strip()]
        report = catalog.verify_catalog(points=points,
                                        ms=tuple(range(1, args.m_max + 1)))
        summary = {"command": "catalog", "ok": report["ok"],
                   "instances": [{"label": r["label"], "ok": r["ok"]}
                                 for r in report["instances"]]}
        return summary, report["ok"]
    if cmd == "session":
        reports = [session.run_file(path) for path in args.scripts]
        ok = all(r["ok"] for r in reports)
        return {"command": "session", "ok": ok, "reports": reports}, ok
    raise ValueError(f"unknown command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
