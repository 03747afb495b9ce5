"""Command line interface: ``chainlink <subcommand> ...``.

Exit codes: 0 success, 1 a check failed or a violation was found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import analysis, ehrhart, geometry, posets, transfer
from .compositions import parse_composition
from .errors import ChainlinkError, ConsistencyError
from .qpoly import QPolynomial, analyze_modality, analyze_symmetry


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# rendering


def _plain(obj, use_float: bool):
    if isinstance(obj, Fraction):
        return float(obj) if use_float else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, QPolynomial):
        return list(obj.coefficients)
    if isinstance(obj, dict):
        return {str(k): _plain(v, use_float) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v, use_float) for v in obj]
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json(), use_float)
    return obj


def _flat(v) -> bool:
    return not isinstance(v, dict) and not (isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v))


def _table(obj, prefix: str = "") -> list[str]:
    if _flat(obj):
        return [f"{prefix:<28} {_cell(obj)}"]
    items = obj.items() if isinstance(obj, dict) else ((f"[{i}]", v) for i, v in enumerate(obj))
    lines = []
    for k, v in items:
        key = f"{prefix}.{k}" if prefix and isinstance(obj, dict) else f"{prefix}{k}"
        lines.extend(_table(v, key))
    return lines


def _cell(v) -> str:
    if isinstance(v, list):
        return " ".join(_cell(x) for x in v)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _emit(result, args) -> None:
    data = _plain(result, args.float)
    if args.table:
        print("\n".join(_table(data)))
    else:
        print(json.dumps(data, indent=2))


# argument helpers


def _comp(text: str) -> tuple[int, ...]:
    try:
        return parse_composition(text)
    except ChainlinkError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _need_chainlink(args) -> tuple[tuple[int, ...], int]:
    if args.chainlink is None or args.link is None:
        raise UsageError("--chainlink A and --link L are required")
    return args.chainlink, args.link


def _integral_section(t: Fraction | None) -> int | None:
    if t is None:
        return None
    if t.denominator != 1:
        raise UsageError(f"--section must be an integer here, got {t}")
    return int(t)


def _poly_report(p: QPolynomial) -> dict:
    return {
        "coefficients": p,
        "symmetry": analyze_symmetry(p),
        "modality": analyze_modality(p),
    }


# subcommands; each returns (result, ok)


def cmd_rank_poly(args):
    chosen = [x is not None for x in (args.chainlink, args.circular_fence, args.fence)]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --chainlink, --circular-fence, --fence")
    if args.chainlink is not None:
        a, l = _need_chainlink(args)
        if args.bruteforce:
            p = posets.rank_polynomial_bruteforce(posets.build_chainlink_poset(a, l))
        elif args.lattice:
            p = geometry.lattice_generating_function(a, l)
        else:
            p = transfer.chainlink_rank_polynomial(a, l)
        head = {"chainlink": list(a), "link": l}
    elif args.circular_fence is not None:
        c = args.circular_fence
        if len(c) % 2:
            raise ChainlinkError(f"odd-length composition {c}")
        if args.bruteforce:
            p = posets.rank_polynomial_bruteforce(posets.build_circular_fence(c))
        else:
            p = transfer.circular_fence_rank_polynomial(c)
        head = {"circular_fence": list(c)}
    else:
        p = posets.rank_polynomial_bruteforce(posets.build_fence(args.fence))
        head = {"fence": list(args.fence)}
    return {**head, **_poly_report(p)}, True


def cmd_rank_matrix(args):
    if args.generator == "up":
        op, m = posets.oriented_up_step(), transfer.up_matrix()
    elif args.generator == "down":
        if args.bruteforce:
            raise UsageError("the down matrix is not the rank matrix of a single oriented poset")
        op, m = None, transfer.down_matrix()
    else:
        if args.size is None or len(args.size) != 2:
            raise UsageError("--size A,B is required for the box generator")
        op, m = posets.oriented_box(*args.size), transfer.box_matrix(*args.size)
    if args.bruteforce:
        m = posets.rank_matrix_bruteforce(op)
    out = {"generator": args.generator, "matrix": m, "trace": m.trace(), "det": m.det()}
    return out, True


def cmd_points(args):
    a, l = _need_chainlink(args)
    P = geometry.build_chainlink_hrep(a, l)
    out = {"chainlink": list(a), "link": l, "section": args.section, "dilation": args.dilate}
    if args.list:
        pts = geometry.enumerate_lattice_points(P, args.section, args.dilate)
        out["count"] = len(pts)
        out["points"] = [list(p) for p in pts]
    elif args.section is not None and args.section.denominator == 1 and 0 <= args.section <= sum(a):
        # both the lattice scan and, when 2l <= min(a), the rank polynomial
        out["count"] = ehrhart.count_dilated_section(a, l, int(args.section), args.dilate)
    else:
        out["count"] = geometry.count_lattice_points(P, args.section, args.dilate)
    if args.levels:
        out["levels"] = geometry.section_counts(P, args.dilate)
    return out, True


def cmd_vertices(args):
    a, l = _need_chainlink(args)
    out = {"chainlink": list(a), "link": l, "section": args.section}
    if args.section is not None:
        vs = geometry.section_vertices(a, l, args.section)
    else:
        vs = geometry.enumerate_vertices(geometry.build_chainlink_hrep(a, l))
        if 1 <= l and 2 * l <= min(a):
            out["trace_count"] = geometry.vertex_count_trace(a, l)
    out["count"] = len(vs.vertices)
    out["dimension"] = vs.dimension
    out["vertices"] = [list(v) for v in vs.vertices]
    ok = out.get("trace_count", out["count"]) == out["count"]
    return out, ok


def cmd_vertex_counts(args):
    A, B = geometry.vertex_transfer_matrices()
    out, ok = {}, True
    for name, M in (("A", A), ("B", B)):
        direct, rec = geometry.trace_power_sequences(M, args.s_max)
        out[name] = {"recurrence": geometry.characteristic_recurrence(M), "traces": direct, "by_recurrence": rec}
        ok &= direct == rec
    return out, ok


def cmd_structure(args):
    a, l = _need_chainlink(args)
    return geometry.combinatorial_structure(a, l), True


def cmd_volume(args):
    a, l = _need_chainlink(args)
    methods = {
        "trace": geometry.volume_trace,
        "inclexcl": geometry.volume_inclusion_exclusion,
        "ehrhart": ehrhart.ehrhart_volume,
    }
    return {"chainlink": list(a), "link": l, "method": args.method, "volume": methods[args.method](a, l)}, True


def cmd_ehrhart(args):
    a, l = _need_chainlink(args)
    t = _integral_section(args.section)
    if t is None:
        coeffs = ehrhart.full_ehrhart_polynomial(a, l)
        return {"chainlink": list(a), "link": l, "polynomial": list(coeffs), "volume": coeffs[-1]}, True
    qp = ehrhart.fit_section_quasipolynomial(a, l, t, force=args.force)
    out = {"chainlink": list(a), "link": l, "section": t, "quasipolynomial": qp}
    out["relative_volume"] = ehrhart.relative_volume(qp)
    return out, True


def cmd_symmetry(args):
    a, l = _need_chainlink(args)
    if args.all_sections:
        rep = ehrhart.check_complementary_symmetry(a, l, force=args.force)
        return rep, rep.ok
    if 2 * l > min(a):
        return _level_symmetry(a, l)
    p = transfer.chainlink_rank_polynomial(a, l)
    return {"chainlink": list(a), "link": l, **_poly_report(p)}, analyze_symmetry(p).symmetric


def _level_symmetry(a, l):
    counts = geometry.section_counts(geometry.build_chainlink_hrep(a, l))
    n = len(counts) - 1
    bad = [t for t in range(n + 1) if counts[t] != counts[n - t]]
    return {"chainlink": list(a), "link": l, "levels": counts, "violations": bad}, not bad


def cmd_order(args):
    chosen = [x is not None for x in (args.circular_fence, args.fence)]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --circular-fence, --fence")
    if args.circular_fence is not None:
        p = posets.build_circular_fence(args.circular_fence)
    else:
        p = posets.build_fence(args.fence)
    out = {"orientation": args.orientation, "dilation": args.dilate}
    if args.section is not None:
        out["section"] = args.section
        out["count"] = ehrhart.order_polytope_section_count(p, args.section, args.dilate, args.orientation)
    else:
        out["levels"] = ehrhart.order_polytope_section_counts(p, args.dilate, args.orientation)
    return out, True


def cmd_scan(args):
    if args.kind == "unimodality":
        res = analysis.unimodality_scan(args.max_total)
    elif args.kind == "fence":
        res = analysis.fence_unimodality_scan(args.max_total)
    else:
        bad = ehrhart.general_fence_symmetry_violations(args.max_total, tuple(range(1, args.max_dilate + 1)))
        return {"asymmetric": bad}, True
    if args.csv:
        sys.stdout.write(res.to_csv())
        return None, res.ok
    return res, res.ok


def cmd_recurrence(args):
    ok = analysis.verify_rank_recurrence(args.a, args.b, args.x)
    return {"a": args.a, "b": args.b, "X": list(args.x), "holds": ok}, ok


def cmd_stretch(args):
    a, l = _need_chainlink(args)
    rows = analysis.stretch_analysis(a, l, args.k)
    return {"chainlink": list(a), "link": l, "rows": rows}, all(r.symmetric for r in rows)


def cmd_identities(args):
    rep = transfer.verify_matrix_identities(args.amax, args.bmax)
    return rep, rep.ok


def cmd_repro(args):
    from .repro import run_repro

    rows = run_repro()
    ok = all(r["pass"] for r in rows)
    if args.json:
        return {"rows": rows, "ok": ok}, ok
    width = max(len(r["claim"]) for r in rows)
    for r in rows:
        print(f"{'PASS' if r['pass'] else 'FAIL'}  {r['claim']:<{width}}  {r['computed']}")
    return None, ok


# parser


def _chainlink_args(p):
    p.add_argument("--chainlink", type=_comp, metavar="A", help="composition a, e.g. 6,4,5")
    p.add_argument("--link", type=int, metavar="L", help="link number l")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--table", action="store_true", help="human-readable output")
    common.add_argument("--float", action="store_true", help="render rationals as decimals")

    parser = _Parser(prog="chainlink", description="Chainlink polytopes, fence posets and rank polynomials.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("rank-poly", cmd_rank_poly, "rank polynomial of a chainlink, circular fence or fence poset")
    _chainlink_args(p)
    p.add_argument("--circular-fence", type=_comp, metavar="C")
    p.add_argument("--fence", type=_comp, metavar="C")
    p.add_argument("--bruteforce", action="store_true", help="enumerate ideals instead of using matrices")
    p.add_argument("--lattice", action="store_true", help="count lattice points of the chainlink polytope")

    p = add("rank-matrix", cmd_rank_matrix, "generator rank matrices U, D and box(a, b)")
    p.add_argument("--generator", choices=["up", "down", "box"], required=True)
    p.add_argument("--size", type=_comp, metavar="A,B")
    p.add_argument("--bruteforce", action="store_true", help="classify the ideals of the oriented poset")

    p = add("points", cmd_points, "lattice points of a chainlink polytope")
    _chainlink_args(p)
    p.add_argument("--section", type=_fraction, metavar="T")
    p.add_argument("--dilate", type=int, default=1, metavar="K")
    p.add_argument("--count", action="store_true", help="only the count (default)")
    p.add_argument("--list", action="store_true", help="also list the points")
    p.add_argument("--levels", action="store_true", help="counts on every level sum(x)=m")

    p = add("vertices", cmd_vertices, "vertices of a chainlink polytope or section")
    _chainlink_args(p)
    p.add_argument("--section", type=_fraction, metavar="T")

    p = add("vertex-counts", cmd_vertex_counts, "traces of powers of the vertex transfer matrices")
    p.add_argument("--s-max", type=int, default=10)

    p = add("structure", cmd_structure, "facets, vertices and simplicity")
    _chainlink_args(p)

    p = add("volume", cmd_volume, "volume of a chainlink polytope")
    _chainlink_args(p)
    p.add_argument("--method", choices=["trace", "inclexcl", "ehrhart"], default="trace")

    p = add("ehrhart", cmd_ehrhart, "Ehrhart (quasi-)polynomial of the polytope or a section")
    _chainlink_args(p)
    p.add_argument("--section", type=_fraction, metavar="T")
    p.add_argument("--force", action="store_true", help="allow 2l > min(a)")

    p = add("symmetry", cmd_symmetry, "complementary-section symmetry")
    _chainlink_args(p)
    p.add_argument("--all-sections", action="store_true", help="fit and compare every section")
    p.add_argument("--force", action="store_true", help="allow 2l > min(a)")

    p = add("order", cmd_order, "sections of the order polytope of a fence")
    p.add_argument("--circular-fence", type=_comp, metavar="C")
    p.add_argument("--fence", type=_comp, metavar="C")
    p.add_argument("--section", type=_fraction, metavar="T")
    p.add_argument("--dilate", type=int, default=1, metavar="K")
    p.add_argument("--orientation", choices=["lower", "upper"], default="lower")

    p = add("scan", cmd_scan, "exhaustive scans")
    p.add_argument("kind", choices=["unimodality", "fence", "general-fence"])
    p.add_argument("--max-total", type=int, required=True, metavar="N")
    p.add_argument("--max-dilate", type=int, default=2, metavar="K")
    p.add_argument("--csv", action="store_true")

    p = add("recurrence", cmd_recurrence, "check the rank recurrence for R(a,1,b,X)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--x", type=_comp, required=True, metavar="X")

    p = add("stretch", cmd_stretch, "rank sequences of stretched chainlink posets")
    _chainlink_args(p)
    p.add_argument("--k", type=int, required=True, metavar="K")

    p = add("identities", cmd_identities, "matrix identities on a grid")
    p.add_argument("--amax", type=int, default=5)
    p.add_argument("--bmax", type=int, default=5)

    p = add("repro", cmd_repro, "reproduce every published value")
    p.add_argument("--json", action="store_true")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result, ok = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ChainlinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1
    if result is not None:
        _emit(result, args)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


# each library operation with a command line that reaches it
DISPATCH: dict[str, str] = {
    "qpoly.gaussian_binomial": "rank-matrix --generator box --size 2,3",
    "qpoly.analyze_symmetry": "rank-poly --circular-fence 1,1,1,1",
    "qpoly.analyze_modality": "rank-poly --circular-fence 1,1,1,1",
    "posets.build_fence": "rank-poly --fence 2,1,3",
    "posets.build_circular_fence": "rank-poly --circular-fence 2,1,1,2 --bruteforce",
    "posets.build_chainlink_poset": "rank-poly --chainlink 4,5 --link 2 --bruteforce",
    "posets.build_stretched_chainlink": "stretch --chainlink 2,2 --link 1 --k 1",
    "posets.rank_polynomial_bruteforce": "rank-poly --fence 2,1,3",
    "posets.rank_matrix_bruteforce": "rank-matrix --generator box --size 2,3 --bruteforce",
    "transfer.up_matrix": "rank-matrix --generator up",
    "transfer.down_matrix": "rank-matrix --generator down",
    "transfer.box_matrix": "rank-matrix --generator box --size 2,3",
    "transfer.chainlink_rank_polynomial": "rank-poly --chainlink 6,4,5 --link 2",
    "transfer.circular_fence_rank_polynomial": "rank-poly --circular-fence 2,1,1,2",
    "transfer.verify_matrix_identities": "identities --amax 2 --bmax 2",
    "geometry.build_chainlink_hrep": "points --chainlink 2,2 --link 1",
    "geometry.build_order_polytope": "order --circular-fence 1,1,1,1 --dilate 2",
    "geometry.build_general_fence_polytope": "scan general-fence --max-total 4",
    "geometry.enumerate_lattice_points": "points --chainlink 2,2 --link 1 --list",
    "geometry.lattice_generating_function": "rank-poly --chainlink 2,2 --link 1 --lattice",
    "geometry.enumerate_vertices": "vertices --chainlink 2,2 --link 1",
    "geometry.section_vertices": "vertices --chainlink 2,2 --link 1 --section 2",
    "geometry.vertex_count_trace": "vertices --chainlink 2,2 --link 1",
    "geometry.volume_trace": "volume --chainlink 6,4,5 --link 2 --method trace",
    "geometry.volume_inclusion_exclusion": "volume --chainlink 6,4,5 --link 2 --method inclexcl",
    "geometry.combinatorial_structure": "structure --chainlink 5,5 --link 2",
    "ehrhart.count_dilated_section": "points --chainlink 6,4,5 --link 3 --section 7",
    "ehrhart.fit_section_quasipolynomial": "ehrhart --chainlink 2,2 --link 1 --section 2",
    "ehrhart.check_complementary_symmetry": "symmetry --chainlink 2,2 --link 1 --all-sections",
    "ehrhart.relative_volume": "ehrhart --chainlink 2,2 --link 1 --section 2",
    "analysis.unimodality_scan": "scan unimodality --max-total 4",
    "analysis.verify_rank_recurrence": "recurrence --a 1 --b 2 --x 1,1,1",
    "analysis.stretch_analysis": "stretch --chainlink 2,2 --link 1 --k 1",
    "repro.run_repro": "repro --json",
}
