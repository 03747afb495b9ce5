"""Reproduction of every published numerical claim, one row per claim."""

from __future__ import annotations

from fractions import Fraction

from . import analysis, ehrhart, geometry, posets, transfer
from .qpoly import analyze_modality


def _show(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(v) for v in x) + ")"
    if isinstance(x, list):
        return "[" + ", ".join(_show(v) for v in x) + "]"
    return str(x)


def _row(claim: str, expected, computed) -> dict:
    return {"claim": claim, "expected": _show(expected), "computed": _show(computed), "pass": expected == computed}


def _frac_tuple(v) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in v) + ")"


def run_repro() -> list[dict]:
    rows = []

    p = transfer.chainlink_rank_polynomial((6, 4, 5), 2)
    rows.append(_row(
        "rank polynomial of CL((6,4,5),2)",
        [1, 3, 6, 9, 12, 14, 16, 17, 17, 16, 14, 12, 9, 6, 3, 1],
        list(p.coefficients),
    ))

    p = transfer.circular_fence_rank_polynomial((1, 1, 1, 1))
    rows.append(_row(
        "circular fence (1,1,1,1): coefficients and peaks",
        ([1, 2, 1, 2, 1], 2),
        (list(p.coefficients), analyze_modality(p).peak_count),
    ))

    rows.append(_row(
        "CL((6,4,5),3): points on sum=7 and sum=8",
        (9, 10),
        (ehrhart.count_dilated_section((6, 4, 5), 3, 7, 1), ehrhart.count_dilated_section((6, 4, 5), 3, 8, 1)),
    ))

    gate = posets.build_circular_fence((3, 1, 2, 1, 1, 1))
    rows.append(_row(
        "order polytope of gate (3,1,2,1,1,1), dilate 2: sections t=4, t=5",
        (84, 83),
        (ehrhart.order_polytope_section_count(gate, 4, 2), ehrhart.order_polytope_section_count(gate, 5, 2)),
    ))

    vs = geometry.section_vertices((2, 2), 1, 2)
    rows.append(_row(
        "vertices of CL^2((2,2),1)",
        "(1/2, 3/2) (3/2, 1/2)",
        " ".join(_frac_tuple(v) for v in vs.vertices),
    ))

    vs = geometry.section_vertices((3, 3, 3), 2, 5)
    target = (Fraction(8, 3), Fraction(5, 3), Fraction(2, 3))
    rows.append(_row(
        "CL^5((3,3,3),2) has vertex (8/3, 5/3, 2/3)",
        True,
        target in vs.vertices,
    ))

    published = {
        0: [1, 2, 1, 2, 1],
        1: [1, 2, 3, 2, 3, 2, 3, 2, 1],
        2: [1, 2, 3, 4, 3, 4, 3, 4, 3, 4, 3, 2, 1],
        3: [1, 2, 3, 4, 5, 4, 5, 4, 5, 4, 5, 4, 5, 4, 3, 2, 1],
    }
    for r in analysis.stretch_analysis((2, 2), 1, 3):
        rows.append(_row(f"{r.k}-stretch of P_CL((2,2),1)", published[r.k], list(r.coefficients)))

    pell = [len(geometry.enumerate_vertices(geometry.build_chainlink_hrep((3,) * s, 1)).vertices) for s in range(1, 5)]
    rows.append(_row("vertex counts of CL((3^s),1), s=1..4", [2, 6, 14, 34], pell))

    rows.append(_row("volume of CL((6,4,5),2)", 90, geometry.volume_trace((6, 4, 5), 2)))

    q7 = ehrhart.fit_section_quasipolynomial((6, 4, 5), 3, 7, force=True)
    q8 = ehrhart.fit_section_quasipolynomial((6, 4, 5), 3, 8, force=True)
    v7, v8 = ehrhart.relative_volume(q7), ehrhart.relative_volume(q8)
    rows.append(_row("CL((6,4,5),3): section volume ratio t=7 : t=8", Fraction(71, 72), v7 / v8))
    rows.append(_row(
        "CL((6,4,5),3): section volumes over sqrt(3) at t=7, t=8",
        (Fraction(71, 12), Fraction(6)),
        (v7, v8),
    ))

    q4 = ehrhart.fit_section_quasipolynomial((6, 4, 5), 2, 4)
    q11 = ehrhart.fit_section_quasipolynomial((6, 4, 5), 2, 11)
    rows.append(_row("CL((6,4,5),2): sections t=4 and t=11 share a quasi-polynomial", True, q4 == q11))

    scan = analysis.unimodality_scan(8)
    rows.append(_row(
        "non-unimodal circular fences with sum <= 8",
        [(1, 1, 1, 1), (2, 1, 2, 1), (1, 2, 1, 2), (3, 1, 3, 1), (1, 3, 1, 3)],
        [c for c, _ in scan.violations],
    ))
    return rows
