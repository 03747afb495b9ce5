"""Scans over many compositions: unimodality, the rank recurrence and stretching."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from typing import Sequence

from .compositions import as_composition, compositions_up_to, merge_zero_parts
from .errors import ChainlinkError, ConsistencyError
from .posets import build_fence, build_stretched_chainlink, rank_polynomial_bruteforce, stretched_composition
from .qpoly import analyze_modality, analyze_symmetry
from .transfer import alternating_trace, circular_fence_rank_polynomial

MAX_SCAN_TOTAL = 18
STRETCH_CAP = 26


def is_exception_pattern(c: Sequence[int]) -> bool:
    """True for ``(a, 1, a, 1)`` and ``(1, a, 1, a)`` read literally."""
    c = tuple(c)
    if len(c) != 4:
        return False
    return (c[1] == c[3] == 1 and c[0] == c[2]) or (c[0] == c[2] == 1 and c[1] == c[3])


@dataclass
class ScanResult:
    instances_checked: int = 0
    violations: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    unexpected: list[tuple[int, ...]] = field(default_factory=list)
    missing: list[tuple[int, ...]] = field(default_factory=list)
    asymmetric: list[tuple[int, ...]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.unexpected or self.missing or self.asymmetric)

    def to_json(self) -> dict:
        return {
            "instances_checked": self.instances_checked,
            "violations": [{"composition": list(c), "peak_count": p} for c, p in self.violations],
            "unexpected": [list(c) for c in self.unexpected],
            "missing": [list(c) for c in self.missing],
            "asymmetric": [list(c) for c in self.asymmetric],
            "ok": self.ok,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["composition", "peak_count"])
        for c, p in self.violations:
            w.writerow([",".join(map(str, c)), p])
        return buf.getvalue()


def _check_total(max_total: int) -> None:
    if max_total > MAX_SCAN_TOTAL:
        raise ChainlinkError(f"max_total <= {MAX_SCAN_TOTAL} violated: got {max_total}")


def unimodality_scan(max_total: int) -> ScanResult:
    """Classify every even-length composition with ``sum <= max_total``.

    Non-unimodal circular fences are collected and compared with the literal
    ``(a,1,a,1)`` / ``(1,a,1,a)`` patterns; every polynomial is also checked
    for symmetry.
    """
    _check_total(max_total)
    start = time.perf_counter()
    res = ScanResult()
    for c in compositions_up_to(max_total, even_length=True):
        p = circular_fence_rank_polynomial(c)
        res.instances_checked += 1
        if not analyze_symmetry(p).symmetric:
            res.asymmetric.append(c)
        mod = analyze_modality(p)
        expected = is_exception_pattern(c)
        if not mod.unimodal:
            res.violations.append((c, mod.peak_count))
            if not expected:
                res.unexpected.append(c)
        elif expected:
            res.missing.append(c)
    res.elapsed = time.perf_counter() - start
    return res


def fence_unimodality_scan(max_total: int) -> ScanResult:
    """Brute-force rank polynomials of ordinary fences with ``sum <= max_total``.

    Every non-unimodal fence is reported as unexpected.
    """
    _check_total(max_total)
    start = time.perf_counter()
    res = ScanResult()
    for c in compositions_up_to(max_total):
        p = rank_polynomial_bruteforce(build_fence(c))
        res.instances_checked += 1
        mod = analyze_modality(p)
        if not mod.unimodal:
            res.violations.append((c, mod.peak_count))
            res.unexpected.append(c)
    res.elapsed = time.perf_counter() - start
    return res


def _rbar(parts: Sequence[int]):
    """Circular fence rank polynomial of a weak composition.

    A zero exponent contributes the identity, so adjacent runs merge.  When
    merging leaves a genuine composition the result is cross-checked on it.
    """
    p = alternating_trace(parts)
    merged = merge_zero_parts(parts)
    if len(merged) > 1 and alternating_trace(merged) != p:
        raise ConsistencyError(f"zero-part merge of {tuple(parts)} changed the rank polynomial")
    return p


def verify_rank_recurrence(a: int, b: int, X: Sequence[int]) -> bool:
    """Check ``R(a,1,b,X) = R(a-1,1,b,X) + R(a,1,b-1,X) - R(a-1,1,b-1,X) + R(a+b+1,X) - R(a+b,X)``.

    ``R`` is the circular fence rank polynomial; zero parts merge their neighbours.
    """
    X = as_composition(X)
    if a < 1 or b < 1:
        raise ChainlinkError("a and b must be positive")
    if len(X) % 2 == 0:
        raise ChainlinkError(f"X must have odd length, got {X}")
    if a + b + 1 + sum(X) > MAX_SCAN_TOTAL:
        raise ChainlinkError(f"sum of inputs <= {MAX_SCAN_TOTAL} violated")
    X = list(X)
    lhs = _rbar([a, 1, b] + X)
    rhs = (
        _rbar([a - 1, 1, b] + X)
        + _rbar([a, 1, b - 1] + X)
        - _rbar([a - 1, 1, b - 1] + X)
        + _rbar([a + b + 1] + X)
        - _rbar([a + b] + X)
    )
    return lhs == rhs


@dataclass(frozen=True)
class StretchRow:
    k: int
    composition: tuple[int, ...]
    coefficients: tuple[int, ...]
    peak_count: int
    symmetric: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "composition": list(self.composition),
            "coefficients": list(self.coefficients),
            "peak_count": self.peak_count,
            "symmetric": self.symmetric,
        }


def stretch_analysis(a: Sequence[int], l: int, k_max: int) -> list[StretchRow]:
    """Rank sequence, peak count and symmetry of the ``k``-stretch for ``k = 0..k_max``.

    The ``k``-stretch inserts ``k`` parts equal to ``l`` after every ``a_i``.
    """
    a = as_composition(a)
    if k_max < 0:
        raise ChainlinkError(f"k_max must be nonnegative, got {k_max}")
    rows = []
    for k in range(k_max + 1):
        p = build_stretched_chainlink(a, l, k)
        poly = rank_polynomial_bruteforce(p, cap=STRETCH_CAP)
        rows.append(StretchRow(
            k, stretched_composition(a, l, k), poly.coefficients,
            analyze_modality(poly).peak_count,
            analyze_symmetry(poly).symmetric,
        ))
    return rows
