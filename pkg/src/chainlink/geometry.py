"""Chainlink polytopes and friends as exact rational inequality systems."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from .compositions import as_composition
from .errors import ChainlinkError, ConsistencyError, PreconditionError, UnboundedError
from .posets import FinitePoset
from .qpoly import QPolynomial

Row = tuple[tuple[Fraction, ...], Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def _fmt(x: Fraction) -> str:
    return str(x) if x.denominator != 1 else f"{x.numerator}/1"


@dataclass(frozen=True)
class HPolytope:
    """``{x : A x <= b, E x = f}`` with exact rational data.

    ``labels`` names each inequality; ``source`` records how the polytope was
    built (e.g. ``("chainlink", a, l)``) so callers can apply family-specific
    checks.
    """

    dim: int
    ineqs: tuple[Row, ...]
    eqs: tuple[Row, ...] = ()
    labels: tuple[str, ...] = ()
    source: tuple | None = None

    def __post_init__(self):
        seen, rows, labels = set(), [], []
        given = list(self.labels) or [f"row{i}" for i in range(len(self.ineqs))]
        for (coef, bound), lab in zip(self.ineqs, given):
            coef = tuple(_frac(c) for c in coef)
            if len(coef) != self.dim:
                raise ChainlinkError(f"row has {len(coef)} coefficients, expected {self.dim}")
            row = (coef, _frac(bound))
            if row in seen:
                continue
            seen.add(row)
            rows.append(row)
            labels.append(lab)
        eqs, eseen = [], set()
        for coef, bound in self.eqs:
            coef = tuple(_frac(c) for c in coef)
            if len(coef) != self.dim:
                raise ChainlinkError(f"row has {len(coef)} coefficients, expected {self.dim}")
            row = (coef, _frac(bound))
            if row not in eseen:
                eseen.add(row)
                eqs.append(row)
        object.__setattr__(self, "ineqs", tuple(rows))
        object.__setattr__(self, "eqs", tuple(eqs))
        object.__setattr__(self, "labels", tuple(labels))

    def contains(self, x: Sequence) -> bool:
        for coef, b in self.ineqs:
            if sum(c * v for c, v in zip(coef, x)) > b:
                return False
        for coef, b in self.eqs:
            if sum(c * v for c, v in zip(coef, x)) != b:
                return False
        return True

    def with_equality(self, coef: Sequence, bound) -> "HPolytope":
        return HPolytope(self.dim, self.ineqs, self.eqs + ((tuple(coef), _frac(bound)),),
                         self.labels, self.source)

    def with_section(self, t) -> "HPolytope":
        """Intersect with ``sum(x) = t``."""
        return self.with_equality([1] * self.dim, t)

    def dilate(self, k) -> "HPolytope":
        k = _frac(k)
        return HPolytope(
            self.dim,
            tuple((c, b * k) for c, b in self.ineqs),
            tuple((c, b * k) for c, b in self.eqs),
            self.labels,
            self.source,
        )

    def box_bounds(self) -> list[tuple[Fraction, Fraction]]:
        """Per-coordinate bounds read off single-variable rows."""
        lo: list[Fraction | None] = [None] * self.dim
        hi: list[Fraction | None] = [None] * self.dim
        for coef, b in self.ineqs:
            nz = [i for i, c in enumerate(coef) if c]
            if len(nz) != 1:
                continue
            i = nz[0]
            v = b / coef[i]
            if coef[i] > 0:
                hi[i] = v if hi[i] is None else min(hi[i], v)
            else:
                lo[i] = v if lo[i] is None else max(lo[i], v)
        for i in range(self.dim):
            if lo[i] is None or hi[i] is None:
                raise UnboundedError(f"coordinate x{i + 1} has no explicit lower and upper bound")
        return list(zip(lo, hi))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "ineqs": [{"a": [_fmt(c) for c in coef], "b": _fmt(b)} for coef, b in self.ineqs],
            "eqs": [{"a": [_fmt(c) for c in coef], "b": _fmt(b)} for coef, b in self.eqs],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "HPolytope":
        if isinstance(data, str):
            data = json.loads(data)
        ineqs = tuple((tuple(Fraction(c) for c in r["a"]), Fraction(r["b"])) for r in data["ineqs"])
        eqs = tuple((tuple(Fraction(c) for c in r["a"]), Fraction(r["b"])) for r in data.get("eqs", []))
        return cls(int(data["dim"]), ineqs, eqs)


@dataclass
class VertexSet:
    vertices: list[tuple[Fraction, ...]]
    tight_sets: list[tuple[int, ...]]
    dimension: int = -1
    labels: tuple[str, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "count": len(self.vertices),
            "dimension": self.dimension,
            "empty": self.empty,
            "vertices": [[_fmt(c) for c in v] for v in self.vertices],
            "tight": [[self.labels[i] if self.labels else i for i in ts] for ts in self.tight_sets],
        }


# builders -------------------------------------------------------------------

def _unit(dim: int, i: int, c=1) -> list[int]:
    v = [0] * dim
    v[i] = c
    return v


def build_chainlink_hrep(a: Sequence[int], l: int) -> HPolytope:
    """``0 <= x_i <= a_i`` and ``x_i - x_{i+1} <= a_i - l`` cyclically."""
    a = as_composition(a)
    if l < 0:
        raise PreconditionError(f"link number must be nonnegative, got l={l}")
    s = len(a)
    rows, labels = [], []
    for i in range(s):
        rows.append((_unit(s, i, -1), 0))
        labels.append(f"x{i + 1}>=0")
    for i in range(s):
        rows.append((_unit(s, i), a[i]))
        labels.append(f"x{i + 1}<=a{i + 1}")
    for i in range(s):
        coef = [0] * s
        coef[i] += 1
        coef[(i + 1) % s] -= 1
        rows.append((coef, a[i] - l))
        labels.append(f"x{i + 1}-x{(i + 1) % s + 1}<=a{i + 1}-l")
    return HPolytope(s, tuple(rows), labels=tuple(labels), source=("chainlink", a, l))


def build_order_polytope(p: FinitePoset, orientation: str = "lower") -> HPolytope:
    """Order polytope of ``p`` inside the unit cube.

    With ``orientation="lower"`` a cover ``i < j`` gives ``x_j <= x_i`` so the
    0/1 points are indicator vectors of lower ideals and a section
    ``sum(x) = k`` counts ideals of size ``k``.  ``orientation="upper"`` is the
    textbook ``x_i <= x_j`` (0/1 points are upper ideals).
    """
    if orientation not in ("lower", "upper"):
        raise ChainlinkError(f"orientation must be 'lower' or 'upper', got {orientation!r}")
    n = p.n
    rows, labels = [], []
    for i in range(n):
        rows.append((_unit(n, i, -1), 0))
        labels.append(f"x{i + 1}>=0")
        rows.append((_unit(n, i), 1))
        labels.append(f"x{i + 1}<=1")
    for lo, hi in sorted(p.covers):
        coef = [0] * n
        if orientation == "upper":
            coef[lo], coef[hi] = 1, -1
            labels.append(f"x{lo + 1}<=x{hi + 1}")
        else:
            coef[hi], coef[lo] = 1, -1
            labels.append(f"x{hi + 1}<=x{lo + 1}")
        rows.append((coef, 0))
    return HPolytope(n, tuple(rows), labels=tuple(labels), source=("order", orientation))


def build_general_fence_polytope(c: Sequence[int]) -> HPolytope:
    """Candidate polytope for a circular fence ``(c_1, d_1, ..., c_s, d_s)``.

    Variables are ``(x_1, y_1, ..., x_s, y_s)``.  For ``d_i >= 2`` the rows are
    ``0 <= x_i <= c_i + 1``, ``0 <= y_i <= d_i - 1``,
    ``(d_i - 1)(x_i - c_i) <= y_i`` and ``y_i <= (d_i - 1) x_{i+1}``.  For
    ``d_i = 1`` the last two rows degenerate, and are replaced by their
    combination ``x_i - c_i <= x_{i+1}``.
    """
    c = as_composition(c)
    if len(c) % 2:
        raise ChainlinkError(f"odd-length composition {c}")
    s = len(c) // 2
    dim = 2 * s
    ups, downs = c[0::2], c[1::2]
    rows, labels = [], []
    for i in range(s):
        xi, yi, xn = 2 * i, 2 * i + 1, (2 * i + 2) % dim
        a, b = ups[i], downs[i]
        rows += [(_unit(dim, xi, -1), 0), (_unit(dim, xi), a + 1),
                 (_unit(dim, yi, -1), 0), (_unit(dim, yi), b - 1)]
        labels += [f"x{i + 1}>=0", f"x{i + 1}<=c{i + 1}+1", f"y{i + 1}>=0", f"y{i + 1}<=d{i + 1}-1"]
        if b >= 2:
            r1 = [0] * dim
            r1[xi], r1[yi] = b - 1, -1
            r2 = [0] * dim
            r2[yi] = 1
            r2[xn] -= b - 1
            rows += [(r1, (b - 1) * a), (r2, 0)]
            labels += [f"(d{i + 1}-1)(x{i + 1}-c{i + 1})<=y{i + 1}", f"y{i + 1}<=(d{i + 1}-1)x{(i + 1) % s + 1}"]
        else:
            r = [0] * dim
            r[xi] += 1
            r[xn] -= 1
            rows.append((r, a))
            labels.append(f"x{i + 1}-c{i + 1}<=x{(i + 1) % s + 1}")
    return HPolytope(dim, tuple(rows), labels=tuple(labels), source=("general_fence", c))


# lattice points -------------------------------------------------------------

def _integer_rows(rows) -> list[tuple[list[int], Fraction]]:
    out = []
    for coef, b in rows:
        m = 1
        for x in coef:
            m = m * x.denominator // math.gcd(m, x.denominator)
        out.append(([int(x * m) for x in coef], b * m))
    return out


def _scan(P: HPolytope, dilation: int, section_sum=None, on_point=None, levels=None) -> int:
    """Depth-first scan of integer points of ``dilation * P``.

    At each depth the admissible interval for the next coordinate is
    tightened with every row, using the box bounds of the coordinates still
    to be chosen.  With ``on_point`` every point is reported; otherwise the
    last coordinate is counted as a whole interval and only totals (and, if
    ``levels`` is a dict, counts per value of ``sum(x)``) are kept.
    """
    k = Fraction(dilation)
    Q = P.dilate(k)
    if section_sum is not None:
        Q = Q.with_section(_frac(section_sum) * k)
    bounds = Q.box_bounds()
    d = Q.dim
    lo = [math.ceil(b[0]) for b in bounds]
    hi = [math.floor(b[1]) for b in bounds]
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    ineqs = [(c, math.floor(b)) for c, b in _integer_rows(Q.ineqs)]
    eqs = []
    for c, b in _integer_rows(Q.eqs):
        if b.denominator != 1:
            return 0
        eqs.append((c, int(b)))
    # each equality becomes two inequalities
    rows = ineqs + eqs + [([-x for x in c], -b) for c, b in eqs]
    rows = [(c, b) for c, b in rows if any(c) or b < 0]
    if any(not any(c) for c, _ in rows):
        return 0
    # minimum of sum_{j >= p} c_j x_j over the box, for p = 0..d
    tails = []
    for c, _ in rows:
        t = [0] * (d + 1)
        for j in range(d - 1, -1, -1):
            t[j] = t[j + 1] + min(c[j] * lo[j], c[j] * hi[j])
        tails.append(t)
    active = [[r for r, (c, _) in enumerate(rows) if c[p]] for p in range(d)]
    x = [0] * d
    partial = [0] * len(rows)
    total = 0

    def go(p: int, level: int) -> None:
        nonlocal total
        lo_p, hi_p = lo[p], hi[p]
        for r in active[p]:
            c, b = rows[r]
            cp = c[p]
            slack = b - partial[r] - tails[r][p + 1]
            if cp > 0:
                hi_p = min(hi_p, slack // cp)
            else:
                lo_p = max(lo_p, -(slack // -cp))
            if lo_p > hi_p:
                return
        if p == d - 1 and on_point is None:
            total += hi_p - lo_p + 1
            if levels is not None:
                for v in range(lo_p, hi_p + 1):
                    levels[level + v] = levels.get(level + v, 0) + 1
            return
        for v in range(lo_p, hi_p + 1):
            x[p] = v
            if p == d - 1:
                total += 1
                on_point(tuple(x))
                continue
            for r in active[p]:
                partial[r] += rows[r][0][p] * v
            go(p + 1, level + v)
            for r in active[p]:
                partial[r] -= rows[r][0][p] * v

    if d == 0:
        if on_point is not None:
            on_point(())
        if levels is not None:
            levels[0] = 1
        return 1
    go(0, 0)
    return total


def enumerate_lattice_points(P: HPolytope, section_sum=None, dilation: int = 1) -> list[tuple[int, ...]]:
    """Integer points of ``dilation * P`` (optionally on ``sum(x) = dilation * section_sum``), lexicographic."""
    if dilation < 1:
        raise ChainlinkError(f"dilation must be positive, got {dilation}")
    out: list[tuple[int, ...]] = []
    _scan(P, dilation, section_sum, on_point=out.append)
    return out


def count_lattice_points(P: HPolytope, section_sum=None, dilation: int = 1) -> int:
    if dilation < 1:
        raise ChainlinkError(f"dilation must be positive, got {dilation}")
    return _scan(P, dilation, section_sum)


def section_counts(P: HPolytope, dilation: int = 1) -> list[int]:
    """Number of integer points of ``dilation * P`` on each level ``sum(x) = m``."""
    if dilation < 1:
        raise ChainlinkError(f"dilation must be positive, got {dilation}")
    levels: dict[int, int] = {}
    _scan(P, dilation, None, levels=levels)
    if not levels:
        return []
    return [levels.get(m, 0) for m in range(max(levels) + 1)]


def lattice_generating_function(a: Sequence[int], l: int) -> QPolynomial:
    """Sum of ``q^(x_1 + ... + x_s)`` over integer points of ``CL(a, l)``."""
    return QPolynomial(section_counts(build_chainlink_hrep(a, l)))


# exact linear algebra -------------------------------------------------------

def solve_exact(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve a square system by Gauss-Jordan elimination; None when singular."""
    n = len(A)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        pv = M[col][col]
        if pv != 1:
            M[col] = [v / pv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [vr - f * vc for vr, vc in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def matrix_rank(rows: list[list[Fraction]]) -> int:
    M = [list(map(Fraction, r)) for r in rows]
    if not M:
        return 0
    rank, ncol = 0, len(M[0])
    for col in range(ncol):
        piv = next((r for r in range(rank, len(M)) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(rank + 1, len(M)):
            if M[r][col] != 0:
                f = M[r][col] / M[rank][col]
                M[r] = [vr - f * vc for vr, vc in zip(M[r], M[rank])]
        rank += 1
        if rank == len(M):
            break
    return rank


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull; -1 for the empty set."""
    if not points:
        return -1
    base = points[0]
    return matrix_rank([[p - q for p, q in zip(pt, base)] for pt in points[1:]])


# vertices -------------------------------------------------------------------

MAX_VERTEX_DIM = 8


def _row_value(coef, x) -> Fraction:
    return sum((c * v for c, v in zip(coef, x)), Fraction(0))


def enumerate_vertices(P: HPolytope, max_dim: int = MAX_VERTEX_DIM) -> VertexSet:
    """All vertices by solving every full-rank choice of tight rows.

    Vertices come back in lexicographic order with the indices of the
    inequalities tight at each one.
    """
    d = P.dim
    if d > max_dim:
        raise ChainlinkError(f"vertex enumeration limited to dimension {max_dim}, got {d}")
    # independent equalities
    eq_rows: list[Row] = []
    for coef, b in P.eqs:
        if matrix_rank([list(r[0]) for r in eq_rows] + [list(coef)]) > len(eq_rows):
            eq_rows.append((coef, b))
    r = len(eq_rows)
    found: dict[tuple[Fraction, ...], None] = {}
    ineqs = [row for row in P.ineqs if any(row[0])]
    for idx in combinations(range(len(ineqs)), d - r):
        A = [list(c) for c, _ in eq_rows] + [list(ineqs[i][0]) for i in idx]
        rhs = [b for _, b in eq_rows] + [ineqs[i][1] for i in idx]
        x = solve_exact(A, rhs)
        if x is None:
            continue
        pt = tuple(x)
        if pt in found:
            continue
        if P.contains(pt):
            found[pt] = None
    verts = sorted(found)
    tight = [
        tuple(i for i, (coef, b) in enumerate(P.ineqs) if _row_value(coef, v) == b)
        for v in verts
    ]
    vs = VertexSet(verts, tight, affine_rank(verts), P.labels)
    if P.source and P.source[0] == "chainlink" and not P.eqs:
        _, a, l = P.source
        if 2 * l <= min(a):
            for v in verts:
                for i, vi in enumerate(v):
                    if vi not in (0, l, a[i] - l, a[i]):
                        raise ConsistencyError(f"vertex {v} has coordinate {vi} outside {{0, l, a_i - l, a_i}}")
    return vs


def chainlink_vertex_candidates(a: Sequence[int], l: int) -> list[tuple[int, ...]]:
    """Vertices of ``CL(a, l)`` found among points with ``x_i`` in ``{0, l, a_i - l, a_i}``.

    A candidate is a vertex when it is feasible and its tight rows have full rank.
    """
    a = as_composition(a)
    P = build_chainlink_hrep(a, l)
    out = []
    for v in product(*[sorted({0, l, ai - l, ai}) for ai in a]):
        if not P.contains(v):
            continue
        tight = [list(c) for c, b in P.ineqs if _row_value(c, v) == b]
        if matrix_rank(tight) == len(a):
            out.append(tuple(v))
    return sorted(out)


def section_vertices(a: Sequence[int], l: int, t) -> VertexSet:
    """Vertices of ``CL(a, l) ∩ {sum(x) = t}``."""
    a = as_composition(a)
    t = _frac(t)
    if not 0 <= t <= sum(a):
        raise PreconditionError(f"0 <= t <= sum(a) violated: t={t}, sum(a)={sum(a)}")
    P = build_chainlink_hrep(a, l).with_section(t)
    vs = enumerate_vertices(P)
    if 2 * l <= min(a) and t.denominator == 1:
        for v in vs.vertices:
            if any((2 * c).denominator != 1 for c in v):
                raise ConsistencyError(f"section vertex {v} is not half-integral")
    return vs


# counting formulas ----------------------------------------------------------

_A = ((1, 1, 1), (1, 0, 0), (1, 1, 1))
_B = ((1, 1, 1), (1, 0, 0), (1, 0, 1))


def _mat3(x, y):
    return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def vertex_transfer_matrices() -> tuple[tuple, tuple]:
    return _A, _B


def trace_of_product(mats) -> int:
    m = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for x in mats:
        m = _mat3(m, x)
    return m[0][0] + m[1][1] + m[2][2]


def vertex_count_trace(a: Sequence[int], l: int) -> int:
    """``tr(A_1 ... A_s)`` with ``A_i = A`` for ``a_i > 2l`` and ``B`` for ``a_i = 2l``."""
    a = as_composition(a)
    if l < 1:
        raise PreconditionError(f"l >= 1 required, got l={l}")
    if 2 * l > min(a):
        raise PreconditionError(f"2l <= min(a) violated: 2*{l} > {min(a)}")
    return trace_of_product(_A if x > 2 * l else _B for x in a)


def characteristic_recurrence(M) -> tuple[int, int, int]:
    """``(c1, c2, c3)`` with ``tr(M^s) = c1 tr(M^{s-1}) - c2 tr(M^{s-2}) + c3 tr(M^{s-3})``."""
    c1 = M[0][0] + M[1][1] + M[2][2]
    c2 = sum(M[i][i] * M[j][j] - M[i][j] * M[j][i] for i, j in ((0, 1), (0, 2), (1, 2)))
    c3 = (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )
    return c1, c2, c3


def trace_power_sequences(M, s_max: int) -> tuple[list[int], list[int]]:
    """``tr(M^s)`` for ``s = 1..s_max`` computed directly and by the characteristic recurrence."""
    direct = [trace_of_product([M] * s) for s in range(1, s_max + 1)]
    c1, c2, c3 = characteristic_recurrence(M)
    rec = [3] + direct[:3]
    for s in range(4, s_max + 1):
        rec.append(c1 * rec[s - 1] - c2 * rec[s - 2] + c3 * rec[s - 3])
    return direct, rec[1:s_max + 1]


def _check_volume_args(a, l) -> tuple[int, ...]:
    a = as_composition(a)
    if l < 0:
        raise PreconditionError(f"link number must be nonnegative, got l={l}")
    if 2 * l > min(a):
        raise PreconditionError(f"2l <= min(a) violated: 2*{l} > {min(a)}")
    return a


def volume_trace(a: Sequence[int], l: int) -> Fraction:
    """Euclidean volume of ``CL(a, l)`` as ``tr(prod [[a_i, -l^2/2], [1, 0]])``."""
    a = _check_volume_args(a, l)
    h = Fraction(-l * l, 2)
    m = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    for x in a:
        f = ((Fraction(x), h), (Fraction(1), Fraction(0)))
        m = tuple(tuple(sum(m[i][k] * f[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    return m[0][0] + m[1][1]


def cycle_matchings(s: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Matchings of the cycle graph on ``0..s-1`` (two parallel edges when ``s = 2``)."""
    edges = [] if s == 1 else [(i, (i + 1) % s) for i in range(s)]
    for r in range(len(edges) + 1):
        for chosen in combinations(edges, r):
            covered = [v for e in chosen for v in e]
            if len(set(covered)) == len(covered):
                yield chosen


def volume_inclusion_exclusion(a: Sequence[int], l: int) -> Fraction:
    """The cuboid minus shaved corners, summed over matchings of the ``s``-cycle."""
    a = _check_volume_args(a, l)
    shave = Fraction(l * l, 2)
    total = Fraction(0)
    for m in cycle_matchings(len(a)):
        covered = {v for e in m for v in e}
        rest = math.prod(x for i, x in enumerate(a) if i not in covered)
        total += (-1) ** len(m) * shave ** len(m) * rest
    return total


# combinatorial structure ----------------------------------------------------

def _facet_kind(label: str) -> tuple[str, int]:
    i = int(re.match(r"x(\d+)", label).group(1))
    if label.endswith(">=0"):
        return ("lower", i)
    if "-x" in label:
        return ("link", i)
    return ("upper", i)


@dataclass
class StructureReport:
    a: tuple[int, ...]
    l: int
    facet_count: int
    full_dimensional: bool
    vertex_count: int
    simple: bool
    strict: bool
    incidence: frozenset = field(repr=False)

    def same_type_as(self, other: "StructureReport") -> bool:
        """Identical vertex/facet incidence under the natural facet labelling."""
        return len(self.a) == len(other.a) and self.incidence == other.incidence

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "l": self.l,
            "facet_count": self.facet_count,
            "full_dimensional": self.full_dimensional,
            "vertex_count": self.vertex_count,
            "simple": self.simple,
            "strict_regime": self.strict,
        }


def combinatorial_structure(a: Sequence[int], l: int) -> StructureReport:
    """Facets, full-dimensionality and simplicity of ``CL(a, l)`` for ``0 < l < min(a)``."""
    a = as_composition(a)
    if not 0 < l < min(a):
        raise PreconditionError(f"0 < l < min(a) violated: l={l}, min(a)={min(a)}")
    P = build_chainlink_hrep(a, l)
    vs = enumerate_vertices(P)
    s = len(a)
    facets = 0
    for i in range(len(P.ineqs)):
        on = [v for v, ts in zip(vs.vertices, vs.tight_sets) if i in ts]
        if affine_rank(on) == s - 1:
            facets += 1
    simple = all(len(ts) == s for ts in vs.tight_sets)
    incidence = frozenset(
        frozenset(_facet_kind(P.labels[i]) for i in ts) for ts in vs.tight_sets
    )
    return StructureReport(a, l, facets, vs.dimension == s, len(vs), simple, 2 * l < min(a), incidence)
