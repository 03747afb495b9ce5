"""Dilation counts and Ehrhart quasi-polynomials of chainlink sections.

``L_t(k)`` is the number of integer points of ``k * CL^t(a, l)``, i.e. of
``CL(k a, k l)`` on the hyperplane ``sum(x) = k t``.  Inside ``2l <= min(a)``
every section vertex is half-integral, so ``L_t`` is a quasi-polynomial of
period 2; the fitter checks this on held-out samples instead of trusting it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .compositions import as_composition, compositions_up_to
from .errors import ChainlinkError, ConsistencyError, PreconditionError
from .geometry import (
    HPolytope,
    affine_rank,
    build_chainlink_hrep,
    build_general_fence_polytope,
    build_order_polytope,
    count_lattice_points,
    enumerate_vertices,
    section_counts,
    section_vertices,
    solve_exact,
    volume_trace,
)
from .posets import FinitePoset
from .transfer import chainlink_rank_polynomial

VALIDATION_SAMPLES = 4


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QuasiPolynomial:
    """``k -> constituents[k % period](k)``; coefficients are constant term first."""

    period: int
    constituents: tuple[tuple[Fraction, ...], ...]
    degree: int

    def __post_init__(self):
        if self.period < 1 or len(self.constituents) != self.period:
            raise ChainlinkError("need exactly one constituent per residue")
        cons = tuple(tuple(Fraction(c) for c in poly) for poly in self.constituents)
        if any(len(poly) != self.degree + 1 for poly in cons):
            raise ChainlinkError(f"constituents must have {self.degree + 1} coefficients")
        object.__setattr__(self, "constituents", cons)

    def __call__(self, k: int) -> Fraction:
        coeffs = self.constituents[k % self.period]
        out = Fraction(0)
        for c in reversed(coeffs):
            out = out * k + c
        return out

    def leading_coefficients(self) -> list[Fraction]:
        return [poly[-1] for poly in self.constituents]

    def equivalent(self, other: "QuasiPolynomial") -> bool:
        """Same function of ``k >= 1``, even if the stored periods differ."""
        if self.degree != other.degree:
            return False
        p = math.lcm(self.period, other.period)
        return all(self(k) == other(k) for k in range(1, p * (self.degree + 1) + 1))

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "constituents": [[_fmt(c) for c in poly] for poly in self.constituents],
            "degree": self.degree,
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuasiPolynomial":
        return cls(
            int(data["period"]),
            tuple(tuple(Fraction(c) for c in poly) for poly in data["constituents"]),
            int(data["degree"]),
        )


def interpolate(points: Sequence[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Coefficients (constant first) of the polynomial through ``points``."""
    n = len(points)
    A = [[Fraction(x) ** j for j in range(n)] for x, _ in points]
    sol = solve_exact(A, [Fraction(y) for _, y in points])
    if sol is None:
        raise ChainlinkError("interpolation nodes must be distinct")
    return tuple(sol)


# counting


def _check_section(a: Sequence[int], l: int, t: int) -> tuple[int, ...]:
    a = as_composition(a)
    if l < 0:
        raise PreconditionError(f"link number must be nonnegative, got l={l}")
    if not 0 <= t <= sum(a):
        raise PreconditionError(f"0 <= t <= sum(a) violated: t={t}, sum(a)={sum(a)}")
    return a


@lru_cache(maxsize=4096)
def _dilated_levels(a: tuple[int, ...], l: int, k: int) -> tuple[int, ...]:
    """Point counts of ``CL(k a, k l)`` on each level ``sum(x) = m`` by lattice scan."""
    scaled = tuple(k * x for x in a)
    counts = section_counts(build_chainlink_hrep(scaled, k * l))
    counts += [0] * (sum(scaled) + 1 - len(counts))
    return tuple(counts)


@lru_cache(maxsize=4096)
def _dilated_rank_coefficients(a: tuple[int, ...], l: int, k: int) -> tuple[int, ...]:
    p = chainlink_rank_polynomial(tuple(k * x for x in a), k * l)
    return tuple(p[m] for m in range(k * sum(a) + 1))


def dilated_section_counts(a: Sequence[int], l: int, k: int, *, check: bool = True) -> tuple[int, ...]:
    """``(L_0(k), ..., L_n(k))`` counted on the lattice, cross-checked against the rank polynomial.

    Entry ``t`` is the count on level ``k t`` of ``CL(k a, k l)``.  With
    ``check`` and ``2l <= min(a)`` the whole level sequence must equal the
    coefficients of ``chainlink_rank_polynomial(k a, k l)``.
    """
    a = as_composition(a)
    if k < 1:
        raise ChainlinkError(f"dilation must be positive, got k={k}")
    levels = _dilated_levels(a, l, k)
    if check and 2 * l <= min(a):
        if levels != _dilated_rank_coefficients(a, l, k):
            raise ConsistencyError(f"lattice levels of CL({a}, {l}) * {k} differ from the rank polynomial")
    return tuple(levels[k * t] for t in range(sum(a) + 1))


def count_dilated_section(a: Sequence[int], l: int, t: int, k: int) -> int:
    """``L_t(k) = #(k CL^t(a, l) ∩ Z^s)``, by lattice scan and (when ``2l <= min``) by the rank polynomial."""
    a = _check_section(a, l, t)
    if k < 1:
        raise ChainlinkError(f"dilation must be positive, got k={k}")
    scaled = tuple(k * x for x in a)
    direct = count_lattice_points(build_chainlink_hrep(scaled, k * l), section_sum=k * t)
    if 2 * l <= min(a):
        via_rank = chainlink_rank_polynomial(scaled, k * l)[k * t]
        if via_rank != direct:
            raise ConsistencyError(
                f"L_{t}({k}) for CL({a}, {l}): rank polynomial gives {via_rank}, lattice scan gives {direct}"
            )
    return direct


# fitting


def _section_vertex_data(a: tuple[int, ...], l: int, t: int) -> tuple[int, int]:
    """(dimension, lcm of vertex denominators) of the section ``CL^t(a, l)``."""
    if 2 * l <= min(a):
        vs = section_vertices(a, l, t)
    else:
        vs = enumerate_vertices(build_chainlink_hrep(a, l).with_section(t))
    if vs.empty:
        raise ChainlinkError(f"section t={t} of CL({a}, {l}) is empty")
    den = 1
    for v in vs.vertices:
        for x in v:
            den = math.lcm(den, Fraction(x).denominator)
    return affine_rank(vs.vertices), den


def fit_quasipolynomial(counter: Callable[[int], int], degree: int, period: int,
                        validate: int = VALIDATION_SAMPLES) -> QuasiPolynomial:
    """Fit ``counter(k)`` with a quasi-polynomial of the given degree and period.

    Uses ``k = 1..period*(degree+1)`` to fit and the next ``validate`` values
    of ``k`` as held-out checks; a mismatch raises ``ConsistencyError``.
    """
    n = period * (degree + 1)
    samples = {k: counter(k) for k in range(1, n + validate + 1)}
    cons = []
    for r in range(period):
        ks = [k for k in range(1, n + 1) if k % period == r]
        cons.append(interpolate([(k, samples[k]) for k in ks]))
    qp = QuasiPolynomial(period, tuple(cons), degree)
    for k, v in samples.items():
        if qp(k) != v:
            raise ConsistencyError(
                f"quasi-polynomial of period {period}, degree {degree} predicts {qp(k)} at k={k}, counted {v}"
            )
    return qp


def fit_section_quasipolynomial(a: Sequence[int], l: int, t: int, *, force: bool = False) -> QuasiPolynomial:
    """Ehrhart quasi-polynomial of the section ``CL^t(a, l)``.

    The degree is the affine dimension of the section's vertices.  Inside
    ``2l <= min(a)`` the period is 2.  With ``force`` the precondition is
    lifted and the period becomes the lcm of the vertex denominators.
    """
    a = _check_section(a, l, t)
    strict = 2 * l <= min(a)
    if not strict and not force:
        raise PreconditionError(f"2l <= min(a) violated: 2*{l} > {min(a)}")
    degree, den = _section_vertex_data(a, l, t)
    period = 2 if strict else den

    def counter(k: int) -> int:
        return dilated_section_counts(a, l, k, check=strict)[t]

    return fit_quasipolynomial(counter, degree, period)


def relative_volume(qp: QuasiPolynomial) -> Fraction:
    """Shared leading coefficient of the constituents, ``lim L(k) / k^d``."""
    leads = set(qp.leading_coefficients())
    if len(leads) != 1:
        raise ConsistencyError(f"constituents disagree on the leading coefficient: {sorted(leads)}")
    lead = leads.pop()
    if lead == 0:
        raise ChainlinkError("degree is not attained")
    return lead


@dataclass
class SymmetryCheck:
    a: tuple[int, ...]
    l: int
    forced: bool
    pairs: list[tuple[int, int, bool]] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)
    quasipolynomials: dict[int, QuasiPolynomial] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "l": self.l,
            "forced": self.forced,
            "pairs": [{"t": t, "n_minus_t": u, "equal": eq} for t, u, eq in self.pairs],
            "violations": list(self.violations),
            "ok": self.ok,
            "quasipolynomials": {str(t): qp.to_json() for t, qp in sorted(self.quasipolynomials.items())},
        }


def check_complementary_symmetry(a: Sequence[int], l: int, *, force: bool = False) -> SymmetryCheck:
    """Compare the fitted quasi-polynomials of sections ``t`` and ``n - t`` for every ``t``.

    Violations are reported as the values of ``t`` whose pair differs.
    """
    a = as_composition(a)
    if 2 * l > min(a) and not force:
        raise PreconditionError(f"2l <= min(a) violated: 2*{l} > {min(a)}")
    n = sum(a)
    rep = SymmetryCheck(a, l, forced=2 * l > min(a))
    for t in range(n + 1):
        rep.quasipolynomials[t] = fit_section_quasipolynomial(a, l, t, force=force)
    for t in range(n + 1):
        eq = rep.quasipolynomials[t].equivalent(rep.quasipolynomials[n - t])
        rep.pairs.append((t, n - t, eq))
        if not eq:
            rep.violations.append(t)
    return rep


def full_ehrhart_polynomial(a: Sequence[int], l: int) -> tuple[Fraction, ...]:
    """Ehrhart polynomial of ``CL(a, l)`` (integral vertices), constant term first.

    Interpolated from ``k = 1..s+1`` and checked at ``k = 0`` and ``k = s+2``.
    """
    a = as_composition(a)
    if 2 * l > min(a):
        raise PreconditionError(f"2l <= min(a) violated: 2*{l} > {min(a)}")
    s = len(a)
    P = build_chainlink_hrep(a, l)
    coeffs = interpolate([(k, count_lattice_points(P, dilation=k)) for k in range(1, s + 2)])
    if coeffs[0] != 1:
        raise ConsistencyError(f"Ehrhart polynomial of CL({a}, {l}) has constant term {coeffs[0]}")
    k = s + 2
    if sum(c * k ** j for j, c in enumerate(coeffs)) != count_lattice_points(P, dilation=k):
        raise ConsistencyError(f"Ehrhart polynomial of CL({a}, {l}) fails at k={k}")
    return coeffs


def ehrhart_volume(a: Sequence[int], l: int) -> Fraction:
    """Leading coefficient of the full Ehrhart polynomial, checked against ``volume_trace``."""
    lead = full_ehrhart_polynomial(a, l)[-1]
    if lead != volume_trace(a, l):
        raise ConsistencyError(f"Ehrhart leading coefficient {lead} != trace volume {volume_trace(a, l)}")
    return lead


# order polytopes and general fences


def order_polytope_section_count(p: FinitePoset, t, dilation: int = 1, orientation: str = "lower") -> int:
    """Integer points of ``dilation * O(p)`` with coordinate sum ``dilation * t``."""
    return count_lattice_points(build_order_polytope(p, orientation), section_sum=t, dilation=dilation)


def order_polytope_section_counts(p: FinitePoset, dilation: int = 1, orientation: str = "lower") -> list[int]:
    """Counts on every level ``sum(x) = m`` of ``dilation * O(p)``."""
    return section_counts(build_order_polytope(p, orientation), dilation)


def _asymmetric_levels(P: HPolytope, dilation: int) -> list[tuple[int, int, int]]:
    counts = section_counts(P, dilation)
    n = len(counts) - 1
    return [(m, counts[m], counts[n - m]) for m in range(n + 1) if counts[m] != counts[n - m]]


def general_fence_symmetry_violations(max_total: int, dilations: Sequence[int] = (1,)) -> list[dict]:
    """Scan the general fence polytope over even compositions with ``sum <= max_total``.

    Reports every (composition, dilation) whose level counts are not
    symmetric under ``m -> N - m``, where ``N`` is the top level.
    """
    out = []
    for c in compositions_up_to(max_total, even_length=True):
        P = build_general_fence_polytope(c)
        for k in dilations:
            bad = _asymmetric_levels(P, k)
            if bad:
                out.append({
                    "composition": list(c),
                    "dilation": k,
                    "levels": [{"m": m, "count": x, "mirror": y} for m, x, y in bad],
                })
    return out
