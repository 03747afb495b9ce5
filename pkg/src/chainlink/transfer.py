"""2x2 rank matrices of oriented posets.

Linking oriented posets multiplies their rank matrices and closing one up
takes the trace.  Up steps, down steps and box posets generate everything
needed for chainlink and circular fence posets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .compositions import as_composition
from .errors import ChainlinkError, PreconditionError
from .qpoly import QPolynomial, analyze_symmetry, gaussian_binomial

_ZERO = QPolynomial()
_ONE = QPolynomial([1])
_Q = QPolynomial([0, 1])


def _poly(x) -> QPolynomial:
    return x if isinstance(x, QPolynomial) else QPolynomial([x])


@dataclass(frozen=True)
class RankMatrix:
    entries: tuple[tuple[QPolynomial, QPolynomial], tuple[QPolynomial, QPolynomial]]

    def __post_init__(self):
        (a, b), (c, d) = self.entries
        object.__setattr__(self, "entries", ((_poly(a), _poly(b)), (_poly(c), _poly(d))))

    @classmethod
    def of(cls, a, b, c, d) -> "RankMatrix":
        return cls(((a, b), (c, d)))

    @classmethod
    def identity(cls) -> "RankMatrix":
        return cls.of(_ONE, _ZERO, _ZERO, _ONE)

    def __getitem__(self, ij: tuple[int, int]) -> QPolynomial:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "RankMatrix") -> "RankMatrix":
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return RankMatrix.of(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __add__(self, other: "RankMatrix") -> "RankMatrix":
        return RankMatrix(tuple(
            tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        ))

    def __neg__(self) -> "RankMatrix":
        return RankMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def __sub__(self, other: "RankMatrix") -> "RankMatrix":
        return self + (-other)

    def scale(self, p) -> "RankMatrix":
        p = _poly(p)
        return RankMatrix(tuple(tuple(p * x for x in row) for row in self.entries))

    def __pow__(self, n: int) -> "RankMatrix":
        if n < 0:
            raise ValueError("negative matrix power")
        result = RankMatrix.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> QPolynomial:
        return self.entries[0][0] + self.entries[1][1]

    def det(self) -> QPolynomial:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def transpose(self) -> "RankMatrix":
        (a, b), (c, d) = self.entries
        return RankMatrix.of(a, c, b, d)

    def at(self, x) -> tuple[tuple, tuple]:
        return tuple(tuple(p(x) for p in row) for row in self.entries)

    def to_json(self) -> list[list[list[str]]]:
        return [[p.to_json() for p in row] for row in self.entries]


def up_matrix() -> RankMatrix:
    return RankMatrix.of(_Q, _ONE, _ZERO, _ONE)


def down_matrix() -> RankMatrix:
    return RankMatrix.of(QPolynomial([1, 1]), QPolynomial([0, -1]), _ONE, _ZERO)


def box_matrix(a: int, b: int) -> RankMatrix:
    if a < 1 or b < 1:
        raise ChainlinkError(f"box sides must be positive, got ({a}, {b})")
    g = gaussian_binomial
    return RankMatrix.of(
        g(a + b - 1, b).shift(b), g(a + b - 1, b - 1),
        g(a + b - 2, b).shift(b), g(a + b - 2, b - 1),
    )


def _check_link(a: Sequence[int], l: int) -> tuple[int, ...]:
    a = as_composition(a)
    if l < 0:
        raise PreconditionError(f"link number must be nonnegative, got l={l}")
    if 2 * l > min(a):
        raise PreconditionError(f"2l <= min(a) violated: 2*{l} > {min(a)}")
    return a


def chainlink_rank_polynomial(a: Sequence[int], l: int) -> QPolynomial:
    """``tr(U^{d_1} B U^{d_2} B ... U^{d_s} B)`` with ``d_i = a_i - 2l`` and ``B`` the 2 x l box."""
    a = _check_link(a, l)
    if l == 0:
        out = _ONE
        for x in a:
            out = out * QPolynomial.q_integer(x + 1)
        return out
    U = up_matrix()
    B = box_matrix(2, l)
    m = RankMatrix.identity()
    for x in a:
        m = m @ (U ** (x - 2 * l)) @ B
    return m.trace()


def alternating_trace(c: Sequence[int], first: str = "D") -> QPolynomial:
    """``tr(D^{c_1} U^{c_2} D^{c_3} ...)``; zero parts are allowed and act as merges."""
    c = as_composition(c, weak=True)
    if len(c) % 2:
        raise ChainlinkError(f"odd-length composition {c}")
    mats = (down_matrix(), up_matrix()) if first == "D" else (up_matrix(), down_matrix())
    m = RankMatrix.identity()
    for i, x in enumerate(c):
        m = m @ (mats[i % 2] ** x)
    return m.trace()


def circular_fence_rank_polynomial(c: Sequence[int]) -> QPolynomial:
    c = as_composition(c)
    if len(c) % 2:
        raise ChainlinkError(f"circular fence needs an even number of parts; odd-length composition {c}")
    return alternating_trace(c)


@dataclass
class IdentityReport:
    a_max: int
    b_max: int
    results: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def to_json(self) -> dict:
        return {
            "a_max": self.a_max,
            "b_max": self.b_max,
            "results": dict(self.results),
            "failures": list(self.failures),
            "ok": self.ok,
        }


def _symmetric_about(p: QPolynomial, center: Fraction) -> bool:
    """Palindromic with centre ``center`` (the zero polynomial counts as symmetric)."""
    if p.is_zero():
        return True
    c = p.coefficients
    low = next(i for i, x in enumerate(c) if x)
    rep = analyze_symmetry(QPolynomial(c[low:]))
    return rep.symmetric and rep.center + low == center


def verify_matrix_identities(a_max: int, b_max: int) -> IdentityReport:
    """Check the box-matrix trace/determinant identities, Cayley-Hamilton and ``DUD`` on a grid."""
    if a_max < 1 or b_max < 1:
        raise ChainlinkError("bounds must be at least 1")
    g = gaussian_binomial
    U, D = up_matrix(), down_matrix()
    rep = IdentityReport(a_max, b_max)
    names = [
        "trace_B_closed_form", "trace_B_symmetric", "det_B_symmetric",
        "trace_BU_closed_form", "trace_BU_symmetric", "det_BU_symmetric",
        "cayley_hamilton_B", "cayley_hamilton_U", "id1_DUD",
    ]
    for nm in names:
        rep.results[nm] = True

    def fail(name: str, detail: str) -> None:
        rep.results[name] = False
        rep.failures.append(f"{name}: {detail}")

    I = RankMatrix.identity()
    for a in range(1, a_max + 1):
        for b in range(1, b_max + 1):
            B = box_matrix(a, b)
            BU = B @ U
            tr_b, det_b = B.trace(), B.det()
            tr_bu, det_bu = BU.trace(), BU.det()
            tag = f"(a,b)=({a},{b})"
            if tr_b != g(a + b, b) - g(a + b - 2, a).shift(a):
                fail("trace_B_closed_form", tag)
            if not _symmetric_about(tr_b, Fraction(a * b, 2)):
                fail("trace_B_symmetric", tag)
            if not _symmetric_about(det_b, Fraction(a * b)):
                fail("det_B_symmetric", tag)
            if tr_bu != (QPolynomial.monomial(b + 1) + 1) * g(a + b - 1, b):
                fail("trace_BU_closed_form", tag)
            if not _symmetric_about(tr_bu, Fraction(a * b + 1, 2)):
                fail("trace_BU_symmetric", tag)
            if not _symmetric_about(det_bu, Fraction(a * b + 1)):
                fail("det_BU_symmetric", tag)
            if B @ B != B.scale(tr_b) - I.scale(det_b):
                fail("cayley_hamilton_B", tag)
    if U @ U != U.scale(QPolynomial([1, 1])) - I.scale(_Q):
        fail("cayley_hamilton_U", "U^2 != (q+1)U - qI")
    lhs = D @ U @ D
    rhs = D @ U + U @ D - U + (D ** 3) - (D ** 2)
    if lhs != rhs:
        fail("id1_DUD", "DUD != DU + UD - U + D^3 - D^2")
    return rep
