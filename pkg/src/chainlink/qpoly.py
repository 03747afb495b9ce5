"""Exact integer polynomials in one variable ``q``.

Rank polynomials, Gaussian binomials and the entries of rank matrices all
live here.  Coefficients are Python ints, stored dense from the constant
term up, so nothing is ever rounded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ChainlinkError


class QPolynomial:
    """Immutable polynomial with integer coefficients, constant term first."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "QPolynomial":
        if k < 0:
            raise ChainlinkError(f"negative exponent {k}")
        return cls([0] * k + [coeff])

    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls([c])

    @classmethod
    def q_integer(cls, n: int) -> "QPolynomial":
        """``[n]_q = 1 + q + ... + q^(n-1)``."""
        return cls([1] * max(n, 0))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self._c):
            return self._c[k]
        return 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == QPolynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("QPolynomial", self._c))

    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial([other])
        raise TypeError(f"cannot combine QPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "QPolynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-x for x in self._c)

    def __sub__(self, other) -> "QPolynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = QPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by ``q**k``."""
        if not self._c:
            return self
        return QPolynomial([0] * k + list(self._c))

    def __repr__(self) -> str:
        return f"QPolynomial({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            if k == 0:
                body = str(c)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}")
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[str]:
        return [str(c) for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "QPolynomial":
        return cls(int(x) for x in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@lru_cache(maxsize=None)
def _gauss(n: int, k: int) -> tuple[int, ...]:
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    left = QPolynomial(_gauss(n - 1, k - 1))
    right = QPolynomial(_gauss(n - 1, k)).shift(k)
    return (left + right).coefficients


def gaussian_binomial(n: int, k: int) -> QPolynomial:
    """The q-binomial coefficient ``[n choose k]_q``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ChainlinkError(f"gaussian_binomial needs n >= 0, got {n}")
    return QPolynomial(_gauss(n, k))


@dataclass(frozen=True)
class SymmetryReport:
    symmetric: bool
    center: Fraction | None

    def to_json(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "center": None if self.center is None else str(self.center),
        }


@dataclass(frozen=True)
class ModalityReport:
    peak_count: int
    unimodal: bool

    def to_json(self) -> dict:
        return {"peak_count": self.peak_count, "unimodal": self.unimodal}


def analyze_symmetry(p: QPolynomial) -> SymmetryReport:
    if p.is_zero():
        raise ChainlinkError("symmetry of the zero polynomial is undefined")
    c = p.coefficients
    if c == c[::-1]:
        return SymmetryReport(True, Fraction(p.degree, 2))
    return SymmetryReport(False, None)


def count_peaks(seq: Sequence[int]) -> int:
    """Number of maximal plateaus strictly above both neighbours.

    The ends of the sequence behave like neighbours of value -infinity.
    """
    peaks = 0
    i, n = 0, len(seq)
    while i < n:
        j = i
        while j + 1 < n and seq[j + 1] == seq[i]:
            j += 1
        left_ok = i == 0 or seq[i - 1] < seq[i]
        right_ok = j == n - 1 or seq[j + 1] < seq[i]
        if left_ok and right_ok:
            peaks += 1
        i = j + 1
    return peaks


def analyze_modality(p: QPolynomial | Sequence[int]) -> ModalityReport:
    seq = p.coefficients if isinstance(p, QPolynomial) else tuple(p)
    if any(c < 0 for c in seq):
        raise ChainlinkError("modality is only defined for nonnegative coefficients")
    peaks = count_peaks(seq)
    return ModalityReport(peaks, peaks <= 1)
