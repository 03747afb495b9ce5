import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chainlink.errors import ChainlinkError
from chainlink.qpoly import (
    QPolynomial,
    analyze_modality,
    analyze_symmetry,
    count_peaks,
    gaussian_binomial,
)

coeff_lists = st.lists(st.integers(-20, 20), max_size=8)


# oracles: hand-expanded values


def test_gaussian_binomial_small_values():
    # [4,2]_q = (1-q^4)(1-q^3)/((1-q)(1-q^2)) = 1 + q + 2q^2 + q^3 + q^4
    assert gaussian_binomial(4, 2).coefficients == (1, 1, 2, 1, 1)
    # [5,2]_q = 1 + q + 2q^2 + 2q^3 + 2q^4 + q^5 + q^6
    assert gaussian_binomial(5, 2).coefficients == (1, 1, 2, 2, 2, 1, 1)
    assert gaussian_binomial(3, 0) == 1
    assert gaussian_binomial(3, 3) == 1
    assert gaussian_binomial(3, 4).is_zero()
    assert gaussian_binomial(3, -1).is_zero()


def test_q_integer_and_monomial():
    assert QPolynomial.q_integer(3).coefficients == (1, 1, 1)
    assert QPolynomial.q_integer(0).is_zero()
    assert QPolynomial.monomial(2, 5).coefficients == (0, 0, 5)
    with pytest.raises(ChainlinkError):
        QPolynomial.monomial(-1)


def test_arithmetic_by_hand():
    one_plus_q = QPolynomial([1, 1])
    assert (one_plus_q ** 3).coefficients == (1, 3, 3, 1)
    assert (one_plus_q * QPolynomial([1, -1])).coefficients == (1, 0, -1)
    assert (one_plus_q - one_plus_q).is_zero()
    assert (one_plus_q - one_plus_q).degree == -1
    assert (2 + one_plus_q).coefficients == (3, 1)
    assert (1 - one_plus_q).coefficients == (0, -1)
    assert one_plus_q.shift(2).coefficients == (0, 0, 1, 1)
    assert QPolynomial([1, 2, 3])(2) == 17
    assert QPolynomial([0, 0, 0]).is_zero()
    assert QPolynomial([1, 2])[5] == 0


def test_str():
    assert str(QPolynomial([1, -1, 0, 2])) == "1 - q + 2*q^3"
    assert str(QPolynomial()) == "0"


def test_count_peaks_examples():
    assert count_peaks([1, 2, 1, 2, 1]) == 2
    assert count_peaks([1, 2, 2, 1]) == 1
    assert count_peaks([3]) == 1
    assert count_peaks([2, 1, 2]) == 2
    assert count_peaks([1, 2, 3, 3, 2, 3, 1]) == 2
    assert count_peaks([1, 1, 1]) == 1
    assert count_peaks([]) == 0


def test_symmetry_and_modality_reports():
    rep = analyze_symmetry(QPolynomial([1, 2, 1, 2, 1]))
    assert rep.symmetric and rep.center == 2
    assert rep.to_json() == {"symmetric": True, "center": "2"}
    assert analyze_symmetry(QPolynomial([1, 3, 6, 9])).symmetric is False
    assert analyze_symmetry(QPolynomial([1, 1])).center == Fraction(1, 2)
    mod = analyze_modality(QPolynomial([1, 2, 1, 2, 1]))
    assert mod.peak_count == 2 and not mod.unimodal
    assert analyze_modality([1, 3, 3, 1]).unimodal


def test_report_errors():
    with pytest.raises(ChainlinkError):
        analyze_symmetry(QPolynomial())
    with pytest.raises(ChainlinkError):
        analyze_modality([1, -1, 1])


# properties


@given(coeff_lists, coeff_lists, st.integers(-3, 3))
def test_ring_laws_by_evaluation(a, b, x):
    p, q = QPolynomial(a), QPolynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert p * q == q * p


@given(coeff_lists)
def test_json_round_trip(a):
    p = QPolynomial(a)
    assert QPolynomial.from_json(p.to_json()) == p
    assert all(isinstance(s, str) for s in p.to_json())


@given(st.integers(0, 12), st.integers(0, 12))
def test_gaussian_binomial_properties(n, k):
    g = gaussian_binomial(n, k)
    assert g(1) == (math.comb(n, k) if k <= n else 0)
    assert g == gaussian_binomial(n, n - k) if k <= n else g.is_zero()
    if k <= n:
        assert analyze_symmetry(g).symmetric
        assert analyze_modality(g).unimodal
        assert g.degree == k * (n - k)
