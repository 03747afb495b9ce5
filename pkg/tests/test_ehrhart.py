import itertools
from fractions import Fraction

import pytest

from chainlink import ehrhart
from chainlink.ehrhart import (
    QuasiPolynomial,
    check_complementary_symmetry,
    count_dilated_section,
    dilated_section_counts,
    ehrhart_volume,
    fit_quasipolynomial,
    fit_section_quasipolynomial,
    full_ehrhart_polynomial,
    general_fence_symmetry_violations,
    interpolate,
    order_polytope_section_count,
    order_polytope_section_counts,
    relative_volume,
)
from chainlink.errors import ChainlinkError, ConsistencyError, PreconditionError
from chainlink.geometry import volume_trace
from chainlink.posets import build_circular_fence

F = Fraction

GATE = (3, 1, 2, 1, 1, 1)


def family(s_max=3, part_max=5):
    for s in range(1, s_max + 1):
        for a in itertools.product(range(2, part_max + 1), repeat=s):
            for l in range(1, min(a) // 2 + 1):
                yield a, l


# oracles


def test_segment_counts_by_hand():
    # the segment from (k/2, 3k/2) to (3k/2, k/2) holds k+1 points for even k, k for odd k
    assert [count_dilated_section((2, 2), 1, 2, k) for k in range(1, 7)] == [1, 3, 3, 5, 5, 7]
    assert [count_dilated_section((6, 4, 5), 2, 0, k) for k in range(1, 4)] == [1, 1, 1]


def test_segment_quasipolynomial():
    qp = fit_section_quasipolynomial((2, 2), 1, 2)
    assert qp.period == 2 and qp.degree == 1
    assert qp.constituents == ((F(1), F(1)), (F(0), F(1)))
    assert relative_volume(qp) == 1
    assert qp.to_json() == {"period": 2, "constituents": [["1/1", "1/1"], ["0/1", "1/1"]], "degree": 1}
    assert QuasiPolynomial.from_json(qp.to_json()) == qp


def test_point_section():
    qp = fit_section_quasipolynomial((2, 2), 1, 0)
    assert qp.degree == 0 and [qp(k) for k in range(1, 5)] == [1, 1, 1, 1]
    assert relative_volume(qp) == 1


def test_counterexample_counts():
    assert count_dilated_section((6, 4, 5), 3, 7, 1) == 9
    assert count_dilated_section((6, 4, 5), 3, 8, 1) == 10


def test_counterexample_volumes_ratio():
    q7 = fit_section_quasipolynomial((6, 4, 5), 3, 7, force=True)
    q8 = fit_section_quasipolynomial((6, 4, 5), 3, 8, force=True)
    # first values counted directly on the lattice
    assert [q7(k) for k in range(1, 8)] == [9, 30, 63, 107, 163, 232, 311]
    assert [q8(k) for k in range(1, 8)] == [10, 31, 64, 109, 166, 235, 316]
    v7, v8 = relative_volume(q7), relative_volume(q8)
    assert (v7, v8) == (F(71, 12), F(6))
    assert v7 / v8 == F(71, 72)


def test_counterexample_symmetry_report():
    with pytest.raises(PreconditionError, match="2l <= min"):
        check_complementary_symmetry((6, 4, 5), 3)
    with pytest.raises(PreconditionError, match="2l <= min"):
        fit_section_quasipolynomial((6, 4, 5), 3, 7)
    rep = check_complementary_symmetry((6, 4, 5), 3, force=True)
    assert 7 in rep.violations and 8 in rep.violations
    assert rep.forced and not rep.ok


def test_complementary_sections_645_link_2():
    rep = check_complementary_symmetry((6, 4, 5), 2)
    assert rep.ok and len(rep.pairs) == 16
    assert rep.quasipolynomials[4] == rep.quasipolynomials[11]
    assert rep.quasipolynomials[4].period == 2


def test_full_ehrhart_polynomial():
    # (2,2),1: 4 - 2 * (1/2) area, boundary 6 lattice points, one point
    assert full_ehrhart_polynomial((2, 2), 1) == (F(1), F(3), F(3))
    assert ehrhart_volume((6, 4, 5), 2) == 90
    assert ehrhart_volume((4, 4, 4, 4), 1) == F(449, 2)


def test_order_polytope_negative_control():
    gate = build_circular_fence(GATE)
    assert order_polytope_section_count(gate, 4, 2) == 84
    assert order_polytope_section_count(gate, 5, 2) == 83
    # the textbook orientation swaps the two numbers
    assert order_polytope_section_count(gate, 4, 2, "upper") == 83
    assert order_polytope_section_count(gate, 5, 2, "upper") == 84
    assert order_polytope_section_counts(gate, 2) == [
        1, 3, 8, 15, 27, 40, 57, 70, 84, 85, 83, 71, 57, 40, 27, 15, 8, 3, 1,
    ]


def test_order_polytope_counts_ideals_at_dilation_one():
    gate = build_circular_fence(GATE)
    from chainlink.posets import rank_polynomial_bruteforce

    assert order_polytope_section_counts(gate) == list(rank_polynomial_bruteforce(gate).coefficients)


def test_general_fence_scan_finds_asymmetry():
    bad = general_fence_symmetry_violations(6, (1, 2))
    assert bad
    assert all(any(d >= 2 for d in b["composition"][1::2]) for b in bad)
    assert {"composition": [2, 2, 1, 1], "dilation": 2,
            "levels": [{"m": 5, "count": 7, "mirror": 8}, {"m": 7, "count": 8, "mirror": 7}]} in bad


# fitting machinery


def test_interpolate_and_fit():
    assert interpolate([(0, 1), (1, 3), (2, 7)]) == (F(1), F(1), F(1))
    qp = fit_quasipolynomial(lambda k: k * k + (k % 2), 2, 2)
    assert qp(11) == 122
    with pytest.raises(ConsistencyError):
        fit_quasipolynomial(lambda k: k * k + (k % 3 == 0), 2, 2)


def test_relative_volume_rejects_disagreeing_leads():
    qp = QuasiPolynomial(2, ((F(0), F(1)), (F(0), F(2))), 1)
    with pytest.raises(ConsistencyError):
        relative_volume(qp)
    with pytest.raises(ChainlinkError):
        QuasiPolynomial(2, ((F(1),),), 0)


def test_equivalent_across_periods():
    a = QuasiPolynomial(1, ((F(1), F(1)),), 1)
    b = QuasiPolynomial(2, ((F(1), F(1)), (F(1), F(1))), 1)
    assert a.equivalent(b) and a != b


def test_section_bounds():
    with pytest.raises(PreconditionError, match="0 <= t <= sum"):
        count_dilated_section((2, 2), 1, 5, 1)


def test_disagreement_is_a_hard_fault(monkeypatch):
    from chainlink.qpoly import QPolynomial

    monkeypatch.setattr(ehrhart, "chainlink_rank_polynomial", lambda a, l: QPolynomial([1, 2, 5, 2, 1]))
    with pytest.raises(ConsistencyError):
        count_dilated_section((2, 2), 1, 2, 1)


# properties over the desk-scale family


@pytest.mark.parametrize("a,l", list(family()))
def test_two_counting_paths_and_level_symmetry(a, l):
    n = sum(a)
    for k in range(1, 5):
        # raises if the rank polynomial and the lattice scan disagree
        counts = dilated_section_counts(a, l, k)
        assert counts == counts[::-1]
        assert len(counts) == n + 1
    level_one = dilated_section_counts(a, l, 1)
    for t in range(n + 1):
        assert count_dilated_section(a, l, t, 1) == level_one[t]


@pytest.mark.parametrize("a,l", list(family(s_max=2)) + [((6, 4, 5), 2), ((4, 5, 4), 2), ((2, 3, 2), 1)])
def test_fitted_complementary_sections_agree(a, l):
    rep = check_complementary_symmetry(a, l)
    assert rep.ok, rep.violations
    for t, qp in rep.quasipolynomials.items():
        assert qp.period == 2
        assert qp.degree == (0 if t in (0, sum(a)) else len(a) - 1)


@pytest.mark.parametrize("a,l", [((2, 2), 1), ((3, 4), 1), ((2, 3, 4), 1), ((4, 5, 4), 2)])
def test_full_polynomial_leading_coefficient_is_volume(a, l):
    assert full_ehrhart_polynomial(a, l)[-1] == volume_trace(a, l)
