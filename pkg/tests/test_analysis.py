import itertools

import pytest

from chainlink.analysis import (
    fence_unimodality_scan,
    is_exception_pattern,
    stretch_analysis,
    unimodality_scan,
    verify_rank_recurrence,
)
from chainlink.errors import CapExceeded, ChainlinkError
from chainlink.posets import build_chainlink_poset, rank_polynomial_bruteforce


def test_scan_up_to_4():
    res = unimodality_scan(4)
    assert res.violations == [((1, 1, 1, 1), 2)]
    assert res.ok and res.instances_checked == 7


def test_scan_up_to_8():
    res = unimodality_scan(8)
    assert [c for c, _ in res.violations] == [(1, 1, 1, 1), (2, 1, 2, 1), (1, 2, 1, 2), (3, 1, 3, 1), (1, 3, 1, 3)]
    assert all(p == 2 for _, p in res.violations)
    assert res.ok and not res.asymmetric


def test_scan_up_to_2():
    res = unimodality_scan(2)
    assert res.instances_checked == 1 and res.violations == []


def test_scan_guard():
    with pytest.raises(ChainlinkError, match="max_total"):
        unimodality_scan(19)


def test_scan_exports():
    res = unimodality_scan(6)
    assert res.to_csv().splitlines() == [
        "composition,peak_count", '"1,1,1,1",2', '"2,1,2,1",2', '"1,2,1,2",2',
    ]
    data = res.to_json()
    assert data["violations"][0] == {"composition": [1, 1, 1, 1], "peak_count": 2}
    assert data["ok"] is True


def test_exception_pattern_is_literal():
    assert is_exception_pattern((3, 1, 3, 1)) and is_exception_pattern((1, 3, 1, 3))
    assert not is_exception_pattern((3, 1, 2, 1))
    assert not is_exception_pattern((1, 1, 1, 1, 1, 1))


def test_fence_scan_small():
    res = fence_unimodality_scan(8)
    assert res.ok and res.instances_checked == 2 ** 8 - 1


@pytest.mark.parametrize("a,b,X", [(2, 2, (1,)), (1, 1, (3,)), (1, 2, (1, 1, 1))])
def test_rank_recurrence_examples(a, b, X):
    assert verify_rank_recurrence(a, b, X)


def test_rank_recurrence_grid():
    count = 0
    for a, b in itertools.product(range(1, 4), repeat=2):
        for length in (1, 3, 5):
            for X in itertools.product((1, 2), repeat=length):
                if a + b + 1 + sum(X) <= 12:
                    assert verify_rank_recurrence(a, b, X), (a, b, X)
                    count += 1
    assert count > 200


def test_rank_recurrence_rejects_even_tail():
    with pytest.raises(ChainlinkError):
        verify_rank_recurrence(1, 1, (1, 1))


def test_stretch_rows_are_literal_stretches():
    rows = stretch_analysis((2, 2), 1, 3)
    assert [r.composition for r in rows] == [(2, 2), (2, 1, 2, 1), (2, 1, 1, 2, 1, 1), (2, 1, 1, 1, 2, 1, 1, 1)]
    # computed by brute force on the literal (2, 1^k, 2, 1^k) construction
    assert [r.coefficients for r in rows] == [
        (1, 2, 1, 2, 1),
        (1, 2, 3, 2, 3, 2, 1),
        (1, 2, 3, 4, 3, 4, 3, 2, 1),
        (1, 2, 3, 4, 5, 4, 5, 4, 3, 2, 1),
    ]
    assert all(r.symmetric for r in rows)
    assert [r.peak_count for r in rows] == [2, 2, 2, 2]


def test_published_stretch_lists_are_the_dilates():
    # the published k-stretch lists coincide with P_CL((2k+2, 2k+2), k+1)
    published = {
        1: (1, 2, 3, 2, 3, 2, 3, 2, 1),
        2: (1, 2, 3, 4, 3, 4, 3, 4, 3, 4, 3, 2, 1),
        3: (1, 2, 3, 4, 5, 4, 5, 4, 5, 4, 5, 4, 5, 4, 3, 2, 1),
    }
    for k, seq in published.items():
        m = 2 * (k + 1)
        assert rank_polynomial_bruteforce(build_chainlink_poset((m, m), k + 1)).coefficients == seq


def test_stretch_4_4_2():
    row = stretch_analysis((4, 4), 2, 0)[0]
    assert row.peak_count == 3 and row.symmetric


def test_stretch_cap():
    with pytest.raises(CapExceeded):
        stretch_analysis((6, 6), 1, 8)
