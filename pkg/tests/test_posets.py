import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from chainlink.errors import CapExceeded, ChainlinkError, PreconditionError
from chainlink.posets import (
    FinitePoset,
    antichain,
    box_poset,
    build_chainlink_poset,
    build_circular_fence,
    build_fence,
    build_stretched_chainlink,
    chain,
    close_up,
    ideal_counts_bitmask,
    iter_ideals,
    oriented_chain,
    rank_polynomial_bruteforce,
    stretched_composition,
)
from chainlink.qpoly import QPolynomial, gaussian_binomial


def as_digraph(p: FinitePoset) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(p.n))
    g.add_edges_from(p.covers)
    return g


def isomorphic(p: FinitePoset, q: FinitePoset) -> bool:
    return nx.is_isomorphic(as_digraph(p), as_digraph(q))


@st.composite
def random_posets(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    perm = draw(st.permutations(range(n)))
    return FinitePoset(n, [(perm[i], perm[j]) for i, j in chosen])


# oracles: ideals listed by hand


def test_small_fences_by_hand():
    # a 2-chain: {}, {0}, {0,1}
    assert rank_polynomial_bruteforce(build_fence((1,))).coefficients == (1, 1, 1)
    # 0 < 1 > 2: {}, {0}, {2}, {0,2}, {0,1,2}
    assert rank_polynomial_bruteforce(build_fence((1, 1))).coefficients == (1, 2, 1, 1)
    # (1,1) closes up into a 2-chain
    assert rank_polynomial_bruteforce(build_circular_fence((1, 1))).coefficients == (1, 1, 1)
    # the crown on four elements
    assert rank_polynomial_bruteforce(build_circular_fence((1, 1, 1, 1))).coefficients == (1, 2, 1, 2, 1)


def test_circular_fence_2112():
    # listed by hand: sizes 0..6 give 1,2,3,3,3,2,1 ideals
    p = build_circular_fence((2, 1, 1, 2))
    assert rank_polynomial_bruteforce(p).coefficients == (1, 2, 3, 3, 3, 2, 1)
    assert ideal_counts_bitmask(p) == [1, 2, 3, 3, 3, 2, 1]


def test_chainlink_2_2_1_is_the_crown():
    p = build_chainlink_poset((2, 2), 1)
    assert p.n == 4
    assert isomorphic(p, build_circular_fence((1, 1, 1, 1)))


def test_chainlink_poset_sizes_and_covers():
    p = build_chainlink_poset((6, 4, 5), 2)
    assert p.n == 15
    # 3 chains of a_i - 1 covers plus l links between consecutive chains
    assert len(p.covers) == (5 + 3 + 4) + 3 * 2
    assert build_stretched_chainlink((6, 4, 5), 2, 1).n == 21
    assert stretched_composition((2, 2), 1, 2) == (2, 1, 1, 2, 1, 1)


def test_chainlink_without_links_is_disjoint_chains():
    p = build_chainlink_poset((3, 2), 0)
    want = QPolynomial.q_integer(4) * QPolynomial.q_integer(3)
    assert rank_polynomial_bruteforce(p) == want


def test_chainlink_precondition():
    with pytest.raises(PreconditionError, match="l <= min"):
        build_chainlink_poset((2, 3), 3)


def test_circular_fence_odd_length():
    with pytest.raises(ChainlinkError, match="odd-length composition"):
        build_circular_fence((1, 1, 1))


def test_standard_families():
    assert rank_polynomial_bruteforce(chain(4)) == QPolynomial.q_integer(5)
    assert rank_polynomial_bruteforce(antichain(3)) == QPolynomial([1, 1]) ** 3
    assert rank_polynomial_bruteforce(box_poset(2, 3)) == gaussian_binomial(5, 2)
    assert rank_polynomial_bruteforce(antichain(0)) == 1


def test_transitive_reduction_and_cycles():
    p = FinitePoset(3, [(0, 1), (1, 2), (0, 2)])
    assert p.covers == frozenset({(0, 1), (1, 2)})
    assert p.less(0, 2) and not p.less(2, 0)
    with pytest.raises(ChainlinkError, match="cycle"):
        FinitePoset(2, [(0, 1), (1, 0)])
    with pytest.raises(ChainlinkError):
        FinitePoset(2, [(0, 5)])


def test_cap():
    with pytest.raises(CapExceeded):
        rank_polynomial_bruteforce(chain(30))
    with pytest.raises(CapExceeded):
        ideal_counts_bitmask(chain(21))


def test_close_up():
    with pytest.raises(ChainlinkError):
        close_up(oriented_chain(2, increasing=True))
    assert close_up(oriented_chain(2, increasing=False)) == chain(2)


def test_json_round_trip():
    p = build_circular_fence((2, 1, 1, 2))
    assert FinitePoset.from_json(p.to_json()) == p


def test_fence_sizes():
    assert build_fence((2, 3, 1)).n == 7
    assert build_circular_fence((2, 3, 1, 2)).n == 8


# properties


@settings(max_examples=60, deadline=None)
@given(random_posets())
def test_three_ideal_counters_agree(p):
    r = rank_polynomial_bruteforce(p)
    counts = [0] * (p.n + 1)
    for mask in iter_ideals(p):
        counts[bin(mask).count("1")] += 1
    assert list(r.coefficients) == ideal_counts_bitmask(p)[: len(r.coefficients)]
    assert counts[: len(r.coefficients)] == list(r.coefficients)
    assert r[0] == 1 and r[p.n] == 1


@settings(max_examples=40, deadline=None)
@given(random_posets())
def test_dual_reverses_rank_polynomial(p):
    r = rank_polynomial_bruteforce(p).coefficients
    rd = rank_polynomial_bruteforce(p.dual()).coefficients
    assert rd == r[::-1]


@settings(max_examples=40, deadline=None)
@given(random_posets())
def test_linear_extension_respects_order(p):
    pos = {x: i for i, x in enumerate(p.linear_extension())}
    assert all(pos[lo] < pos[hi] for lo, hi in p.covers)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=2, max_size=6).filter(lambda c: len(c) % 2 == 0))
def test_circular_fence_is_a_cycle_graph(c):
    p = build_circular_fence(c)
    g = as_digraph(p).to_undirected()
    if len(c) > 2 or min(c) > 1:
        assert nx.is_isomorphic(g, nx.cycle_graph(p.n))
    else:
        # a single cover on one side is implied by the other side
        assert nx.is_isomorphic(g, nx.path_graph(p.n))
