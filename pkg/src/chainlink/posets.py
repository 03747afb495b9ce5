"""Finite posets of the fence / chainlink families and brute-force oracles.

Everything here works on small posets (a few dozen elements at most) and
is meant as ground truth for the matrix calculus in :mod:`chainlink.transfer`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .compositions import as_composition
from .errors import CapExceeded, ChainlinkError, PreconditionError
from .qpoly import QPolynomial

DEFAULT_CAP = 26


class FinitePoset:
    """A poset on ``0..n-1`` given by its cover relations.

    ``covers`` may contain implied relations; they are removed on construction
    so the stored set is always the transitive reduction.
    """

    __slots__ = ("n", "covers", "_below", "_above", "_lower_covers", "_order")

    def __init__(self, n: int, covers: Iterable[tuple[int, int]]):
        if n < 0:
            raise ChainlinkError("element count must be nonnegative")
        rel = set()
        for lo, hi in covers:
            lo, hi = int(lo), int(hi)
            if not (0 <= lo < n and 0 <= hi < n):
                raise ChainlinkError(f"cover ({lo}, {hi}) outside 0..{n - 1}")
            if lo == hi:
                raise ChainlinkError(f"self-cover on element {lo}")
            rel.add((lo, hi))
        self.n = n
        ups: list[set[int]] = [set() for _ in range(n)]
        for lo, hi in rel:
            ups[lo].add(hi)
        order = _topological_order(n, ups)
        if order is None:
            raise ChainlinkError("cover relation contains a cycle")
        # strict up-sets as bitmasks, filled in reverse topological order
        above = [0] * n
        for x in reversed(order):
            m = 0
            for y in ups[x]:
                m |= (1 << y) | above[y]
            above[x] = m
        below = [0] * n
        for x in range(n):
            m = above[x]
            while m:
                low = m & -m
                below[low.bit_length() - 1] |= 1 << x
                m ^= low
        reduced = set()
        for lo, hi in rel:
            implied = any(mid != hi and (above[mid] >> hi) & 1 for mid in ups[lo])
            if not implied:
                reduced.add((lo, hi))
        self.covers = frozenset(reduced)
        self._above = tuple(above)
        self._below = tuple(below)
        self._order = tuple(order)
        lower: list[list[int]] = [[] for _ in range(n)]
        for lo, hi in reduced:
            lower[hi].append(lo)
        self._lower_covers = tuple(tuple(sorted(x)) for x in lower)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.n, self.covers))

    def __repr__(self) -> str:
        return f"FinitePoset(n={self.n}, covers={sorted(self.covers)})"

    def less(self, x: int, y: int) -> bool:
        """Strict order ``x < y``."""
        return bool((self._above[x] >> y) & 1)

    def down_mask(self, x: int) -> int:
        """Bitmask of the principal lower ideal of ``x`` (``x`` included)."""
        return self._below[x] | (1 << x)

    def up_mask(self, x: int) -> int:
        return self._above[x] | (1 << x)

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return self._lower_covers[x]

    def linear_extension(self) -> tuple[int, ...]:
        return self._order

    def induced(self, keep: Sequence[int]) -> tuple["FinitePoset", dict[int, int]]:
        """Subposet on ``keep`` (relabelled ``0..len(keep)-1``) and the relabelling map."""
        index = {x: i for i, x in enumerate(keep)}
        rel = []
        for x in keep:
            m = self._above[x]
            for y in keep:
                if (m >> y) & 1:
                    rel.append((index[x], index[y]))
        return FinitePoset(len(keep), rel), index

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.n, ((hi, lo) for lo, hi in self.covers))

    def to_json(self) -> dict:
        return {"n": self.n, "covers": sorted([lo, hi] for lo, hi in self.covers)}

    @classmethod
    def from_json(cls, data: dict | str) -> "FinitePoset":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), [tuple(pair) for pair in data["covers"]])


def _topological_order(n: int, ups: list[set[int]]) -> list[int] | None:
    indeg = [0] * n
    for x in range(n):
        for y in ups[x]:
            indeg[y] += 1
    ready = [x for x in range(n) if indeg[x] == 0]
    ready.sort(reverse=True)
    order = []
    while ready:
        x = ready.pop()
        order.append(x)
        for y in sorted(ups[x], reverse=True):
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
        ready.sort(reverse=True)
    return order if len(order) == n else None


@dataclass(frozen=True)
class OrientedPoset:
    """A poset with a target (``left``) and a source (``right``) element."""

    poset: FinitePoset
    left: int
    right: int

    def __post_init__(self):
        for name in ("left", "right"):
            v = getattr(self, name)
            if not 0 <= v < self.poset.n:
                raise ChainlinkError(f"{name} element {v} is not in the poset")


# constructors ---------------------------------------------------------------

def build_fence(c: Sequence[int]) -> FinitePoset:
    """Fence with alternating up/down runs of lengths ``c_1, c_2, ...``; ``sum(c)+1`` nodes."""
    c = as_composition(c)
    n = sum(c) + 1
    covers = []
    pos = 0
    for idx, part in enumerate(c):
        for _ in range(part):
            a, b = pos, pos + 1
            covers.append((a, b) if idx % 2 == 0 else (b, a))
            pos += 1
    return FinitePoset(n, covers)


def build_circular_fence(c: Sequence[int]) -> FinitePoset:
    """The fence on ``c`` with its two end points identified; ``sum(c)`` nodes."""
    c = as_composition(c)
    if len(c) % 2:
        raise ChainlinkError(f"circular fence needs an even number of parts; odd-length composition {c}")
    n = sum(c)
    covers = []
    pos = 0
    for idx, part in enumerate(c):
        for _ in range(part):
            a, b = pos % n, (pos + 1) % n
            covers.append((a, b) if idx % 2 == 0 else (b, a))
            pos += 1
    return FinitePoset(n, covers)


def chain_offsets(a: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for x in a:
        out.append(acc)
        acc += x
    return out


def build_chainlink_poset(a: Sequence[int], l: int) -> FinitePoset:
    """Chains of lengths ``a_i`` whose top ``l`` elements sit above the bottom ``l`` of the next chain.

    Element ``offset_i + j`` is the ``(j+1)``-th element from the bottom of
    chain ``i``, so a lower ideal meeting chain ``i`` in ``x_i`` elements is a
    lattice point of the chainlink polytope.
    """
    a = as_composition(a)
    if l < 0:
        raise PreconditionError(f"link number must be nonnegative, got l={l}")
    if l > min(a):
        raise PreconditionError(f"l <= min(a) violated: l={l}, min(a)={min(a)}")
    s = len(a)
    off = chain_offsets(a)
    covers = []
    for i, ai in enumerate(a):
        for j in range(ai - 1):
            covers.append((off[i] + j, off[i] + j + 1))
    for i, ai in enumerate(a):
        nxt = (i + 1) % s
        for j in range(l):
            hi = off[i] + ai - l + j
            lo = off[nxt] + j
            if hi != lo:
                covers.append((lo, hi))
    return FinitePoset(sum(a), covers)


def stretched_composition(a: Sequence[int], l: int, k: int) -> tuple[int, ...]:
    a = as_composition(a)
    if k < 0:
        raise ChainlinkError(f"stretch must be nonnegative, got k={k}")
    out: list[int] = []
    for x in a:
        out.append(x)
        out.extend([l] * k)
    return tuple(out)


def build_stretched_chainlink(a: Sequence[int], l: int, k: int) -> FinitePoset:
    """Chainlink poset on ``(a_1, l^k, a_2, l^k, ..., a_s, l^k)`` with link ``l``."""
    if l < 1:
        raise PreconditionError(f"stretching needs l >= 1, got l={l}")
    return build_chainlink_poset(stretched_composition(a, l, k), l)


def antichain(n: int) -> FinitePoset:
    return FinitePoset(n, [])


def chain(m: int) -> FinitePoset:
    return FinitePoset(m, [(i, i + 1) for i in range(m - 1)])


def box_poset(a: int, b: int) -> FinitePoset:
    """Product of an ``a``-chain and a ``b``-chain; element ``(i, j)`` is ``i*b + j``."""
    covers = []
    for i in range(a):
        for j in range(b):
            if i + 1 < a:
                covers.append((i * b + j, (i + 1) * b + j))
            if j + 1 < b:
                covers.append((i * b + j, i * b + j + 1))
    return FinitePoset(a * b, covers)


# oriented posets ------------------------------------------------------------

def oriented_up_step() -> OrientedPoset:
    return OrientedPoset(chain(1), 0, 0)


def oriented_chain(m: int, increasing: bool = True) -> OrientedPoset:
    """An ``m``-chain; increasing means left is the minimum and right the maximum."""
    if m < 1:
        raise ChainlinkError("chain needs at least one element")
    if increasing:
        return OrientedPoset(chain(m), 0, m - 1)
    return OrientedPoset(chain(m), m - 1, 0)


def oriented_box(a: int, b: int) -> OrientedPoset:
    """Box ``a x b`` with left ``(a-1, 0)`` and right ``(0, b-1)``."""
    if a < 1 or b < 1:
        raise ChainlinkError("box sides must be positive")
    return OrientedPoset(box_poset(a, b), (a - 1) * b, b - 1)


def link(p: OrientedPoset, q: OrientedPoset) -> OrientedPoset:
    """Disjoint union with the source of ``p`` placed below the target of ``q``."""
    shift = p.poset.n
    covers = list(p.poset.covers)
    covers += [(lo + shift, hi + shift) for lo, hi in q.poset.covers]
    covers.append((p.right, q.left + shift))
    return OrientedPoset(FinitePoset(shift + q.poset.n, covers), p.left, q.right + shift)


def close_up(p: OrientedPoset) -> FinitePoset:
    """Add ``right <= left``; rejected when that would create a cycle."""
    if p.left == p.right or p.poset.less(p.right, p.left):
        return p.poset
    if p.poset.less(p.left, p.right):
        raise ChainlinkError("closing this oriented poset identifies elements")
    return FinitePoset(p.poset.n, list(p.poset.covers) + [(p.right, p.left)])


# brute force ----------------------------------------------------------------

def _check_cap(p: FinitePoset, cap: int) -> None:
    if p.n > cap:
        raise CapExceeded(f"poset has {p.n} elements, cap is {cap}")


def rank_polynomial_bruteforce(p: FinitePoset, cap: int = DEFAULT_CAP) -> QPolynomial:
    """Sum of ``q^|I|`` over lower ideals ``I``.

    Elements are decided in linear-extension order; the memo key is the set
    of already-included elements that still have an undecided upper cover.
    """
    _check_cap(p, cap)
    order = p.linear_extension()
    pos = {x: i for i, x in enumerate(order)}
    n = p.n
    # last position at which element x still matters as a lower cover
    last_needed = [-1] * n
    for lo, hi in p.covers:
        last_needed[lo] = max(last_needed[lo], pos[hi])
    lows = [p.lower_covers(x) for x in order]
    memo: dict[tuple[int, frozenset], tuple[int, ...]] = {}

    def go(i: int, included: frozenset) -> tuple[int, ...]:
        if i == n:
            return (1,)
        key = (i, included)
        hit = memo.get(key)
        if hit is not None:
            return hit
        x = order[i]

        def prune(s: Iterable[int]) -> frozenset:
            return frozenset(y for y in s if last_needed[y] > i)

        out = list(go(i + 1, prune(included)))
        if all(y in included for y in lows[i]):
            with_x = go(i + 1, prune(included | {x}))
            if len(with_x) + 1 > len(out):
                out.extend([0] * (len(with_x) + 1 - len(out)))
            for k, c in enumerate(with_x):
                out[k + 1] += c
        res = tuple(out)
        memo[key] = res
        return res

    return QPolynomial(go(0, frozenset()))


def iter_ideals(p: FinitePoset, cap: int = DEFAULT_CAP) -> Iterator[int]:
    """Every lower ideal as a bitmask, no memoisation."""
    _check_cap(p, cap)
    order = p.linear_extension()
    lowmask = [0] * p.n
    for lo, hi in p.covers:
        lowmask[hi] |= 1 << lo
    stack = [(0, 0)]
    while stack:
        i, mask = stack.pop()
        if i == p.n:
            yield mask
            continue
        x = order[i]
        stack.append((i + 1, mask))
        if lowmask[x] & ~mask == 0:
            stack.append((i + 1, mask | (1 << x)))


def ideal_counts_bitmask(p: FinitePoset, cap: int = 20) -> list[int]:
    """Ideal counts by size from a scan over all ``2^n`` subsets (independent oracle)."""
    if p.n > cap:
        raise CapExceeded(f"bitmask scan limited to {cap} elements, got {p.n}")
    masks = np.arange(1 << p.n, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for lo, hi in p.covers:
        ok &= ((masks >> hi) & 1) <= ((masks >> lo) & 1)
    good = masks[ok]
    sizes = np.zeros(good.shape, dtype=np.int64)
    for b in range(p.n):
        sizes += (good >> b) & 1
    counts = np.bincount(sizes, minlength=p.n + 1)
    return [int(c) for c in counts]


def rank_matrix_bruteforce(op: OrientedPoset, cap: int = DEFAULT_CAP):
    """Rank matrix of an oriented poset by classifying every lower ideal."""
    from .transfer import RankMatrix

    rb, lb = 1 << op.right, 1 << op.left
    buckets = [[0] * (op.poset.n + 1) for _ in range(4)]
    for mask in iter_ideals(op.poset, cap):
        size = bin(mask).count("1")
        r_in = bool(mask & rb)
        l_in = bool(mask & lb)
        if r_in:
            buckets[0][size] += 1
            if not l_in:
                buckets[2][size] += 1
        else:
            buckets[1][size] += 1
            if not l_in:
                buckets[3][size] += 1
    e = [QPolynomial(b) for b in buckets]
    return RankMatrix(((e[0], e[1]), (e[2], e[3])))
