"""Composition helpers shared by every module."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .errors import ChainlinkError

Composition = tuple[int, ...]


def as_composition(c: Sequence[int], *, weak: bool = False) -> Composition:
    parts = tuple(int(x) for x in c)
    if not parts:
        raise ChainlinkError("empty composition")
    floor = 0 if weak else 1
    for x in parts:
        if x < floor:
            kind = "nonnegative" if weak else "positive"
            raise ChainlinkError(f"composition parts must be {kind}, got {x}")
    return parts


def parse_composition(text: str, *, weak: bool = False) -> Composition:
    """Parse ``"6,4,5"`` into ``(6, 4, 5)``."""
    try:
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise ChainlinkError(f"malformed composition {text!r}") from None
    return as_composition(parts, weak=weak)


def compositions_of(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in lexicographic-by-cut order."""
    if n <= 0:
        return
    for cuts in product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def compositions_up_to(max_total: int, *, even_length: bool = False) -> Iterator[Composition]:
    for n in range(1, max_total + 1):
        for c in compositions_of(n):
            if even_length and len(c) % 2:
                continue
            yield c


def merge_zero_parts(c: Sequence[int]) -> Composition:
    """Drop zero parts of a cyclic weak composition, merging their neighbours.

    Alignment is kept: a part at an even index stays at an even index, so the
    up/down pattern of the remaining runs is unchanged.  Returns ``(n,)`` when
    everything collapses into a single run.
    """
    parts = list(c)
    while len(parts) > 1 and 0 in parts:
        i = parts.index(0)
        m = len(parts)
        if m == 2:
            parts = [parts[1 - i]]
            break
        left, right = (i - 1) % m, (i + 1) % m
        merged = parts[left] + parts[right]
        if i == 0:
            parts = parts[2:left] + [merged]
        elif i == m - 1:
            parts = [merged] + parts[1:left]
        else:
            parts = parts[:left] + [merged] + parts[right + 1:]
    return tuple(parts)
