"""Nim with a single pass: exact values and closed forms for small values."""
from __future__ import annotations

from typing import Sequence

from .core import SGCache, sg
from .games import NIM_PASS


def gp(x: int, y: int, cache: SGCache | None = None) -> int:
    """SG value of two-pile nim (x, y) with the pass unused."""
    return sg(NIM_PASS, NIM_PASS.key(x, y, 1), cache)


def gp_n(piles: Sequence[int], cache: SGCache | None = None) -> int:
    if not piles:
        return 0
    return sg(NIM_PASS, NIM_PASS.key(*piles, 1), cache)


def gp_table(max_pile: int, cache: SGCache | None = None) -> list[list[int]]:
    # row-major so each new entry only expands itself; everything below is cached
    cache = SGCache() if cache is None else cache
    return [[gp(x, y, cache) for y in range(max_pile + 1)] for x in range(max_pile + 1)]


def gp_is_zero(x: int, y: int) -> bool:
    if x == y == 0:
        return True
    lo, hi = sorted((x, y))
    return lo % 2 == 1 and hi == lo + 1


def gp_is_one(x: int, y: int) -> bool:
    return (x, y) in ((0, 2), (2, 0)) or (x == y and x not in (0, 2))


GP_TWO_SPORADIC = frozenset({(0, 1), (1, 0), (2, 2), (3, 5), (4, 7), (5, 3), (6, 8), (7, 4), (8, 6)})


def gp_is_two(x: int, y: int) -> bool:
    if (x, y) in GP_TWO_SPORADIC:
        return True
    return x >= 9 and y >= 9 and (x - 1) ^ (y - 1) == 3
