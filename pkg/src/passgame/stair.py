"""Stair chocolate game with a pass: positions (x, y, z, p) under F(x, z) = h(z).

The game is a one-pile nim of size x next to CB2(h, y, z); p = 1 while the
pass is unused. Payload layout of ``stair[<h>]`` is ``(x, y, z, p)``.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

from .chocolate import Choco2, HFunction, InvalidPosition
from .core import PositionKey, Ruleset, SGCache, make_key, sg
from .games import NIM
from .nimpass import gp


class StairPosition(NamedTuple):
    x: int
    y: int
    z: int
    p: int


def stair_position(h: HFunction, x: int, y: int, z: int, p: int) -> StairPosition:
    if min(x, y, z) < 0 or p not in (0, 1):
        raise InvalidPosition("coordinates must be nonnegative and p a bit")
    if y > h(z):
        raise InvalidPosition(f"y <= h(z) violated: y={y} > h({z})={h(z)}")
    return StairPosition(x, y, z, p)


def stair_moves(h: HFunction, s: StairPosition) -> set[StairPosition]:
    x, y, z, p = s
    out = {StairPosition(u, y, z, p) for u in range(x)}
    out.update(StairPosition(x, v, z, p) for v in range(y))
    out.update(StairPosition(x, min(y, h(w)), w, p) for w in range(z))
    if p and out:
        out.add(StairPosition(x, y, z, 0))
    return out


class Stair(Ruleset):
    def __init__(self, h: HFunction) -> None:
        self.h = h
        self.rid = f"stair[{h.spec}]"

    def position(self, x: int, y: int, z: int, p: int) -> PositionKey:
        return make_key(self.rid, stair_position(self.h, x, y, z, p))

    key = position

    def options(self, key: PositionKey) -> list[PositionKey]:
        # same rule as stair_moves, on plain tuples
        x, y, z, p = key.payload
        h = self.h
        out = {(u, y, z, p) for u in range(x)}
        out.update((x, v, z, p) for v in range(y))
        out.update((x, min(y, h(w)), w, p) for w in range(z))
        if p and out:
            out.add((x, y, z, 0))
        rid = self.rid
        return [PositionKey(rid, t) for t in out]

    def is_terminal(self, key: PositionKey) -> bool:
        return key.payload[:3] == (0, 0, 0)


def stair_sg(h: HFunction, s: Sequence[int], cache: SGCache | None = None, budget: int | None = None) -> int:
    """Brute force over the (x, y, z, p) game tree."""
    r = Stair(h)
    return sg(r, r.position(*s), cache, budget)


def stair_sg_fast(
    h: HFunction, s: Sequence[int], cache: SGCache | None = None, gp_table: Sequence[Sequence[int]] | None = None
) -> int:
    """Component values (nim pile, CB2 bar), then XOR or a nim-with-pass lookup."""
    x, y, z, p = stair_position(h, *s)
    cache = SGCache() if cache is None else cache
    a = sg(NIM, NIM.key(x), cache)
    bar = Choco2(h)
    b = sg(bar, bar.position(y, z), cache)
    if not p:
        return a ^ b
    if gp_table is not None and a < len(gp_table) and b < len(gp_table):
        return gp_table[a][b]
    return gp(a, b, cache)


# -- closed forms for SG values 0, 1, 2 ---------------------------------------


def _valid(h: HFunction, s: Sequence[int]) -> bool:
    x, y, z, p = s
    return min(x, y, z) >= 0 and p in (0, 1) and y <= h(z)


def in_A(h: HFunction, s: Sequence[int]) -> bool:
    """Positions with SG value 0 (previous player wins)."""
    if not _valid(h, s):
        return False
    x, y, z, p = s
    if p == 0:
        return x ^ y ^ z == 0
    if (x, y, z) == (0, 0, 0):
        return True
    if x % 2 == 1:
        return (x + 1) ^ y ^ z == 0
    return x >= 2 and (x - 1) ^ y ^ z == 0


B1 = frozenset({(0, 0, 2), (0, 1, 3), (2, 0, 0)})
B3 = frozenset({(0, 0, 0), (2, 0, 2), (2, 1, 3)})


def in_B(h: HFunction, s: Sequence[int]) -> bool:
    """Positions with SG value 1."""
    if not _valid(h, s):
        return False
    x, y, z, p = s
    if p == 0:
        return x ^ y ^ z == 1
    t = (x, y, z)
    return (t in B1 or x ^ y ^ z == 0) and t not in B3


# Grouped by (nim value x, bar value y^z) of the nim-with-pass pair that has value 2.
C1 = frozenset({
    (0, 0, 1),                                   # (0, 1)
    (1, 0, 0),                                   # (1, 0)
    (2, 0, 2), (2, 1, 3),                        # (2, 2)
    (3, 0, 5), (3, 1, 4), (3, 2, 7), (3, 3, 6),  # (3, 5)
    (4, 0, 7), (4, 1, 6), (4, 2, 5), (4, 3, 4),  # (4, 7)
    (5, 0, 3), (5, 1, 2),                        # (5, 3)
    (6, 0, 8), (6, 1, 9), (6, 2, 10), (6, 3, 11),
    (6, 4, 12), (6, 5, 13), (6, 6, 14), (6, 7, 15),  # (6, 8)
    (7, 0, 4), (7, 1, 5), (7, 2, 6), (7, 3, 7),  # (7, 4)
    (8, 0, 6), (8, 1, 7), (8, 2, 4), (8, 3, 5),  # (8, 6)
})

# Pairs solving ((x-1)^3)+1 = y^z with x <= 8; these have value != 2.
C3 = frozenset({
    (1, 0, 4), (1, 1, 5), (1, 2, 6), (1, 3, 7),  # x=1, y^z=4
    (2, 0, 3), (2, 1, 2),                        # x=2, y^z=3
    (3, 0, 2), (3, 1, 3),                        # x=3, y^z=2
    (4, 0, 1),                                   # x=4, y^z=1
    (5, 0, 8), (5, 1, 9), (5, 2, 10), (5, 3, 11),
    (5, 4, 12), (5, 5, 13), (5, 6, 14), (5, 7, 15),  # x=5, y^z=8
    (6, 0, 7), (6, 1, 6), (6, 2, 5), (6, 3, 4),  # x=6, y^z=7
    (7, 0, 6), (7, 1, 7), (7, 2, 4), (7, 3, 5),  # x=7, y^z=6
    (8, 0, 5), (8, 1, 4), (8, 2, 7), (8, 3, 6),  # x=8, y^z=5
})


def in_C(h: HFunction, s: Sequence[int]) -> bool:
    """Positions with SG value 2."""
    if not _valid(h, s):
        return False
    x, y, z, p = s
    if p == 0:
        return x ^ y ^ z == 2
    t = (x, y, z)
    # x - 1 must be a nonnegative integer for the arithmetic family
    arith = x >= 1 and (((x - 1) ^ 3) + 1) ^ y ^ z == 0
    return (t in C1 or arith) and t not in C3
