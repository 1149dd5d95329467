"""Nim-family rulesets.

Payload layouts:

* ``nim``       -- ``(m,)`` single pile
* ``nim2``      -- ``(a, b)`` two-pile nim treated as one game
* ``nim-pass``  -- ``(m_1, ..., m_n, p)`` with piles sorted ascending and
  ``p = 1`` while the pass is unused
"""
from __future__ import annotations

import hashlib
from bisect import insort

from .core import PositionKey, Ruleset, make_key


class Nim(Ruleset):
    rid = "nim"

    def options(self, key: PositionKey) -> list[PositionKey]:
        return [PositionKey("nim", (u,)) for u in range(key.payload[0])]

    def is_terminal(self, key: PositionKey) -> bool:
        return key.payload[0] == 0


class TwoPileNim(Ruleset):
    """Two-pile nim viewed as a single component game.

    Position (1, 1) has SG value 0 without being terminal, which makes it the
    standard example of a game that is not one-move.
    """

    rid = "nim2"

    def options(self, key: PositionKey) -> list[PositionKey]:
        a, b = key.payload
        return [PositionKey("nim2", (u, b)) for u in range(a)] + [
            PositionKey("nim2", (a, v)) for v in range(b)
        ]

    def is_terminal(self, key: PositionKey) -> bool:
        return key.payload == (0, 0)


class NimPass(Ruleset):
    """n-pile nim where one pass may be used once, never at the empty position.

    Piles are kept sorted, so permutations of the same piles share one key.
    """

    rid = "nim-pass"

    def key(self, *coords: int) -> PositionKey:
        *piles, p = coords
        if p not in (0, 1):
            raise ValueError("pass bit must be 0 or 1")
        return make_key(self.rid, (*sorted(piles), p))

    def position(self, piles, pass_available: bool = True) -> PositionKey:
        return self.key(*piles, int(pass_available))

    def options(self, key: PositionKey) -> list[PositionKey]:
        *piles, p = key.payload
        out = set()
        for i, m in enumerate(piles):
            if i and piles[i - 1] == m:
                continue
            rest = piles[:i] + piles[i + 1:]
            for u in range(m):
                nxt = list(rest)
                insort(nxt, u)
                nxt.append(p)
                out.add(PositionKey("nim-pass", tuple(nxt)))
        if p and any(piles):
            out.add(PositionKey("nim-pass", (*piles, 0)))
        return list(out)

    def is_terminal(self, key: PositionKey) -> bool:
        return not any(key.payload[:-1])


NIM = Nim()
NIM2 = TwoPileNim()
NIM_PASS = NimPass()


class DigraphGame(Ruleset):
    """Finite game given by an explicit acyclic option list per node; payload ``(node,)``."""

    def __init__(self, name: str, adjacency: dict[int, list[int]] | list[list[int]]) -> None:
        adj = dict(enumerate(adjacency)) if isinstance(adjacency, list) else dict(adjacency)
        self.adjacency = {int(k): tuple(sorted(set(v))) for k, v in adj.items()}
        for k, v in self.adjacency.items():
            missing = [o for o in v if o not in self.adjacency]
            if missing:
                raise ValueError(f"node {k} has unknown options {missing}")
        digest = hashlib.sha1(repr(sorted(self.adjacency.items())).encode()).hexdigest()[:10]
        self.rid = f"digraph:{name}:{digest}"

    def options(self, key: PositionKey) -> list[PositionKey]:
        rid = self.rid
        return [PositionKey(rid, (o,)) for o in self.adjacency[key.payload[0]]]


def random_dag(rng, name: str, nodes: int, edge_prob: float = 0.4) -> DigraphGame:
    """Random DAG where node i may move to any j < i; node 0 is terminal."""
    adj = [[j for j in range(i) if rng.random() < edge_prob] for i in range(nodes)]
    for i in range(1, nodes):
        if not adj[i]:
            adj[i] = [rng.randrange(i)]
    return DigraphGame(name, adj)
