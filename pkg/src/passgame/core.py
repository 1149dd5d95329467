"""Generic impartial-game engine: position keys, rulesets, memoized SG values."""
from __future__ import annotations

import os
from typing import Callable, Iterable, NamedTuple

MAX_COORD = 2**32 - 1
DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "PASSGAME_BUDGET"


class BudgetExceeded(RuntimeError):
    """Raised when a traversal visits more positions than its budget allows."""


class CyclicRuleset(RuntimeError):
    """Raised when the option relation reaches a position that is still being expanded."""


class PositionKey(NamedTuple):
    ruleset_id: str
    payload: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.ruleset_id}{self.payload}"


def make_key(ruleset_id: str, payload: Iterable[int]) -> PositionKey:
    """Build a validated key. Option generators skip this since they only shrink coordinates."""
    coords = tuple(int(v) for v in payload)
    for v in coords:
        if v < 0 or v > MAX_COORD:
            raise ValueError(f"coordinate {v} outside [0, 2^32)")
    return PositionKey(ruleset_id, coords)


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class Ruleset:
    """A move generator. Subclasses set ``rid`` and implement ``options``.

    Rulesets compare equal when their ids match, so the id must determine
    the move rule completely (including any shape-function parameters).
    """

    rid: str = "abstract"

    def options(self, key: PositionKey) -> list[PositionKey]:
        raise NotImplementedError

    def is_terminal(self, key: PositionKey) -> bool:
        return not self.options(key)

    def key(self, *coords: int) -> PositionKey:
        return make_key(self.rid, coords)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ruleset) and other.rid == self.rid

    def __hash__(self) -> int:
        return hash(self.rid)

    def __repr__(self) -> str:
        return f"<Ruleset {self.rid}>"


class SGCache:
    """Insert-only map from position keys to values.

    ``setdefault`` is atomic under the GIL, so one cache may be shared between
    threads; a duplicate insert with a different value is an internal error.
    """

    def __init__(self) -> None:
        self.values: dict[PositionKey, int] = {}

    def insert(self, key: PositionKey, value: int) -> None:
        prev = self.values.setdefault(key, value)
        if prev != value:
            raise AssertionError(f"cache conflict at {key}: {prev} != {value}")

    def get(self, key: PositionKey) -> int | None:
        return self.values.get(key)

    def __contains__(self, key: object) -> bool:
        return key in self.values

    def __len__(self) -> int:
        return len(self.values)


def mex(values: Iterable[int]) -> int:
    vals = list(values)
    present = [False] * (len(vals) + 1)
    for v in vals:
        if v <= len(vals):
            present[v] = True
    return present.index(False)


def _evaluate(
    ruleset: Ruleset,
    key: PositionKey,
    store: dict[PositionKey, int],
    combine: Callable[[list[int]], int],
    budget: int | None,
) -> int:
    # Iterative post-order walk; a node is finished once all its options are in `store`.
    if key in store:
        return store[key]
    limit = default_budget() if budget is None else budget
    pending: dict[PositionKey, list[PositionKey]] = {}
    stack = [key]
    expanded = 0
    while stack:
        k = stack[-1]
        if k in store:
            stack.pop()
            continue
        opts = pending.get(k)
        if opts is None:
            opts = ruleset.options(k)
            pending[k] = opts
            expanded += 1
            if expanded > limit:
                raise BudgetExceeded(f"more than {limit} positions expanded below {key}")
            todo = []
            for o in opts:
                if o in store:
                    continue
                if o in pending:
                    raise CyclicRuleset(f"{o} reachable from itself")
                todo.append(o)
            if todo:
                stack.extend(todo)
                continue
        stack.pop()
        del pending[k]
        value = combine([store[o] for o in opts])
        prev = store.setdefault(k, value)
        if prev != value:
            raise AssertionError(f"cache conflict at {k}: {prev} != {value}")
    return store[key]


def sg(ruleset: Ruleset, key: PositionKey, cache: SGCache | None = None, budget: int | None = None) -> int:
    """SG value of ``key``: mex over option values, 0 at terminal positions."""
    store = SGCache().values if cache is None else cache.values
    return _evaluate(ruleset, key, store, mex, budget)


def outcome(ruleset: Ruleset, key: PositionKey, cache: SGCache | None = None) -> str:
    return "P" if sg(ruleset, key, cache) == 0 else "N"


def _wins(option_results: list[int]) -> int:
    # next player wins iff some option is a loss for the player moving there
    return int(any(r == 0 for r in option_results))


def outcome_minimax(ruleset: Ruleset, key: PositionKey, memo: dict | None = None) -> str:
    """Win/lose classification without SG values."""
    store = {} if memo is None else memo
    return "N" if _evaluate(ruleset, key, store, _wins, None) else "P"


def followers(ruleset: Ruleset, key: PositionKey, n: int, budget: int | None = None) -> set[PositionKey]:
    """move^n(key): positions reachable in exactly ``n`` moves."""
    limit = default_budget() if budget is None else budget
    layer = {key}
    seen = 1
    for _ in range(n):
        nxt: set[PositionKey] = set()
        for k in layer:
            nxt.update(ruleset.options(k))
        seen += len(nxt)
        if seen > limit:
            raise BudgetExceeded(f"follower layers exceed {limit} positions")
        layer = nxt
    return layer


def all_followers(ruleset: Ruleset, key: PositionKey, budget: int | None = None) -> list[PositionKey]:
    """Every follower of ``key`` (including itself), breadth-first, each once."""
    limit = default_budget() if budget is None else budget
    seen = {key}
    order = [key]
    i = 0
    while i < len(order):
        for o in ruleset.options(order[i]):
            if o not in seen:
                seen.add(o)
                order.append(o)
                if len(order) > limit:
                    raise BudgetExceeded(f"follower set of {key} exceeds {limit} positions")
        i += 1
    return order


def topological_followers(ruleset: Ruleset, key: PositionKey, budget: int | None = None) -> list[PositionKey]:
    """Followers of ``key`` ordered so that every option precedes its parent."""
    finished: dict[PositionKey, int] = {}
    _evaluate(ruleset, key, finished, len, budget)
    # post-order finishing order is a topological order
    return list(finished)
