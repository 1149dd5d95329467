"""Brute-force SG of compounds over the explicit product of component game graphs.

Each component's follower DAG is enumerated once (options before parents),
then a compiled loop walks every compound state in index order. This is the
same recursion as the generic engine, just without hashing compound keys, so
it can exhaust compounds with millions of states.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numba
import numpy as np

from .core import BudgetExceeded, PositionKey, Ruleset, default_budget, topological_followers


@dataclass(frozen=True)
class GameGraph:
    positions: tuple[PositionKey, ...]
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def size(self) -> int:
        return len(self.positions)

    @property
    def root(self) -> int:
        return len(self.positions) - 1


_graphs: dict[PositionKey, GameGraph] = {}


def game_graph(r: Ruleset, key: PositionKey) -> GameGraph:
    g = _graphs.get(key)
    if g is not None:
        return g
    order = topological_followers(r, key)
    index = {k: i for i, k in enumerate(order)}
    indptr = np.zeros(len(order) + 1, dtype=np.int64)
    flat: list[int] = []
    for i, k in enumerate(order):
        flat.extend(index[o] for o in r.options(k))
        indptr[i + 1] = len(flat)
    g = GameGraph(tuple(order), indptr, np.asarray(flat, dtype=np.int64))
    _graphs[key] = g
    return g


@numba.njit(cache=True)
def _product_sg(indptr, indices, ptr_start, strides, sizes, total, max_opts):
    n = sizes.shape[0]
    sg0 = np.zeros(total, dtype=np.int32)
    sg1 = np.zeros(total, dtype=np.int32)
    coords = np.zeros(n, dtype=np.int64)
    seen0 = np.zeros(max_opts + 2, dtype=np.int64)
    seen1 = np.zeros(max_opts + 2, dtype=np.int64)
    cap = max_opts + 2
    for s in range(total):
        tag = s + 1
        count = 0
        for i in range(n):
            c = coords[i]
            p = ptr_start[i] + c
            for t in range(indptr[p], indptr[p + 1]):
                s2 = s + (indices[t] - c) * strides[i]
                v0 = sg0[s2]
                if v0 < cap:
                    seen0[v0] = tag
                v1 = sg1[s2]
                if v1 < cap:
                    seen1[v1] = tag
                count += 1
        m = 0
        while seen0[m] == tag:
            m += 1
        sg0[s] = m
        if count > 0:
            seen1[m] = tag
        m = 0
        while seen1[m] == tag:
            m += 1
        sg1[s] = m
        i = 0
        while i < n:
            coords[i] += 1
            if coords[i] < sizes[i]:
                break
            coords[i] = 0
            i += 1
    return sg0, sg1


def product_tables(components: Sequence[tuple[Ruleset, PositionKey]], budget: int | None = None):
    """SG tables (without pass, with pass) over the whole product state space."""
    graphs = [game_graph(r, k) for r, k in components]
    sizes = np.array([g.size for g in graphs], dtype=np.int64)
    total = int(np.prod(sizes, dtype=object))
    limit = default_budget() if budget is None else budget
    if total > limit:
        raise BudgetExceeded(f"product space has {total} states, budget {limit}")
    strides = np.ones(len(graphs), dtype=np.int64)
    for i in range(1, len(graphs)):
        strides[i] = strides[i - 1] * sizes[i - 1]
    ptr_parts, idx_parts, ptr_start = [], [], []
    offset = pstart = 0
    for g in graphs:
        ptr_start.append(pstart)
        ptr_parts.append(g.indptr + offset)
        idx_parts.append(g.indices)
        offset += len(g.indices)
        pstart += len(g.indptr)
    max_opts = sum(int(np.max(np.diff(g.indptr), initial=0)) for g in graphs)
    sg0, sg1 = _product_sg(
        np.concatenate(ptr_parts),
        np.concatenate(idx_parts) if offset else np.zeros(0, dtype=np.int64),
        np.array(ptr_start, dtype=np.int64),
        strides,
        sizes,
        total,
        max_opts,
    )
    root = int(np.dot(sizes - 1, strides))
    return sg0, sg1, root


def product_sg(components: Sequence[tuple[Ruleset, PositionKey]], pass_available: bool, budget: int | None = None) -> int:
    sg0, sg1, root = product_tables(components, budget)
    return int((sg1 if pass_available else sg0)[root])
