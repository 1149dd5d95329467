"""Disjunctive, one-pass and hypergraph compounds, with oracle and fast-path SG values.

A compound of fixed component rulesets is itself a ``Ruleset``. Its payload is
the concatenation of ``(len(payload_i), *payload_i)`` for every component,
followed by the pass bit for one-pass compounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from operator import xor
from typing import Iterable, Sequence

from .core import PositionKey, Ruleset, SGCache, sg
from .games import NIM, NIM2, NIM_PASS

Component = tuple[Ruleset, PositionKey]


class PreconditionError(ValueError):
    """A fast path was asked to certify components that fail its hypothesis."""


@dataclass(frozen=True)
class CompoundState:
    components: tuple[Component, ...]
    pass_available: bool = False

    def __post_init__(self) -> None:
        comps = tuple((r, k) for r, k in self.components)
        if not comps:
            raise ValueError("a compound needs at least one component")
        for r, k in comps:
            if k.ruleset_id != r.rid:
                raise ValueError(f"key {k} does not belong to {r.rid}")
        object.__setattr__(self, "components", comps)

    @property
    def rulesets(self) -> tuple[Ruleset, ...]:
        return tuple(r for r, _ in self.components)

    @property
    def keys(self) -> tuple[PositionKey, ...]:
        return tuple(k for _, k in self.components)

    def with_keys(self, keys: Sequence[PositionKey], pass_available: bool | None = None) -> "CompoundState":
        p = self.pass_available if pass_available is None else pass_available
        return CompoundState(tuple(zip(self.rulesets, keys)), p)

    def all_terminal(self) -> bool:
        return all(r.is_terminal(k) for r, k in self.components)


def nim_state(piles: Iterable[int], pass_available: bool = False) -> CompoundState:
    return CompoundState(tuple((NIM, NIM.key(m)) for m in piles), pass_available)


def _single_moves(keys: Sequence[PositionKey], opts: Sequence[list[PositionKey]]):
    for i, oi in enumerate(opts):
        for o in oi:
            yield (*keys[:i], o, *keys[i + 1:])


def disjunctive_options(c: CompoundState) -> set[CompoundState]:
    opts = [r.options(k) for r, k in c.components]
    return {c.with_keys(ks, False) for ks in _single_moves(c.keys, opts)}


def one_pass_options(c: CompoundState) -> set[CompoundState]:
    opts = [r.options(k) for r, k in c.components]
    out = {c.with_keys(ks) for ks in _single_moves(c.keys, opts)}
    if c.pass_available and out:
        out.add(c.with_keys(c.keys, False))
    return out


class _CompoundRuleset(Ruleset):
    tag = "sum"
    has_pass = False

    def __init__(self, rulesets: Sequence[Ruleset]) -> None:
        self.parts = tuple(rulesets)
        self.rid = f"{self.tag}({','.join(r.rid for r in self.parts)})"
        self._opts: list[dict] = [{} for _ in self.parts]

    def encode(self, c: CompoundState) -> PositionKey:
        if c.rulesets != self.parts:
            raise ValueError("state rulesets differ from this compound's")
        return self._encode(c.keys, int(c.pass_available))

    def _encode(self, keys: Sequence[PositionKey], p: int) -> PositionKey:
        flat: list[int] = []
        for k in keys:
            flat.append(len(k.payload))
            flat.extend(k.payload)
        if self.has_pass:
            flat.append(p)
        return PositionKey(self.rid, tuple(flat))

    def _decode(self, key: PositionKey) -> tuple[list[PositionKey], int]:
        flat = key.payload
        keys, i = [], 0
        for r in self.parts:
            n = flat[i]
            keys.append(PositionKey(r.rid, flat[i + 1:i + 1 + n]))
            i += n + 1
        return keys, (flat[i] if self.has_pass else 0)

    def decode(self, key: PositionKey) -> CompoundState:
        keys, p = self._decode(key)
        return CompoundState(tuple(zip(self.parts, keys)), bool(p))

    def _component_options(self, keys: Sequence[PositionKey]) -> list[list[PositionKey]]:
        out = []
        for r, memo, k in zip(self.parts, self._opts, keys):
            o = memo.get(k)
            if o is None:
                o = memo[k] = r.options(k)
            out.append(o)
        return out


class DisjunctiveRuleset(_CompoundRuleset):
    tag = "sum"

    def options(self, key: PositionKey) -> list[PositionKey]:
        keys, _ = self._decode(key)
        return [self._encode(ks, 0) for ks in _single_moves(keys, self._component_options(keys))]


class OnePassRuleset(_CompoundRuleset):
    tag = "pass-sum"
    has_pass = True

    def options(self, key: PositionKey) -> list[PositionKey]:
        keys, p = self._decode(key)
        out = [self._encode(ks, p) for ks in _single_moves(keys, self._component_options(keys))]
        if p and out:
            out.append(self._encode(keys, 0))
        return out


def disjunctive_sg_oracle(c: CompoundState, cache: SGCache | None = None, budget: int | None = None) -> int:
    r = DisjunctiveRuleset(c.rulesets)
    return sg(r, r._encode(c.keys, 0), cache, budget)


def disjunctive_sg_fast(c: CompoundState, cache: SGCache | None = None) -> int:
    """XOR of component SG values."""
    if c.pass_available:
        raise PreconditionError("the XOR rule applies to compounds without a pass")
    return reduce(xor, (sg(r, k, cache) for r, k in c.components), 0)


def one_pass_sg_oracle(c: CompoundState, cache: SGCache | None = None, budget: int | None = None) -> int:
    r = OnePassRuleset(c.rulesets)
    return sg(r, r.encode(c), cache, budget)


def nim_pass_sg(piles: Sequence[int], cache: SGCache | None = None) -> int:
    """SG of nim with the given piles and the pass still available."""
    return sg(NIM_PASS, NIM_PASS.position(piles, True), cache)


def one_pass_sg_fast(c: CompoundState, cache: SGCache | None = None, certify: bool = False) -> int:
    """Component SG values, then nim-with-pass on piles of those sizes.

    Only valid for one-move components. With ``certify`` each component is
    checked first and a ``PreconditionError`` names the offender.
    """
    if certify:
        from .classify import is_one_move

        for r, k in c.components:
            cert = is_one_move(r, k, cache)
            if not cert.verdict:
                raise PreconditionError(f"{k} is not one-move (witness {cert.witness})")
    values = [sg(r, k, cache) for r, k in c.components]
    if not c.pass_available:
        return reduce(xor, values, 0)
    return nim_pass_sg(values, cache)


def homomorphism_counterexample(extra_terminal: int = 0) -> CompoundState:
    """One-pass compound whose nim image has the wrong SG value.

    The first component is two-pile nim at (1, 1): SG 0 but not terminal, so
    the pass reaches a zero-valued disjunctive compound. Extra terminal nim
    piles do not change that.
    """
    comps = [(NIM2, NIM2.key(1, 1))] + [(NIM, NIM.key(0))] * extra_terminal
    c = CompoundState(tuple(comps), True)
    oracle = one_pass_sg_oracle(c)
    fast = one_pass_sg_fast(c)
    assert oracle != fast, (oracle, fast)
    return c


# -- hypergraph compound ------------------------------------------------------


@dataclass(frozen=True)
class Hypergraph:
    """Vertices are component indices 0..n-1."""

    n: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        edges = frozenset(frozenset(e) for e in self.edges)
        for e in edges:
            if not e or not e <= set(range(self.n)):
                raise ValueError(f"edge {sorted(e)} must be a nonempty subset of 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def of(cls, n: int, *edges: Iterable[int]) -> "Hypergraph":
        return cls(n, frozenset(frozenset(e) for e in edges))

    @property
    def tag(self) -> str:
        return "|".join(",".join(map(str, sorted(e))) for e in sorted(self.edges, key=sorted))


def _edge_moves(edges, keys, opts):
    for e in sorted(edges, key=sorted):
        idx = sorted(e)
        if any(not opts[i] for i in idx):
            continue
        for choice in product(*(opts[i] for i in idx)):
            nxt = list(keys)
            for i, o in zip(idx, choice):
                nxt[i] = o
            yield tuple(nxt)


def hypergraph_options(h: Hypergraph, components: Sequence[Component]) -> set[tuple[Component, ...]]:
    """Pick an edge whose vertices all have moves; move in each of them at once."""
    if len(components) != h.n:
        raise ValueError("component count must match the hypergraph")
    rs = [r for r, _ in components]
    keys = [k for _, k in components]
    opts = [r.options(k) for r, k in components]
    return {tuple(zip(rs, ks)) for ks in _edge_moves(h.edges, keys, opts)}


class HypergraphRuleset(_CompoundRuleset):
    def __init__(self, h: Hypergraph, rulesets: Sequence[Ruleset]) -> None:
        if len(rulesets) != h.n:
            raise ValueError("component count must match the hypergraph")
        self.tag = f"hyper[{h.tag}]"
        self.hypergraph = h
        super().__init__(rulesets)

    def options(self, key: PositionKey) -> list[PositionKey]:
        keys, _ = self._decode(key)
        opts = self._component_options(keys)
        return list({self._encode(ks, 0) for ks in _edge_moves(self.hypergraph.edges, keys, opts)})


def hypergraph_sg_oracle(h: Hypergraph, components: Sequence[Component], cache: SGCache | None = None) -> int:
    r = HypergraphRuleset(h, [c[0] for c in components])
    return sg(r, r._encode([c[1] for c in components], 0), cache)


def hypergraph_sg_fast(
    h: Hypergraph, components: Sequence[Component], cache: SGCache | None = None, certify: bool = False
) -> int:
    """SG of the same hypergraph compound over nim piles of the component values."""
    if certify:
        from .classify import is_sg_decreasing

        for r, k in components:
            cert = is_sg_decreasing(r, k, cache)
            if not cert.verdict:
                raise PreconditionError(f"{k} is not SG-decreasing (witness {cert.witness})")
    piles = [(NIM, NIM.key(sg(r, k, cache))) for r, k in components]
    return hypergraph_sg_oracle(h, piles, cache)
