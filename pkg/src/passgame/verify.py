"""Verification sweeps, one per checked statement.

Every suite returns a ``VerificationReport``; an empty mismatch list means the
statement held on every case inside the configured bounds.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import published
from .chocolate import (
    BUILTIN_NS_H,
    F1,
    F2,
    Choco2,
    Choco3,
    HFunction,
    cb2_table,
    floor_div,
    from_h,
    h_bound,
    lemma16_check,
    ns_check_f,
    ns_check_h,
    small_sg_classify,
)
from .classify import is_one_move, is_sg_decreasing
from .compound import (
    CompoundState,
    Hypergraph,
    disjunctive_sg_fast,
    disjunctive_sg_oracle,
    homomorphism_counterexample,
    hypergraph_sg_fast,
    hypergraph_sg_oracle,
    one_pass_sg_fast,
    one_pass_sg_oracle,
)
from .core import SGCache, outcome_minimax, sg
from .games import NIM, NIM2, NIM_PASS, random_dag
from .nimpass import gp_is_one, gp_is_two, gp_is_zero, gp_table
from .product import product_sg
from .stair import Stair, in_A, in_B, in_C


# largest random compounds have about 1e7 product states
TRIAL_BUDGET = 50_000_000


@dataclass
class Bounds:
    max: int = 200
    zmax: int = 512
    bound: int = 20
    trials: int = 1000
    seed: int = 42
    h: HFunction = field(default_factory=lambda: floor_div(1))


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    mismatches: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    expect_failure: bool = False
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        if self.expect_failure:
            return bool(self.mismatches)
        return not self.mismatches

    def check(self, inp, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            self.mismatches.append({"suite": self.suite, "input": inp, "expected": expected, "actual": actual})

    def sort(self) -> None:
        self.mismatches.sort(key=lambda m: repr(m["input"]))


def _fmt(keys) -> str:
    return " + ".join(map(str, keys))


# -- suites ---------------------------------------------------------------------


def _thm1(rep: VerificationReport, b: Bounds) -> None:
    cache, memo = SGCache(), {}
    samples = [(NIM, NIM.key(m)) for m in range(31)]
    samples += [(NIM2, NIM2.key(a, c)) for a in range(9) for c in range(9)]
    samples += [(NIM_PASS, NIM_PASS.key(a, c, p)) for a in range(9) for c in range(9) for p in (0, 1)]
    for h in BUILTIN_NS_H:
        cb = Choco2(h)
        samples += [(cb, cb.key(y, z)) for z in range(33) for y in range(h(z) + 1)]
        st = Stair(h)
        samples += [(st, st.key(x, y, z, p)) for x in range(9) for z in range(9) for y in range(h(z) + 1) for p in (0, 1)]
    for F in (F1, F2):
        r = Choco3(F)
        samples += [(r, r.key(x, y, z)) for x in range(7) for z in range(7) for y in range(F(x, z) + 1)]
    for r, k in samples:
        rep.check(str(k), outcome_minimax(r, k, memo), "P" if sg(r, k, cache) == 0 else "N")


def _small_components(h: HFunction, max_value: int):
    cb = Choco2(h)
    pool = [(NIM, NIM.key(m)) for m in range(max_value + 1)]
    pool += [(cb, cb.key(y, z)) for z in range(16) for y in range(h(z) + 1) if y ^ z <= max_value]
    pool += [(NIM2, NIM2.key(a, c)) for a in range(4) for c in range(4)]
    return pool


def _thm3(rep: VerificationReport, b: Bounds) -> None:
    cache = SGCache()
    pool = _small_components(b.h, 8)
    for c1, c2 in itertools.product(pool, repeat=2):
        c = CompoundState((c1, c2))
        rep.check(_fmt(c.keys), disjunctive_sg_oracle(c, cache), disjunctive_sg_fast(c, cache))
    # triples on the explicit product graph
    small = [p for p in pool if sg(*p, cache) <= 4][::2]
    for trio in itertools.combinations_with_replacement(small, 3):
        c = CompoundState(trio)
        rep.check(_fmt(c.keys), product_sg(trio, False), disjunctive_sg_fast(c, cache))


def _thm4(rep: VerificationReport, b: Bounds) -> None:
    rng = random.Random(b.seed)
    cache = SGCache()
    decreasing = []
    while len(decreasing) < 40:
        g = random_dag(rng, f"d{len(decreasing)}-{rng.random():.6f}", rng.randint(2, 9), 0.5)
        k = g.key(max(g.adjacency))
        if is_sg_decreasing(g, k, cache).verdict:
            decreasing.append((g, k))
    decreasing += [(NIM, NIM.key(m)) for m in range(5)]
    graphs = [Hypergraph.of(2, *e) for e in ([{0}, {1}], [{0, 1}], [{0}, {1}, {0, 1}], [{0}, {0, 1}])]
    graphs += [Hypergraph.of(3, *e) for e in ([{0, 1}, {1, 2}], [{0, 1, 2}], [{0}, {1}, {2}, {0, 1, 2}], [{0, 2}, {1}])]
    for hg in graphs:
        for _ in range(max(1, b.trials // 20)):
            comps = [rng.choice(decreasing) for _ in range(hg.n)]
            inp = f"[{hg.tag}] {_fmt(k for _, k in comps)}"
            rep.check(inp, hypergraph_sg_oracle(hg, comps, cache), hypergraph_sg_fast(hg, comps, cache, certify=True))


def _thm5(rep: VerificationReport, b: Bounds) -> None:
    n = min(b.bound, 16)
    for F in (from_h(floor_div(1)), from_h(floor_div(2)), from_h(BUILTIN_NS_H[2]), F2):
        ns = ns_check_f(F)
        rep.check(f"ns {F.spec}", True, ns.passed)
        r, cache = Choco3(F), SGCache()
        for x, z in itertools.product(range(n + 1), repeat=2):
            for y in range(min(F(x, z), n) + 1):
                rep.check(f"{F.spec} {(x, y, z)}", x ^ y ^ z, sg(r, r.key(x, y, z), cache))
    ns = ns_check_f(F1)
    rep.check("ns f1 fails", False, ns.passed)
    witness = find_f_counterexample(F1, n)
    rep.info["f1_witness"] = witness
    rep.check("f1 witness found", True, witness is not None)


def find_f_counterexample(F, n: int):
    """First valid (x, y, z, sg) with sg != x^y^z, or None."""
    r, cache = Choco3(F), SGCache()
    for x, z in itertools.product(range(n + 1), repeat=2):
        for y in range(min(F(x, z), n) + 1):
            v = sg(r, r.key(x, y, z), cache)
            if v != x ^ y ^ z:
                return (x, y, z, v)
    return None


def trial_pool(h: HFunction):
    cb = Choco2(h)
    return [(NIM, NIM.key(m)) for m in range(16)] + [(cb, cb.key(y, z)) for z in range(16) for y in range(h(z) + 1)]


def _thm6(rep: VerificationReport, b: Bounds) -> None:
    cache = SGCache()
    rng = random.Random(b.seed)
    pool = trial_pool(b.h)
    for r, k in pool:
        rep.check(f"one-move {k}", True, is_one_move(r, k, cache).verdict)
    for _ in range(b.trials):
        comps = tuple(rng.choice(pool) for _ in range(rng.randint(2, 4)))
        c = CompoundState(comps, True)
        oracle = product_sg(comps, True, budget=TRIAL_BUDGET)
        rep.check(_fmt(c.keys), oracle, one_pass_sg_fast(c, cache))
    cb = Choco2(b.h)
    for m in range(13):
        for z in range(16):
            for y in range(b.h(z) + 1):
                c = CompoundState(((NIM, NIM.key(m)), (cb, cb.key(y, z))), True)
                rep.check(_fmt(c.keys), one_pass_sg_oracle(c, cache), one_pass_sg_fast(c, cache))
    # random one-move digraph components
    games = []
    while len(games) < 30:
        g = random_dag(rng, f"m{len(games)}-{rng.random():.6f}", rng.randint(2, 8), 0.5)
        k = g.key(max(g.adjacency))
        if is_one_move(g, k, cache).verdict:
            games.append((g, k))
    for _ in range(max(1, b.trials // 5)):
        comps = tuple(rng.choice(games) for _ in range(rng.randint(1, 3)))
        c = CompoundState(comps, True)
        rep.check(_fmt(c.keys), one_pass_sg_oracle(c, cache), one_pass_sg_fast(c, cache, certify=True))


def _lemma1(rep: VerificationReport, b: Bounds) -> None:
    for h in BUILTIN_NS_H:
        rep.check(f"ns {h.spec}", True, ns_check_h(h, b.zmax).passed)
        for z in range(1, b.zmax + 1):
            rep.check(f"{h.spec} z={z}", True, h_bound(h, z))


def _lemma2(rep: VerificationReport, b: Bounds) -> None:
    for h in BUILTIN_NS_H:
        for z in range(16, b.zmax + 1):
            rep.check(f"{h.spec} z={z}", True, lemma16_check(h, z))


def _lemma4(rep: VerificationReport, b: Bounds) -> None:
    zmax = min(b.zmax, 64)
    for h in BUILTIN_NS_H:
        cb, cache = Choco2(h), SGCache()
        by_value: dict[int, set] = {v: set() for v in range(9)}
        for z in range(zmax + 1):
            for y in range(h(z) + 1):
                v = sg(cb, cb.key(y, z), cache)
                if v <= 8:
                    by_value[v].add((y, z))
        for v in range(9):
            expected = {(y, z) for y, z in small_sg_classify(v) if y <= h(z)}
            rep.check(f"{h.spec} v={v}", sorted(expected), sorted(by_value[v]))


def _lemma5(rep: VerificationReport, b: Bounds) -> None:
    table = gp_table(b.max)
    for x in range(b.max + 1):
        for y in range(b.max + 1):
            v = table[x][y]
            rep.check(("zero", x, y), v == 0, gp_is_zero(x, y))
            rep.check(("one", x, y), v == 1, gp_is_one(x, y))
            rep.check(("two", x, y), v == 2, gp_is_two(x, y))


def _cor1(rep: VerificationReport, b: Bounds) -> None:
    zmax = min(b.zmax, 64)
    for h in BUILTIN_NS_H:
        cb, cache = Choco2(h), SGCache()
        for z in range(zmax + 1):
            for y in range(h(z) + 1):
                rep.check(f"{h.spec} {(y, z)}", y ^ z, sg(cb, cb.key(y, z), cache))


def _stair_suite(pred: Callable, value: int):
    def run(rep: VerificationReport, b: Bounds) -> None:
        for h in BUILTIN_NS_H:
            st, cache = Stair(h), SGCache()
            for x in range(b.bound + 1):
                for z in range(b.bound + 1):
                    for y in range(h(z) + 1):
                        for p in (0, 1):
                            s = (x, y, z, p)
                            rep.check(f"{h.spec} {s}", sg(st, st.key(*s), cache) == value, pred(h, s))
    return run


def _table2(rep: VerificationReport, b: Bounds) -> None:
    got = cb2_table(b.h, 15)
    for y, row in enumerate(published.CB2_TABLE_15):
        for z, want in enumerate(row):
            if want is not None and y < len(got) and got[y][z] is not None:
                rep.check((y, z), want, got[y][z])


def _table3(rep: VerificationReport, b: Bounds) -> None:
    got = gp_table(12)
    for x, row in enumerate(published.GP_TABLE_12):
        for y, want in enumerate(row):
            rep.check((x, y), want, got[x][y])


def _counterexample(rep: VerificationReport, b: Bounds) -> None:
    rep.expect_failure = True
    for extra in range(3):
        c = homomorphism_counterexample(extra)
        rep.check(_fmt(c.keys), one_pass_sg_fast(c), one_pass_sg_oracle(c))


SUITES: dict[str, Callable[[VerificationReport, Bounds], None]] = {
    "thm1": _thm1,
    "thm3": _thm3,
    "thm4": _thm4,
    "thm5": _thm5,
    "thm6": _thm6,
    "lemma1": _lemma1,
    "lemma2": _lemma2,
    "lemma4": _lemma4,
    "lemma5": _lemma5,
    "cor1": _cor1,
    "cor2": _stair_suite(in_A, 0),
    "cor3": _stair_suite(in_B, 1),
    "cor4": _stair_suite(in_C, 2),
    "counterexample": _counterexample,
    "table2": _table2,
    "table3": _table3,
}


def run_suite(name: str, bounds: Bounds | None = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(name)
    rep = VerificationReport(name)
    t0 = time.perf_counter()
    SUITES[name](rep, bounds or Bounds())
    rep.elapsed = time.perf_counter() - t0
    rep.sort()
    return rep
