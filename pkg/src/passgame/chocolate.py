"""Chocolate bar games CB(F, x, y, z) and CB2(h, y, z), shape functions, NS checks.

Payload layouts: ``cb[<F>]`` is ``(x, y, z)``; ``cb2[<h>]`` is ``(y, z)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, NamedTuple

from .core import PositionKey, Ruleset, SGCache, make_key, sg

MONOTONE_CHECK_DOMAIN = 1024


class InvalidPosition(ValueError):
    pass


class UnsupportedValue(ValueError):
    pass


def log_step(z: int) -> int:
    return (1 << (z.bit_length() - 1)) - 1 if z > 0 else 0


@dataclass(frozen=True)
class HFunction:
    """Monotone single-variable shape function.

    ``floor-div:k`` is z // (2k), ``log-step`` is 2**floor(log2 z) - 1, and a
    finite table is clamped to its last value past the end.
    """

    kind: str
    k: int = 1
    table: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind == "floor-div":
            if self.k < 1:
                raise ValueError("floor-div needs k >= 1")
        elif self.kind == "table":
            if not self.table or min(self.table) < 0:
                raise ValueError("table must be a nonempty list of nonnegative values")
            object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        elif self.kind != "log-step":
            raise ValueError(f"unknown h kind {self.kind!r}")
        top = len(self.table) if self.kind == "table" else MONOTONE_CHECK_DOMAIN
        for z in range(top):
            if self(z) > self(z + 1):
                raise ValueError(f"{self.spec} is not monotone at z={z}")

    def __call__(self, z: int) -> int:
        if self.kind == "floor-div":
            return z // (2 * self.k)
        if self.kind == "log-step":
            return log_step(z)
        t = self.table
        return t[z] if z < len(t) else t[-1]

    @property
    def spec(self) -> str:
        if self.kind == "floor-div":
            return f"floor-div:{self.k}"
        if self.kind == "log-step":
            return "log-step"
        return "table:" + ",".join(map(str, self.table))

    @property
    def domain(self) -> int | None:
        """Largest argument where the function is defined by data, None if unbounded."""
        return len(self.table) - 1 if self.kind == "table" else None

    def surjectivity_note(self) -> str | None:
        # surjectivity is reported, not enforced: log-step itself skips values
        if self.kind != "table":
            return None
        missing = sorted(set(range(max(self.table) + 1)) - set(self.table))
        return f"table skips values {missing}" if missing else None

    @classmethod
    def parse(cls, text: str) -> "HFunction":
        if text == "log-step":
            return cls("log-step")
        name, _, arg = text.partition(":")
        if name == "floor-div":
            return cls("floor-div", k=int(arg))
        if name == "table":
            path = Path(arg)
            raw = path.read_text() if path.exists() else arg
            return cls("table", table=tuple(int(v) for v in raw.replace("\n", ",").split(",") if v.strip()))
        raise ValueError(f"bad h selector {text!r}; use floor-div:<k>, log-step or table:<path>")


def floor_div(k: int) -> HFunction:
    return HFunction("floor-div", k=k)


LOG_STEP = HFunction("log-step")
BUILTIN_NS_H = (floor_div(1), floor_div(2), LOG_STEP)


@dataclass(frozen=True)
class FFunction:
    """Monotone two-variable shape function F(x, z)."""

    kind: str
    h: HFunction | None = None
    table: tuple[tuple[int, ...], ...] = ()
    _fn: Callable[[int, int], int] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        fns = {
            "f1": lambda x, z: (x + z) // 3,
            "f2": lambda x, z: z // 2,
        }
        if self.kind == "from-h":
            if self.h is None:
                raise ValueError("from-h needs an HFunction")
            h = self.h
            fn = lambda x, z: h(z)  # noqa: E731
        elif self.kind == "table":
            rows = tuple(tuple(int(v) for v in r) for r in self.table)
            if not rows or len({len(r) for r in rows}) != 1:
                raise ValueError("table must be a rectangular matrix")
            object.__setattr__(self, "table", rows)
            nx, nz = len(rows) - 1, len(rows[0]) - 1
            fn = lambda x, z: rows[min(x, nx)][min(z, nz)]  # noqa: E731
        elif self.kind in fns:
            fn = fns[self.kind]
        else:
            raise ValueError(f"unknown F kind {self.kind!r}")
        object.__setattr__(self, "_fn", fn)
        n = 64
        for x in range(n):
            for z in range(n):
                v = fn(x, z)
                if v < 0 or v > fn(x + 1, z) or v > fn(x, z + 1):
                    raise ValueError(f"{self.spec} is not monotone at ({x}, {z})")

    def __call__(self, x: int, z: int) -> int:
        return self._fn(x, z)

    @property
    def spec(self) -> str:
        if self.kind == "from-h":
            return f"from-h:{self.h.spec}"
        if self.kind == "table":
            return "table:" + ";".join(",".join(map(str, r)) for r in self.table)
        return self.kind


def from_h(h: HFunction) -> FFunction:
    return FFunction("from-h", h=h)


F1 = FFunction("f1")
F2 = FFunction("f2")


class Choco3Position(NamedTuple):
    x: int
    y: int
    z: int


class Choco2Position(NamedTuple):
    y: int
    z: int


def choco3_position(F: FFunction, x: int, y: int, z: int) -> Choco3Position:
    if min(x, y, z) < 0:
        raise InvalidPosition("coordinates must be nonnegative")
    if y > F(x, z):
        raise InvalidPosition(f"y <= F(x, z) violated: y={y} > F({x}, {z})={F(x, z)}")
    return Choco3Position(x, y, z)


def choco2_position(h: HFunction, y: int, z: int) -> Choco2Position:
    if min(y, z) < 0:
        raise InvalidPosition("coordinates must be nonnegative")
    if y > h(z):
        raise InvalidPosition(f"y <= h(z) violated: y={y} > h({z})={h(z)}")
    return Choco2Position(y, z)


def move_f(F: FFunction, p: Choco3Position) -> set[Choco3Position]:
    x, y, z = p
    out = {Choco3Position(u, min(F(u, z), y), z) for u in range(x)}
    out.update(Choco3Position(x, v, z) for v in range(y))
    out.update(Choco3Position(x, min(y, F(x, w)), w) for w in range(z))
    return out


def move_2d(h: HFunction, p: Choco2Position) -> set[Choco2Position]:
    y, z = p
    out = {Choco2Position(v, z) for v in range(y)}
    out.update(Choco2Position(min(y, h(w)), w) for w in range(z))
    return out


class Choco3(Ruleset):
    def __init__(self, F: FFunction) -> None:
        self.F = F
        self.rid = f"cb[{F.spec}]"

    def position(self, x: int, y: int, z: int) -> PositionKey:
        return make_key(self.rid, choco3_position(self.F, x, y, z))

    key = position

    def options(self, key: PositionKey) -> list[PositionKey]:
        rid = self.rid
        return [PositionKey(rid, tuple(q)) for q in move_f(self.F, Choco3Position(*key.payload))]

    def is_terminal(self, key: PositionKey) -> bool:
        return key.payload == (0, 0, 0)


class Choco2(Ruleset):
    def __init__(self, h: HFunction) -> None:
        self.h = h
        self.rid = f"cb2[{h.spec}]"

    def position(self, y: int, z: int) -> PositionKey:
        return make_key(self.rid, choco2_position(self.h, y, z))

    key = position

    def options(self, key: PositionKey) -> list[PositionKey]:
        y, z = key.payload
        h = self.h
        out = {(v, z) for v in range(y)}
        out.update((min(y, h(w)), w) for w in range(z))
        rid = self.rid
        return [PositionKey(rid, t) for t in out]

    def is_terminal(self, key: PositionKey) -> bool:
        return key.payload == (0, 0)


def choco3_sg(F: FFunction, p, cache: SGCache | None = None) -> int:
    r = Choco3(F)
    return sg(r, r.position(*p), cache)


def choco2_sg(h: HFunction, p, cache: SGCache | None = None) -> int:
    r = Choco2(h)
    return sg(r, r.position(*p), cache)


def cb2_table(h: HFunction, z_max: int = 15, cache: SGCache | None = None) -> list[list[int | None]]:
    """Rows indexed by y, columns by z; ``None`` where y > h(z)."""
    cache = SGCache() if cache is None else cache
    r = Choco2(h)
    rows = max(h(z) for z in range(z_max + 1)) + 1
    return [
        [sg(r, r.position(y, z), cache) if y <= h(z) else None for z in range(z_max + 1)]
        for y in range(rows)
    ]


# -- NS property --------------------------------------------------------------


@dataclass
class NSResult:
    passed: bool
    verified_to: int
    clause: str | None = None
    witness: tuple | None = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"pass (verified on [0, {self.verified_to}])"
        return f"fail: {self.clause} clause, witness {self.witness}"


def _floor_clause(fn: Callable[[int], int], n_max: int, i_max: int) -> tuple[int, int, int] | None:
    # z, z' agreeing above bit i must agree on fn(.) above bit i-1
    for i in range(1, i_max + 1):
        first: dict[int, tuple[int, int]] = {}
        for z in range(n_max + 1):
            hi = fn(z) >> (i - 1)
            seen = first.setdefault(z >> i, (z, hi))
            if seen[1] != hi:
                return (seen[0], z, i)
    return None


def ns_check_h(h: HFunction, z_max: int = 512, i_max: int = 10) -> NSResult:
    """Bounded NS check. A pass only covers z, z' <= verified_to."""
    if z_max < 1 or i_max < 1:
        raise ValueError("z_max and i_max must be positive")
    top = z_max if h.domain is None else min(z_max, h.domain)
    notes = [n for n in [h.surjectivity_note()] if n]
    if h(0) != 0:
        return NSResult(False, top, "h(0)=0", (0, 0, 0), notes)
    w = _floor_clause(h, top, i_max)
    if w is not None:
        return NSResult(False, top, "floor", w, notes)
    return NSResult(True, top, notes=notes)


def ns_check_f(F: FFunction, x_max: int = 64, z_max: int = 64, i_max: int = 10) -> NSResult:
    """Floor clause on every slice g_n(z)=F(n,z), h_m(x)=F(x,m); zero clause at F(0,0).

    Slices of F(x,z)=h(z) taken along x are constant h(m), so requiring each
    slice to vanish at 0 would reject every such F. Literal per-slice zero
    violations are listed in ``notes`` instead.
    """
    if min(x_max, z_max, i_max) < 1:
        raise ValueError("bounds must be positive")
    notes = []
    for n in range(x_max + 1):
        if F(n, 0) != 0:
            notes.append(f"g_{n}(0) = {F(n, 0)}")
    for m in range(z_max + 1):
        if F(0, m) != 0:
            notes.append(f"h_{m}(0) = {F(0, m)}")
    top = min(x_max, z_max)
    if F(0, 0) != 0:
        return NSResult(False, top, "F(0,0)=0", ("g", 0, 0, 0, 0), notes)
    for n in range(x_max + 1):
        w = _floor_clause(lambda z: F(n, z), z_max, i_max)
        if w is not None:
            return NSResult(False, top, "floor", ("g", n, *w), notes)
    for m in range(z_max + 1):
        w = _floor_clause(lambda x: F(x, m), x_max, i_max)
        if w is not None:
            return NSResult(False, top, "floor", ("h", m, *w), notes)
    return NSResult(True, top, notes=notes)


def check_ns_witness(fn: Callable[[int], int], witness: tuple[int, int, int]) -> bool:
    """True if (z, z', i) really breaks the floor clause for ``fn``."""
    z, z2, i = witness
    return (z >> i) == (z2 >> i) and (fn(z) >> (i - 1)) != (fn(z2) >> (i - 1))


# -- bounds and small values for CB2 ------------------------------------------


def h_bound(h: HFunction, z: int) -> bool:
    if z < 1:
        raise ValueError("z must be positive")
    return h(z) <= (1 << (z.bit_length() - 1)) - 1


def lemma16_check(h: HFunction, z: int) -> bool:
    if z < 16:
        raise ValueError("z must be at least 16")
    return all(y ^ z >= 16 for y in range(h(z) + 1))


SMALL_SG_PAIRS: dict[int, frozenset[tuple[int, int]]] = {
    0: frozenset({(0, 0)}),
    1: frozenset({(0, 1)}),
    2: frozenset({(0, 2), (1, 3)}),
    3: frozenset({(0, 3), (1, 2)}),
    4: frozenset({(0, 4), (1, 5), (2, 6), (3, 7)}),
    5: frozenset({(0, 5), (1, 4), (2, 7), (3, 6)}),
    6: frozenset({(0, 6), (1, 7), (2, 4), (3, 5)}),
    7: frozenset({(0, 7), (1, 6), (2, 5), (3, 4)}),
    8: frozenset({(0, 8), (1, 9), (2, 10), (3, 11), (4, 12), (5, 13), (6, 14), (7, 15)}),
}


def small_sg_classify(v: int) -> frozenset[tuple[int, int]]:
    """Pairs (y, z) whose CB2 value is v, for v <= 8; callers intersect with y <= h(z)."""
    if v not in SMALL_SG_PAIRS:
        raise UnsupportedValue(f"only values 0..8 are classified, got {v}")
    return SMALL_SG_PAIRS[v]
