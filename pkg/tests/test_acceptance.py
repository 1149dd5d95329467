"""Acceptance criteria, one check per criterion.

Each check returns (passed, detail) and the test prints a single
``[criterion N] PASS|FAIL`` line. Run this file directly to get the lines
without pytest.
"""
from __future__ import annotations

import time
from pathlib import Path

import pytest

from passgame import published
from passgame.chocolate import BUILTIN_NS_H, F1, Choco2, cb2_table, floor_div, ns_check_f
from passgame.classify import is_one_move, is_sg_decreasing
from passgame.cli import main
from passgame.core import SGCache, sg
from passgame.games import NIM, NIM2
from passgame.nimpass import gp_is_one, gp_is_two, gp_is_zero, gp_table
from passgame.stair import Stair, in_A, in_B, in_C, stair_sg, stair_sg_fast
from passgame.verify import Bounds, run_suite

GOLDEN = Path(__file__).resolve().parent.parent / "golden"
GP_CACHE = SGCache()  # shared by criteria 3 and 9
PERF_POSITIONS = [(200, 0, 200, 1), (101, 1, 100, 1), (60, 3, 63, 1)]


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def criterion_1():
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code, dt = _timed(lambda: main(["table", "gp", "--max", "12"]))
    golden = (GOLDEN / "gp_table_12.csv").read_bytes() == buf.getvalue().encode()
    rows = [[int(v) for v in line.split(",")[1:]] for line in buf.getvalue().splitlines()[1:]]
    cells = sum(a == b for r, p in zip(rows, published.GP_TABLE_12) for a, b in zip(r, p))
    ok = code == 0 and golden and cells == 169 and dt < 1.0
    return ok, f"{cells}/169 cells equal published, golden byte-exact={golden}, {dt:.3f}s (< 1 s)"


def criterion_2():
    h = floor_div(1)
    t, dt = _timed(lambda: cb2_table(h, 15))
    bad, total = [], 0
    for y in range(len(t)):
        for z in range(16):
            if t[y][z] is None:
                continue
            total += 1
            want = published.CB2_TABLE_15[y][z]
            if want != t[y][z]:
                bad.append(f"(y={y},z={z}): published {want}, computed {t[y][z]}")
    ok = not bad and dt < 1.0
    return ok, f"{total - len(bad)}/{total} feasible cells equal, {dt:.3f}s (< 1 s); mismatches: {bad or 'none'}"


def criterion_3():
    n = 200
    t, dt = _timed(lambda: gp_table(n, GP_CACHE))
    miss = 0
    for x in range(n + 1):
        for y in range(n + 1):
            v = t[x][y]
            miss += (v == 0) != gp_is_zero(x, y)
            miss += (v == 1) != gp_is_one(x, y)
            miss += (v == 2) != gp_is_two(x, y)
    ok = miss == 0 and dt < 30.0
    return ok, f"{3 * (n + 1) ** 2} biconditional checks, {miss} mismatches, table in {dt:.1f}s (< 30 s)"


def criterion_4():
    rep = run_suite("thm5", Bounds(bound=16))
    ns_fails = not ns_check_f(F1).passed
    w = rep.info.get("f1_witness")
    ok = rep.ok and ns_fails and w is not None
    return ok, f"{rep.cases} cases, {len(rep.mismatches)} mismatches; F1 NS fails={ns_fails}, witness (x,y,z,sg)={w}"


def criterion_5():
    rep = run_suite("thm6", Bounds(trials=1000, seed=42))
    ce = run_suite("counterexample")
    ok = rep.ok and ce.ok
    return ok, (
        f"{rep.cases} trial/exhaustive cases, {len(rep.mismatches)} mismatches; "
        f"counterexample fast != oracle in {len(ce.mismatches)}/{ce.cases} variants"
    )


def criterion_6():
    parts, ok = [], True
    for h in BUILTIN_NS_H:
        t0 = time.perf_counter()
        st, cache, miss, cases = Stair(h), SGCache(), 0, 0
        for x in range(21):
            for z in range(21):
                for y in range(h(z) + 1):
                    for p in (0, 1):
                        s = (x, y, z, p)
                        v = sg(st, st.key(*s), cache)
                        miss += (v == 0) != in_A(h, s)
                        miss += (v == 1) != in_B(h, s)
                        miss += (v == 2) != in_C(h, s)
                        cases += 1
        dt = time.perf_counter() - t0
        ok &= miss == 0 and dt < 60.0
        parts.append(f"{h.spec}: {cases} positions, {miss} mismatches, {dt:.1f}s")
    return ok, "; ".join(parts) + " (< 60 s each)"


def criterion_7():
    reps = [run_suite("lemma1", Bounds(zmax=512)), run_suite("lemma2", Bounds(zmax=512)), run_suite("lemma4", Bounds(zmax=64))]
    ok = all(r.ok for r in reps)
    return ok, ", ".join(f"{r.suite}: {r.cases} cases/{len(r.mismatches)} violations" for r in reps)


def criterion_8():
    cache = SGCache()
    cb = Choco2(floor_div(1))
    checks = {}
    checks["nim one-move+decreasing"] = all(
        is_one_move(NIM, NIM.key(m), cache).verdict and is_sg_decreasing(NIM, NIM.key(m), cache).verdict for m in range(16)
    )
    cb_keys = [cb.key(y, z) for z in range(16) for y in range(z // 2 + 1)]
    checks["cb2 one-move"] = all(is_one_move(cb, k, cache).verdict for k in cb_keys)
    dec = is_sg_decreasing(cb, cb.key(1, 3), cache)
    checks["cb2 witness (1,3)->(1,2)"] = not dec.verdict and dec.witness == (cb.key(1, 3), cb.key(1, 2))
    checks["nim2 (1,1) not one-move"] = not is_one_move(NIM2, NIM2.key(1, 1), cache).verdict
    tested = [(NIM, NIM.key(m)) for m in range(16)] + [(cb, k) for k in cb_keys]
    tested += [(NIM2, NIM2.key(a, b)) for a in range(6) for b in range(6)]
    checks["containment"] = all(
        is_one_move(r, k, cache).verdict for r, k in tested if is_sg_decreasing(r, k, cache).verdict
    )
    failed = [k for k, v in checks.items() if not v]
    return not failed, f"{len(checks) - len(failed)}/{len(checks)} checks hold over {len(tested)} positions; failed: {failed or 'none'}"


def criterion_9():
    h = floor_div(1)
    table = gp_table(255, GP_CACHE)  # precomputed outside the timing
    parts, ok = [], True
    for s in PERF_POSITIONS:
        slow, t_slow = _timed(lambda: stair_sg(h, s, SGCache()))
        fast, t_fast = _timed(lambda: stair_sg_fast(h, s, SGCache(), table))
        ratio = t_slow / t_fast
        ok &= slow == fast and ratio >= 10
        parts.append(f"{s}: sg {fast}/{slow}, brute {t_slow:.2f}s vs fast {t_fast * 1000:.1f}ms ({ratio:.0f}x)")
    return ok, "; ".join(parts) + " (>= 10x each)"


CRITERIA = {
    1: ("nim-with-pass reference table reproduction", criterion_1),
    2: ("CB2 reference table reproduction (h=floor-div:1)", criterion_2),
    3: ("nim-with-pass closed forms for values 0,1,2 up to 200", criterion_3),
    4: ("chocolate bar value x^y^z under NS, F1 counterexample", criterion_4),
    5: ("one-pass homomorphism for one-move components", criterion_5),
    6: ("stair game closed forms for values 0,1,2", criterion_6),
    7: ("CB2 bound and small-value properties", criterion_7),
    8: ("one-move / SG-decreasing classification", criterion_8),
    9: ("stair fast path at least 10x faster than brute force", criterion_9),
}


def _line(n: int, ok: bool, detail: str) -> str:
    return f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {CRITERIA[n][0]} -- {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, acceptance_log):
    ok, detail = CRITERIA[n][1]()
    line = _line(n, ok, detail)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    for n, (_, fn) in CRITERIA.items():
        print(_line(n, *fn()), flush=True)
