"""Command-line front end: ``passgame sg|table|verify|classify``.

Exit codes: 0 success, 1 verification mismatches, 2 usage error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .chocolate import F1, F2, Choco2, Choco3, FFunction, HFunction, cb2_table, from_h
from .classify import is_one_move, is_sg_decreasing
from .core import BUDGET_ENV, BudgetExceeded, PositionKey, Ruleset, SGCache, sg
from .games import NIM, NIM2, NIM_PASS
from .nimpass import gp_table
from .stair import Stair
from .verify import SUITES, Bounds, run_suite

RULESETS = ("nim", "nim2-single", "nim-pass", "choco2", "choco3", "stair-pass")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    ruleset: str | None = None
    h: str = "floor-div:1"
    F: str = "f2"
    coords: list[int] = field(default_factory=list)
    pass_available: bool = False
    table: str | None = None
    max: int = 12
    zmax: int | None = None
    bound: int = 20
    trials: int = 1000
    seed: int = 42
    suite: str | None = None
    budget: int | None = None
    fmt: str = "plain"
    out: str | None = None


def parse_f(text: str) -> FFunction:
    if text == "f1":
        return F1
    if text == "f2":
        return F2
    if text.startswith("from-h:"):
        return from_h(HFunction.parse(text[len("from-h:"):]))
    raise UsageError(f"bad F selector {text!r}; use f1, f2 or from-h:<h>")


def build_position(cfg: RunConfig) -> tuple[Ruleset, PositionKey]:
    c = cfg.coords
    arity = {"nim": 1, "nim2-single": 2, "choco2": 2, "choco3": 3, "stair-pass": 3}

    def need(n: int) -> None:
        if len(c) != n:
            raise UsageError(f"{cfg.ruleset} takes {n} coordinates, got {len(c)}")

    if any(v < 0 for v in c):
        raise UsageError("coordinates must be nonnegative")
    if cfg.ruleset in arity:
        need(arity[cfg.ruleset])
    if cfg.ruleset == "nim":
        return NIM, NIM.key(*c)
    if cfg.ruleset == "nim2-single":
        return NIM2, NIM2.key(*c)
    if cfg.ruleset == "nim-pass":
        if not c:
            raise UsageError("nim-pass needs at least one pile")
        return NIM_PASS, NIM_PASS.position(c, cfg.pass_available)
    if cfg.ruleset == "choco2":
        r = Choco2(HFunction.parse(cfg.h))
        return r, r.position(*c)
    if cfg.ruleset == "choco3":
        r = Choco3(parse_f(cfg.F))
        return r, r.position(*c)
    if cfg.ruleset == "stair-pass":
        r = Stair(HFunction.parse(cfg.h))
        return r, r.position(*c, int(cfg.pass_available))
    raise UsageError(f"unknown ruleset {cfg.ruleset!r}; choose from {', '.join(RULESETS)}")


def table_csv(rows: list[list[int | None]], corner: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([corner, *range(len(rows[0]))])
    for i, row in enumerate(rows):
        w.writerow([i, *("" if v is None else v for v in row)])
    return buf.getvalue()


def cmd_sg(cfg: RunConfig) -> int:
    r, key = build_position(cfg)
    value = sg(r, key, SGCache())
    if cfg.fmt == "json-lines":
        print(json.dumps({"ruleset": r.rid, "position": list(key.payload), "sg": value}))
    else:
        print(value)
    return 0


def cmd_table(cfg: RunConfig) -> int:
    if cfg.table == "gp":
        rows, corner = gp_table(cfg.max), "x\\y"
    elif cfg.table == "cb2":
        rows, corner = cb2_table(HFunction.parse(cfg.h), 15 if cfg.zmax is None else cfg.zmax), "y\\z"
    else:
        raise UsageError(f"unknown table {cfg.table!r}; use gp or cb2")
    if cfg.fmt == "json-lines":
        text = "".join(json.dumps({"row": i, "values": row}) + "\n" for i, row in enumerate(rows))
    elif cfg.fmt == "plain":
        text = "".join(" ".join("." if v is None else str(v) for v in row) + "\n" for row in rows)
    else:
        text = table_csv(rows, corner)
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    bounds = Bounds(
        max=200 if cfg.max is None else cfg.max,
        zmax=512 if cfg.zmax is None else cfg.zmax,
        bound=cfg.bound,
        trials=cfg.trials,
        seed=cfg.seed,
        h=HFunction.parse(cfg.h),
    )
    rep = run_suite(cfg.suite, bounds)
    for m in rep.mismatches:
        print(json.dumps(m, default=str))
    status = "ok" if rep.ok else "FAILED"
    extra = " (failure expected)" if rep.expect_failure else ""
    print(f"{rep.suite}: {rep.cases} cases, {len(rep.mismatches)} mismatches{extra}, {rep.elapsed:.2f}s -> {status}")
    for k, v in rep.info.items():
        print(f"{k}: {v}")
    return 0 if rep.ok else 1


def _fmt_witness(w) -> str:
    return " -> ".join(str(k.payload) for k in w)


def cmd_classify(cfg: RunConfig) -> int:
    r, key = build_position(cfg)
    cache = SGCache()
    for label, cert in (("one-move", is_one_move(r, key, cache)), ("sg-decreasing", is_sg_decreasing(r, key, cache))):
        line = f"{label}: {str(cert.verdict).lower()}"
        if not cert.verdict:
            line += f" (witness {_fmt_witness(cert.witness)})"
        print(line)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="passgame", description=__doc__.splitlines()[0])
    p.add_argument("--budget", type=int, help=f"max positions per traversal (env {BUDGET_ENV})")
    sub = p.add_subparsers(dest="command", required=True)

    def position_args(sp):
        sp.add_argument("ruleset", choices=RULESETS)
        sp.add_argument("coords", nargs="*", type=int)
        sp.add_argument("--h", default="floor-div:1", help="floor-div:<k>, log-step or table:<path>")
        sp.add_argument("--F", default="f2", help="f1, f2 or from-h:<h>")
        sp.add_argument("--pass", dest="pass_available", action="store_true", help="pass still available")
        sp.add_argument("--no-pass", dest="pass_available", action="store_false")

    s = sub.add_parser("sg", help="print the SG value of a position")
    position_args(s)
    s.set_defaults(pass_available=None)
    s.add_argument("--format", dest="fmt", choices=("plain", "json-lines"), default="plain")

    t = sub.add_parser("table", help="emit a value table")
    t.add_argument("table", choices=("gp", "cb2"))
    t.add_argument("--max", type=int, default=12)
    t.add_argument("--zmax", type=int)
    t.add_argument("--h", default="floor-div:1")
    t.add_argument("--format", dest="fmt", choices=("csv", "json-lines", "plain"), default="csv")
    t.add_argument("--out")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("--max", type=int, default=None)
    v.add_argument("--zmax", type=int)
    v.add_argument("--bound", type=int, default=20)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--h", default="floor-div:1")

    c = sub.add_parser("classify", help="one-move and SG-decreasing certificates")
    position_args(c)
    c.set_defaults(pass_available=None)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        # coordinates may follow options (``choco2 --h floor-div:1 3 7``)
        args, extra = parser.parse_known_args(argv)
        if extra:
            if not hasattr(args, "coords") or not all(t.lstrip("-").isdigit() for t in extra):
                parser.error(f"unrecognized arguments: {' '.join(extra)}")
            args.coords = [*args.coords, *map(int, extra)]
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    if cfg.pass_available is None:
        # nim-pass defaults to an unused pass; stair-pass needs --pass
        cfg.pass_available = cfg.ruleset == "nim-pass"
    saved = os.environ.get(BUDGET_ENV)
    if cfg.budget is not None:
        os.environ[BUDGET_ENV] = str(cfg.budget)
    handlers = {"sg": cmd_sg, "table": cmd_table, "verify": cmd_verify, "classify": cmd_classify}
    try:
        return handlers[cfg.command](cfg)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 3
    finally:
        if saved is None:
            os.environ.pop(BUDGET_ENV, None)
        else:
            os.environ[BUDGET_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())
