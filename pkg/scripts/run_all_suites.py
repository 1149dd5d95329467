"""Run every verification suite at its default bounds and summarize."""
import argparse
import json

from passgame.chocolate import HFunction
from passgame.verify import SUITES, Bounds, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--h", default="floor-div:1")
    ap.add_argument("--jsonl", help="append mismatch records to this file")
    args = ap.parse_args()
    bounds = Bounds(seed=args.seed, trials=args.trials, h=HFunction.parse(args.h))
    failed = []
    for name in args.suites:
        rep = run_suite(name, bounds)
        tag = "ok" if rep.ok else "FAILED"
        note = " (failure expected)" if rep.expect_failure else ""
        print(f"{name:15s} {rep.cases:7d} cases {len(rep.mismatches):5d} mismatches{note:20s} {rep.elapsed:7.2f}s  {tag}")
        if args.jsonl and rep.mismatches:
            with open(args.jsonl, "a") as fh:
                for m in rep.mismatches:
                    fh.write(json.dumps(m, default=str) + "\n")
        if not rep.ok:
            failed.append(name)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
