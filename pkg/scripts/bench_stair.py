"""Time brute-force stair SG against the component-value fast path."""
import argparse
import time

from passgame.chocolate import HFunction
from passgame.core import SGCache
from passgame.nimpass import gp_table
from passgame.stair import stair_sg, stair_sg_fast


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h", default="floor-div:1")
    ap.add_argument("--table", type=int, default=255, help="precomputed nim-with-pass table size")
    ap.add_argument("positions", nargs="*", default=["200,0,200,1", "101,1,100,1", "60,3,63,1"])
    args = ap.parse_args()
    h = HFunction.parse(args.h)
    t0 = time.perf_counter()
    table = gp_table(args.table)
    print(f"gp table 0..{args.table}: {time.perf_counter() - t0:.1f}s (one-off)")
    for text in args.positions:
        s = tuple(int(v) for v in text.split(","))
        t0 = time.perf_counter()
        slow = stair_sg(h, s, SGCache())
        t1 = time.perf_counter()
        fast = stair_sg_fast(h, s, SGCache(), table)
        t2 = time.perf_counter()
        print(f"{s}: brute {slow} in {t1 - t0:.2f}s, fast {fast} in {(t2 - t1) * 1e3:.1f}ms, {(t1 - t0) / (t2 - t1):.0f}x")


if __name__ == "__main__":
    main()
