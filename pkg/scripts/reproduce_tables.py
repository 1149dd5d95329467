"""Regenerate the golden CSV tables and diff them against the published values."""
import argparse
from pathlib import Path

from passgame import published
from passgame.chocolate import cb2_table, floor_div
from passgame.cli import table_csv
from passgame.nimpass import gp_table


def diff(name, got, want):
    bad = [(i, j, w, g) for i, (gr, wr) in enumerate(zip(got, want)) for j, (g, w) in enumerate(zip(gr, wr))
           if g is not None and g != w]
    print(f"{name}: {len(bad)} cells differ from the published table")
    for i, j, w, g in bad:
        print(f"  ({i}, {j}): published {w}, computed {g}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "golden")
    args = ap.parse_args()
    args.out.mkdir(exist_ok=True)
    gp = gp_table(12)
    cb2 = cb2_table(floor_div(1), 15)
    (args.out / "gp_table_12.csv").write_text(table_csv(gp, "x\\y"), newline="")
    (args.out / "cb2_table_15.csv").write_text(table_csv(cb2, "y\\z"), newline="")
    diff("gp_table_12", gp, published.GP_TABLE_12)
    diff("cb2_table_15", cb2, published.CB2_TABLE_15)


if __name__ == "__main__":
    main()
