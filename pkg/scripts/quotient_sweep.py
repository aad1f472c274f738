"""Rank of the two-ball gluing quotient over a grid of level bounds and word cutoffs."""

import argparse
import time

from skein.glue import QuotientConfig, quotient_rank


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=2)
    ap.add_argument("--cutoffs", type=int, nargs="+", default=[2, 4, 6])
    args = ap.parse_args()
    print("n_max cutoff columns rows relation_rank rational_ranks rank seconds")
    for n in range(args.n_max + 1):
        for cutoff in args.cutoffs:
            t = time.perf_counter()
            r = quotient_rank(QuotientConfig(n_max=n, word_cutoff=cutoff))
            dt = time.perf_counter() - t
            rational = ",".join(map(str, r.rational_ranks))
            print(f"{n:>5} {cutoff:>6} {r.columns:>7} {r.rows:>4} {r.rank:>13} {rational:>14} {r.dimension:>4} {dt:7.1f}")


if __name__ == "__main__":
    main()
