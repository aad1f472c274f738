"""Run the exhaustive relation suites at chosen sizes and print one line per (relation, n)."""

import argparse
import sys

from skein.verify import verify_bigon, verify_braiding, verify_braiding_random, verify_conjugation, verify_trace_cyclicity


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--word-cutoff", type=int, default=4)
    ap.add_argument("--random", type=int, default=0, help="extra random braiding checks at n = n-max + 1")
    args = ap.parse_args()
    reports = []
    for n in range(args.n_max + 1):
        reports.append(verify_braiding(n, args.word_cutoff))
        reports.append(verify_conjugation(n, args.word_cutoff))
        reports.append(verify_trace_cyclicity(n))
        if n:
            reports.append(verify_bigon(n))
    if args.random:
        reports.append(verify_braiding_random(args.n_max + 1, args.random, 8))
    for r in reports:
        print(r.line(), flush=True)
    sys.exit(0 if all(r.passed for r in reports) else 1)


if __name__ == "__main__":
    main()
