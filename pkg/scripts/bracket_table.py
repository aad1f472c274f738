"""Print the bracket of every corpus diagram, cross-checked against the state sum."""

import argparse
import json

from skein.bracket import kauffman_bracket, state_sum_oracle
from skein.corpus import named_diagrams


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for name, d in named_diagrams().items():
        value = kauffman_bracket(d)
        rows.append((name, len(d.crossings), value, value == state_sum_oracle(d)))
    if args.json:
        print(json.dumps([{"name": n, "crossings": c, "bracket": str(v), "oracle": ok} for n, c, v, ok in rows], indent=1))
        return
    width = max(len(n) for n, *_ in rows)
    for name, c, value, ok in rows:
        print(f"{name:<{width}}  {c:>2}  {'ok ' if ok else 'BAD'}  {value}")


if __name__ == "__main__":
    main()
