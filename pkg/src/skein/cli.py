"""
Command-line front end.

    skein bracket FILE [--oracle] [--json] [--jobs K]
    skein reduce FILE [--json]
    skein act WORD FILE [--side left|right] [--strands K] [--json]
    skein verify [--relations braiding|bigon|conjugation|all] [--n-max N] [--word-cutoff L] [--json] [--jobs K]
    skein quotient [--n-max N] [--word-cutoff L] [--model two-ball] [--json]

Exit codes: 0 success, 1 verification failure, 2 input error, 3 internal inconsistency.
Default size caps can be raised with SKEIN_MAX_VERIFY_N, SKEIN_MAX_QUOTIENT_N and SKEIN_MAX_ORACLE_CROSSINGS.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .braid import act, act_right
from .bracket import kauffman_bracket, state_sum_oracle
from .diagram import DiagramError, parse_braid, parse_tangle
from .glue import InconsistencyError, QuotientConfig, quotient_rank
from .tlskein import SkeinVector, reduce
from .verify import RELATIONS, run_relations

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3

DEFAULT_CAPS = {"SKEIN_MAX_VERIFY_N": 4, "SKEIN_MAX_QUOTIENT_N": 3, "SKEIN_MAX_ORACLE_CROSSINGS": 24}


class InputError(Exception):
    pass


def cap(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return DEFAULT_CAPS[name]
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None


@dataclasses.dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...] = ()
    output: str = "text"
    word_cutoff: int = 4
    oracle: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.word_cutoff < 1:
            raise InputError("word cutoff must be at least 1")
        if self.jobs < 1:
            raise InputError("parallelism must be at least 1")


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _read_vector(path: str) -> SkeinVector:
    text = _read(path).strip()
    if text.startswith("{") and '"terms"' in text:
        try:
            return SkeinVector.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as e:
            raise InputError(f"bad vector JSON: {e}") from None
    return SkeinVector.parse(text)


def _emit(cfg: RunConfig, text: str, data) -> None:
    print(json.dumps(data, sort_keys=True) if cfg.output == "json" else text)


def cmd_bracket(args, cfg: RunConfig) -> int:
    d = parse_tangle(_read(args.file))
    if d.n_endpoints:
        raise InputError(f"bracket needs a closed diagram, got {d.n_endpoints} endpoints")
    value = kauffman_bracket(d)
    if cfg.oracle:
        limit = cap("SKEIN_MAX_ORACLE_CROSSINGS")
        if len(d.crossings) > limit:
            raise InputError(f"oracle limited to {limit} crossings, diagram has {len(d.crossings)}")
        check = state_sum_oracle(d, workers=cfg.jobs)
        if check != value:
            print(f"oracle mismatch: recursive {value}, state sum {check}", file=sys.stderr)
            return EXIT_INCONSISTENT
    _emit(cfg, str(value), {"bracket": value.to_json(), "text": str(value)})
    return EXIT_OK


def cmd_reduce(args, cfg: RunConfig) -> int:
    v = reduce(parse_tangle(_read(args.file)))
    _emit(cfg, str(v), v.to_json())
    return EXIT_OK


def cmd_act(args, cfg: RunConfig) -> int:
    v = _read_vector(args.file)
    if args.side == "left":
        strands = args.strands or v.size
        out = act(parse_braid(args.word, strands), v)
    else:
        strands = args.strands or v.size // 2
        out = act_right(v, parse_braid(args.word, strands))
    _emit(cfg, str(out), out.to_json())
    return EXIT_OK


def _run_one(task):
    rel, n, cutoff = task
    return run_relations((rel,), n, cutoff)[-1] if (rel != "bigon" or n) else None


def cmd_verify(args, cfg: RunConfig) -> int:
    limit = cap("SKEIN_MAX_VERIFY_N")
    if args.n_max > limit or args.n_max < 0:
        raise InputError(f"--n-max must be in 0..{limit}")
    rels = RELATIONS if args.relations == "all" else (args.relations,)
    tasks = [(r, n, cfg.word_cutoff) for r in rels for n in range(args.n_max + 1) if r != "bigon" or n]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            reports = list(ex.map(_run_one, tasks))
    else:
        reports = [_run_one(t) for t in tasks]
    ok = all(r.passed for r in reports)
    text = "\n".join([r.line() for r in reports] + [f"result={'pass' if ok else 'fail'}"])
    _emit(cfg, text, {"reports": [r.to_json() for r in reports], "result": "pass" if ok else "fail"})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_quotient(args, cfg: RunConfig) -> int:
    limit = cap("SKEIN_MAX_QUOTIENT_N")
    if args.n_max > limit or args.n_max < 0:
        raise InputError(f"--n-max must be in 0..{limit}")
    res = quotient_rank(QuotientConfig(n_max=args.n_max, word_cutoff=cfg.word_cutoff))
    data = {
        "model": args.model,
        "n_max": res.n_max,
        "word_cutoff": res.word_cutoff,
        "columns": res.columns,
        "relation_rows": res.rows,
        "relation_rank": res.rank,
        "rational_ranks": list(res.rational_ranks),
        "rank": res.dimension,
    }
    text = " ".join(f"{k}={','.join(map(str, v)) if isinstance(v, list) else v}" for k, v in data.items())
    _emit(cfg, text, data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skein", description="Kauffman bracket skein computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, jobs=False, cutoff=False):
        sp.add_argument("--json", action="store_true", help="JSON output")
        if jobs:
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        if cutoff:
            sp.add_argument("--word-cutoff", type=int, default=4, help="longest braid word used")

    sp = sub.add_parser("bracket", help="bracket of a closed diagram")
    sp.add_argument("file")
    sp.add_argument("--oracle", action="store_true", help="cross-check against the state sum")
    common(sp, jobs=True)

    sp = sub.add_parser("reduce", help="tangle in the crossingless matching basis")
    sp.add_argument("file")
    common(sp)

    sp = sub.add_parser("act", help="apply a framed braid word to a vector")
    sp.add_argument("word")
    sp.add_argument("file")
    sp.add_argument("--side", choices=("left", "right"), default="left")
    sp.add_argument("--strands", type=int, default=None)
    common(sp)

    sp = sub.add_parser("verify", help="exhaustive relation checks")
    sp.add_argument("--relations", choices=RELATIONS + ("all",), default="all")
    sp.add_argument("--n-max", type=int, default=2)
    common(sp, jobs=True, cutoff=True)

    sp = sub.add_parser("quotient", help="rank of the two-ball gluing quotient")
    sp.add_argument("--n-max", type=int, default=2)
    sp.add_argument("--model", choices=("two-ball",), default="two-ball")
    common(sp, cutoff=True)
    return p


COMMANDS = {
    "bracket": cmd_bracket,
    "reduce": cmd_reduce,
    "act": cmd_act,
    "verify": cmd_verify,
    "quotient": cmd_quotient,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        cfg = RunConfig(
            command=args.command,
            inputs=tuple(x for x in (getattr(args, "file", None),) if x),
            output="json" if args.json else "text",
            word_cutoff=getattr(args, "word_cutoff", 4),
            oracle=getattr(args, "oracle", False),
            jobs=getattr(args, "jobs", 1),
        )
        return COMMANDS[args.command](args, cfg)
    except (InputError, DiagramError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
