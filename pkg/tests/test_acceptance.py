"""
Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly with ``python3 tests/test_acceptance.py``.
All comparisons are exact.
"""

import itertools
import random
import sys
import time

import pytest

from skein.braid import act, act_right
from skein.bracket import (
    add_kink,
    apply_r2,
    apply_r3,
    kauffman_bracket,
    r2_sites,
    r3_sites,
    resolve_crossing,
    state_sum_oracle,
)
from skein.corpus import named_diagrams, random_braid_word, random_closed_diagram
from skein.diagram import FramedBraidWord, parse_braid
from skein.glue import QuotientConfig, crossing_balls, pair, quotient_rank, split_diagram
from skein.laurent import A, A_INV, DELTA, NEGATIVE_KINK, POSITIVE_KINK
from skein.tlskein import Matching, SkeinVector, compose_rect, e_rect, enumerate_basis, identity_rect, reduce
from skein.verify import (
    verify_bigon,
    verify_braiding,
    verify_braiding_random,
    verify_conjugation,
    verify_trace_cyclicity,
)

CORPUS = named_diagrams()
SEED = 20261019


def report(number, title, ok, detail=""):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    return line


@pytest.fixture
def say(capsys):
    def emit(line):
        with capsys.disabled():
            print("\n" + line)

    return emit


def criterion_1():
    start = time.perf_counter()
    rng = random.Random(SEED)
    diagrams = list(CORPUS.values()) + [random_closed_diagram(rng, 10) for _ in range(200)]
    bad = sum(kauffman_bracket(d) != state_sum_oracle(d) for d in diagrams)
    elapsed = time.perf_counter() - start
    ok = len(CORPUS) == 20 and bad == 0 and elapsed < 60
    return ok, f"{len(diagrams)} diagrams, {bad} mismatches, {elapsed:.1f}s"


def _move_instances(rng, count):
    """R2 and R3 instances on corpus and random diagrams: (before, after) pairs."""
    pool = list(CORPUS.values()) + [random_closed_diagram(rng, 8) for _ in range(40)]
    out = []
    while len(out) < count:
        d = rng.choice(pool)
        if rng.random() < 0.5:
            sites = r2_sites(d)
            if sites:
                out.append((d, apply_r2(d, rng.choice(sites))))
        else:
            faces = r3_sites(d)
            if faces:
                out.append((d, apply_r3(d, rng.choice(faces))))
    return out


def criterion_2():
    rng = random.Random(SEED)
    skein_bad = 0
    kink_bad = 0
    for d in CORPUS.values():
        whole = kauffman_bracket(d)
        for c in range(len(d.crossings)):
            d0, dinf = resolve_crossing(d, c)
            skein_bad += whole != A * kauffman_bracket(d0) + A_INV * kauffman_bracket(dinf)
            for sign, factor in ((1, POSITIVE_KINK), (-1, NEGATIVE_KINK)):
                dart = (c, rng.randrange(4))
                kink_bad += kauffman_bracket(add_kink(d, dart, sign)) != factor * whole
    moves = _move_instances(rng, 100)
    kinds = sum(len(after.crossings) == len(before.crossings) for before, after in moves)
    move_bad = sum(kauffman_bracket(a) != kauffman_bracket(b) for a, b in moves)
    ok = skein_bad == kink_bad == move_bad == 0 and 0 < kinds < 100
    return ok, f"skein {skein_bad}, kinks {kink_bad}, R2/R3 {move_bad} of {len(moves)} ({kinds} R3) failures"


def _dyck_matchings(n):
    """Independent enumerator: all 2^(2n) open/close strings, rejecting the unbalanced ones."""
    out = set()
    for bits in itertools.product((0, 1), repeat=2 * n):
        stack, pairs = [], []
        for pos, b in enumerate(bits, start=1):
            if b == 0:
                stack.append(pos)
            elif not stack:
                break
            else:
                pairs.append((stack.pop(), pos))
        else:
            if not stack:
                out.add(Matching.from_pairs(pairs) if pairs else Matching.empty())
    return out


def criterion_3():
    start = time.perf_counter()
    expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    counts = [len(enumerate_basis(n)) for n in range(9)]
    agree = all(set(enumerate_basis(n)) == _dyck_matchings(n) for n in range(9))
    elapsed = time.perf_counter() - start
    return counts == expected and agree and elapsed < 10, f"counts {counts}, {elapsed:.1f}s"


def criterion_4():
    bad = 0
    for n in range(1, 6):
        one = identity_rect(n)
        e = {i: e_rect(n, i) for i in range(1, n)}
        for i in e:
            bad += compose_rect(one, e[i]) != e[i] or compose_rect(e[i], one) != e[i]
            bad += compose_rect(e[i], e[i]) != e[i].scale(DELTA)
            for j in e:
                if abs(i - j) == 1:
                    bad += compose_rect(compose_rect(e[i], e[j]), e[i]) != e[i]
                elif abs(i - j) > 1:
                    bad += compose_rect(e[i], e[j]) != compose_rect(e[j], e[i])
    return bad == 0, f"{bad} failures for n <= 5"


def criterion_5():
    rng = random.Random(SEED)
    bad = 0
    for _ in range(500):
        n = rng.randint(1, 4)
        disk = rng.random() < 0.5
        strands = 2 * n if disk else n
        u = random_braid_word(rng, strands, rng.randint(0, 8))
        w = random_braid_word(rng, strands, rng.randint(0, 8 - len(u)))
        v = SkeinVector.basis(rng.choice(enumerate_basis(n)))
        bad += act(u * w, v) != act(u, act(w, v))
        bad += act(FramedBraidWord.identity(strands), v) != v
        if not disk:
            bad += act_right(act_right(v, u), w) != act_right(v, u * w)
    rel_bad = 0
    for m in (2, 3, 4):
        basis = [SkeinVector.basis(x) for x in enumerate_basis(m)]

        def same(a, b):
            wa, wb = parse_braid(a, m), parse_braid(b, m)
            return all(act(wa, v) == act(wb, v) for v in basis)

        for i in range(1, m):
            rel_bad += not same(f"s{i} s{i}^-1", "") or not same(f"s{i} t{i}", f"t{i+1} s{i}")
            if i + 1 < m:
                rel_bad += not same(f"s{i} s{i+1} s{i}", f"s{i+1} s{i} s{i+1}")
            for j in range(i + 2, m):
                rel_bad += not same(f"s{i} s{j}", f"s{j} s{i}")
        for i in range(1, m + 1):
            rel_bad += not same(f"t{i} t{i}^-1", "")
            for j in range(1, m):
                rel_bad += not same(f"t{i} s{j}", f"s{j} t{j + 1 if i == j else j if i == j + 1 else i}")
    return bad == rel_bad == 0, f"{bad} action failures in 500 instances, {rel_bad} relation failures"


def criterion_6():
    start = time.perf_counter()
    reports = [verify_braiding(n, 4) for n in range(4)] + [verify_braiding_random(4, 500, 8, SEED)]
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports) and elapsed < 300
    cases = sum(r.cases for r in reports)
    witness = next((r.witness for r in reports if r.witness), "")
    return ok, f"{cases} cases, {elapsed:.1f}s{' ' + witness if witness else ''}"


def criterion_7():
    reports = [verify_bigon(n) for n in range(1, 5)]
    return all(r.passed for r in reports), f"{sum(r.cases for r in reports)} cases"


def criterion_8():
    bad = splits = 0
    for d in CORPUS.values():
        whole = kauffman_bracket(d)
        balls = list(crossing_balls(d)) or [set()]
        for inside in balls:
            left, right = split_diagram(d, inside)
            splits += 1
            bad += pair(reduce(left), reduce(right)) != whole
    return bad == 0, f"{splits} splits, {bad} mismatches"


def criterion_9():
    reports = [verify_conjugation(n, 4) for n in range(4)] + [verify_trace_cyclicity(n) for n in range(5)]
    return all(r.passed for r in reports), f"{sum(r.cases for r in reports)} cases"


def criterion_10():
    start = time.perf_counter()
    ranks = {}
    cross_ok = True
    for n_max in (0, 1, 2):
        for cutoff in (4, 6):
            res = quotient_rank(QuotientConfig(n_max=n_max, word_cutoff=cutoff))
            ranks[(n_max, cutoff)] = res.dimension
            cross_ok &= len(res.rational_ranks) == 2 and set(res.rational_ranks) == {res.rank}
    elapsed = time.perf_counter() - start
    ok = set(ranks.values()) == {1} and cross_ok and elapsed < 300
    return ok, f"ranks {sorted(ranks.items())}, {elapsed:.1f}s"


CRITERIA = [
    (1, "bracket equals state-sum oracle", criterion_1),
    (2, "skein, kink and Reidemeister identities", criterion_2),
    (3, "Catalan basis counts", criterion_3),
    (4, "Temperley-Lieb relations", criterion_4),
    (5, "braid group action laws", criterion_5),
    (6, "braiding relation in the kernel", criterion_6),
    (7, "bigon relation in the kernel", criterion_7),
    (8, "gluing reproduces the bracket", criterion_8),
    (9, "conjugation invariance of the trace", criterion_9),
    (10, "two-ball quotient has rank one", criterion_10),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, say):
    ok, detail = check()
    say(report(number, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, title, check in CRITERIA:
        ok, detail = check()
        failures += not ok
        print(report(number, title, ok, detail), flush=True)
    sys.exit(1 if failures else 0)
