"""End-to-end acceptance checks, one test per criterion.

Each test records a single PASS/FAIL line, printed in the terminal summary
(and immediately with ``-s``). Criterion 6 is slow and needs ``--runslow``.
"""

import time

import numpy as np
import pytest

from conftest import CRITERIA_LINES
from oracles import brute_min_distance, dual_containing_brute, gf2_rank, span_weight_histogram
from sampling import random_codes
from qc2qecc.algebra import (
    BinaryPolynomial,
    bar,
    build_field,
    divides,
    divides_x_n_minus_1,
    gcd_bits,
    reciprocal_dual,
    x_n_minus_1,
)
from qc2qecc.cyclotomic import all_cosets, generator_for_cosets, minimal_polynomial
from qc2qecc.distance import info_set_search, min_distance_exact, verify_witness, weight_distribution
from qc2qecc.qc2code import (
    TwoGenQC,
    dimension,
    exchange_identity_check,
    is_dual_containing_conditions,
    is_dual_containing_oracle,
    symplectic_inner,
)
from qc2qecc.qecctool.params import (
    QeccParams,
    derivation_closure,
    propagate_lengthen,
    propagate_shrink,
)
from qc2qecc.qecctool.reproduce import (
    DEFAULT_SEED,
    derived_improvements,
    load_best_known,
    load_fixtures,
    load_table1,
)

FIXTURES = load_fixtures()
SEARCH_BUDGET = 100_000
SEARCH_DEPTH = 3
CLAIMED_D = [8, 7, 7, 8, 7, 7, 7, 7]


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    CRITERIA_LINES.append(line)
    print(line)


def test_criterion_1_structural_reproduction():
    failures, slowest = [], 0.0
    for fx in FIXTURES:
        t0 = time.perf_counter()
        c = TwoGenQC.from_dict(fx)
        n = c.n
        checks = {
            "g1 | x^n-1": divides_x_n_minus_1(c.g1, n),
            "g2 | x^n-1": divides_x_n_minus_1(c.g2, n),
            "gcd(g1,g2)=1": gcd_bits(c.g1.bits, c.g2.bits) == 1,
            "gcd(v-1,x^n-1)=1": gcd_bits((1 << n) | 1, c.v.bits ^ 1) == 1,
            "bar(v)=v": bar(c.v, n) == c.v,
            "g2 | g1perp": divides(c.g2, reciprocal_dual(c.g1, n)),
            "oracle": is_dual_containing_oracle(c),
            "k": dimension(c) == 2 * n - c.g1.degree - c.g2.degree == fx["expected"]["k"],
        }
        elapsed = time.perf_counter() - t0
        slowest = max(slowest, elapsed)
        bad = [k for k, ok in checks.items() if not ok]
        if bad or elapsed >= 1.0:
            failures.append(f"{fx['label']}: {bad or f'{elapsed:.2f}s'}")
    ok = not failures
    record(1, "fixture structure", ok, f"{len(FIXTURES) - len(failures)}/8 pass, slowest {slowest:.3f}s"
           + (f"; {failures}" if failures else ""))
    assert ok, failures


def test_criterion_2_distance_upper_bounds():
    t0 = time.perf_counter()
    found, bad = [], []
    for fx, d in zip(FIXTURES, CLAIMED_D):
        c = TwoGenQC.from_dict(fx)
        assert fx["expected"]["qecc"][2] == d
        rep = info_set_search(c, target=d, budget=SEARCH_BUDGET, seed=DEFAULT_SEED, depth=SEARCH_DEPTH)
        found.append(rep.d_upper)
        if rep.d_upper != d or not verify_witness(c, rep) or rep.trials > SEARCH_BUDGET:
            bad.append(fx["label"])
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 600
    record(2, "search reaches claimed d", ok,
           f"seed {DEFAULT_SEED}, depth {SEARCH_DEPTH}, found {found}, {elapsed:.1f}s")
    assert ok, (bad, elapsed)


def _replay(chain_steps, base):
    q = base
    for step in chain_steps:
        q = {"shrink": propagate_shrink, "lengthen": propagate_lengthen}[step](q)
    return q


def test_criterion_3_table_closure():
    bases = [QeccParams(*fx["expected"]["qecc"]) for fx in FIXTURES]
    table = load_best_known()
    expected = load_table1()
    closure = derivation_closure(bases, 5)
    derived = derived_improvements(bases, table)
    chains_ok = all(
        closure[t].base in bases and _replay(closure[t].steps, closure[t].base).triple == t
        for t in derived
    )
    ok = set(derived) == expected and len(expected) == 36 and chains_ok
    record(3, "propagated table", ok,
           f"{len(set(derived) & expected)}/36 matched, {len(set(derived) - expected)} extra, chains valid={chains_ok}")
    assert ok


def test_criterion_4_random_instances():
    t0 = time.perf_counter()
    codes = random_codes(seed=2024, count=50)
    assert {c.n for c in codes} == {7, 9, 15, 17}
    problems = []
    cond_true = 0
    for i, c in enumerate(codes):
        rows = c.generator_matrix.entries.tolist()
        k = dimension(c)
        if k > 24 or k != gf2_rank(rows):
            problems.append((i, "dimension"))
            continue
        if min_distance_exact(c).d_upper != brute_min_distance(rows, c.n):
            problems.append((i, "distance"))
        wd = weight_distribution(c, c.n, "exact_small")
        if [wd.counts.get(w, 0) for w in range(c.n + 1)] != span_weight_histogram(rows, c.n):
            problems.append((i, "weights"))
        orc = is_dual_containing_oracle(c)
        if orc != dual_containing_brute(rows, c.n):
            problems.append((i, "oracle"))
        if is_dual_containing_conditions(c):
            cond_true += 1
            if not orc:
                problems.append((i, "conditions without oracle"))
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed <= 300
    record(4, "random instances vs brute force", ok,
           f"50 codes, {cond_true} meeting the conditions, {elapsed:.1f}s" + (f"; {problems}" if problems else ""))
    assert ok


def _cyclic_product(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    full = np.convolve(a, b) & 1
    out = full[:n].copy()
    out[: len(full) - n] ^= full[n:]
    return out


def test_criterion_5_property_suites():
    t0 = time.perf_counter()
    rng = np.random.default_rng(5)
    failures = []

    triples = 0
    for n in (7, 45):
        for _ in range(10_000):
            f, g, h = (rng.integers(0, 2, n, dtype=np.int64) for _ in range(3))
            fb, gb, hb = (BinaryPolynomial(int(sum(1 << i for i in np.flatnonzero(x))), n) for x in (f, g, h))
            lhs = int(_cyclic_product(f, g, n) @ h) & 1
            fbar = np.roll(f[::-1], 1)
            rhs = int(g @ _cyclic_product(fbar, h, n)) & 1
            if lhs != rhs or not exchange_identity_check(fb, gb, hb, n):
                failures.append(("exchange", n))
            triples += 1

    for n in (7, 15, 45, 51):
        for _ in range(200):
            a = BinaryPolynomial(int(rng.integers(0, 1 << min(n, 62))), n)
            if bar(bar(a, n), n) != a:
                failures.append(("bar", n))
        reps = [c.representative for c in all_cosets(n)]
        for r in range(1, len(reps)):
            g = generator_for_cosets(n, reps[:r])
            if reciprocal_dual(reciprocal_dual(g, n), n) != g:
                failures.append(("reciprocal", n))
        members = sorted(i for c in all_cosets(n) for i in c.members)
        if members != list(range(n)):
            failures.append(("partition", n))
        ctx = build_field(n)
        prod = BinaryPolynomial(1)
        for c in all_cosets(n):
            prod = prod * minimal_polynomial(ctx, c)
        if prod != x_n_minus_1(n):
            failures.append(("minimal polynomials", n))

    for _ in range(2000):
        n = int(rng.integers(1, 60))
        u = rng.integers(0, 2, 2 * n, dtype=np.uint8)
        if symplectic_inner(u, u, n):
            failures.append(("self-orthogonal", n))

    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    record(5, "algebraic properties", ok, f"{triples} exchange triples, {elapsed:.1f}s"
           + (f"; {failures[:5]}" if failures else ""))
    assert ok


@pytest.mark.slow
def test_criterion_6_weight_count_stretch():
    t0 = time.perf_counter()
    c = TwoGenQC.from_dict(FIXTURES[0])
    wd = weight_distribution(c, 8, "enumerate_to_w")
    ok = wd.counts.get(8) == 2970 and all(wd.counts.get(w, 0) == 0 for w in range(1, 8))
    record(6, "[[45,16,8]] weight-8 count", ok, f"A_8 = {wd.counts.get(8)}, {time.perf_counter() - t0:.1f}s")
    assert ok
