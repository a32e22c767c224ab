"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal summary
prints one PASS/FAIL line per criterion."""

import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from cohsys import arith, criteria, walls
from cohsys.criteria import Outcome, Theorem

import oracles


def criterion(number, title):
    return pytest.mark.criterion(number, title)


@criterion(1, "delta_r is the unique residue (g<=15, n<=6, -20<=d<=60), < 5 s")
def test_delta_r_uniqueness():
    start = time.perf_counter()
    checked = 0
    for g in range(2, 16):
        for n in range(2, 7):
            for d in range(-20, 61):
                for r in range(1, n):
                    hits = [x for x in range(n) if (r * (n - r) * (g - 1) + x - r * d) % n == 0]
                    assert len(hits) == 1
                    assert arith.delta_r(g, n, d, r) == hits[0]
                    checked += 1
    elapsed = time.perf_counter() - start
    print(f"checked {checked} cases in {elapsed:.2f}s")
    assert elapsed < 5


def _a_range(g, n, d):
    return range(0, g - arith.epsilon(g, n, d))


@criterion(2, "rank 2: dim A_{0,a}^c = 3g + a - delta2 (g<=30, -20<=d<=100), < 5 s")
def test_rank2_closed_form():
    start = time.perf_counter()
    bad = [
        (g, d, a)
        for g in range(2, 31)
        for d in range(-20, 101)
        for a in _a_range(g, 2, d)
        if arith.dim_a0a_complement(g, 2, d, a) != 3 * g + a - arith.delta2(d, a)
    ]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert elapsed < 5


@criterion(3, "rank 3: dim A_{0,a}^c = 7(g-1) + 1 + s~2 (g<=30, -20<=d<=100)")
def test_rank3_closed_form():
    bad = [
        (g, d, a)
        for g in range(2, 31)
        for d in range(-20, 101)
        for a in _a_range(g, 3, d)
        if arith.dim_a0a_complement(g, 3, d, a) != 7 * (g - 1) + 1 + oracles.tilde_s(3, d, a, 2)
    ]
    if bad:
        classes = sorted({(d % 3, a) for _, d, a in bad})
        print(f"{len(bad)} mismatches, (d mod 3, a) classes: {classes}; first: {bad[:3]}")
    assert bad == []


@criterion(3, "rank 3: dim A_{0,a}^c = 7(g-1) + 1 + s~2 (g<=30, -20<=d<=100)")
def test_rank3_case_labelling():
    # s~2 = 2a, 2a-1, 2a-2 as d - a = 0, 1, 2 mod 3; the printed cases (2)/(3) are swapped
    by_residue = {}
    for g in range(2, 31):
        for d in range(-20, 101):
            for a in _a_range(g, 3, d):
                value = 7 * (g - 1) + 1 + oracles.tilde_s(3, d, a, 2) - 7 * (g - 1) - 2 * a
                by_residue.setdefault((d - a) % 3, set()).add(value)
    assert by_residue == {0: {1}, 1: {0}, 2: {-1}}
    print("7(g-1) + 2a + c with c = +1, 0, -1 for d - a = 0, 1, 2 mod 3")


@criterion(4, "(0,a)-stable bundles exist for a <= g-1-eps; a = g-1 iff d != g-1 mod n")
def test_prop32_boundary():
    for g in range(2, 16):
        for n in range(2, 7):
            for d in range(0, 3 * g * n + 1):
                eps = oracles.epsilon(g, n, d)
                for a in range(0, g - eps):
                    assert criteria.tl_nonempty(g, n, d, 0, a)
                assert criteria.tl_nonempty(g, n, d, 0, g - 1) == ((d - (g - 1)) % n != 0)


def _recheck_teo1(g, n, d, k, w):
    k0 = d + n * (1 - g)
    return (
        0 <= w.t <= w.a <= oracles.a_max(g, n, d)
        and d >= 2 * n * g + w.s
        and k >= k0 - w.t
        and 2 * w.t - w.s <= w.a
    )


def _certificate(v, theorem):
    return next((w for w in v.certificates if w.theorem is theorem), None)


@criterion(5, "theorem fixtures (TEO1, TEO12, BN2, rank 3, Clifford)")
def test_theorem_fixtures():
    v = criteria.verdict(5, 2, 21, 12)
    assert v.outcome is Outcome.GUARANTEED_NONEMPTY
    assert v.witness.theorem is Theorem.TEO1
    assert (v.witness.a, v.witness.t, v.witness.s) == (1, 1, 1)
    assert _recheck_teo1(5, 2, 21, 12, v.witness)
    assert v.expected_dim_component == 4 * 4 + 1 - 12 * (12 - 21 + 2 * 4) == 29

    v = criteria.verdict(4, 2, 14, 8)
    assert v.outcome is Outcome.GUARANTEED_NONEMPTY
    w = _certificate(v, Theorem.TEO12)
    assert w is not None and w.a == 2
    assert 0 < 14 <= 2 * 4 * 2 and 14 - 2 * (8 - 2) <= w.a <= oracles.a_max(4, 2, 14)
    print(f"(4,2,14,8): dispatch {v.witness.describe()}; TEO12 a={w.a}")

    v = criteria.verdict(5, 2, 20, 11)
    assert v.outcome is Outcome.GUARANTEED_NONEMPTY
    w = _certificate(v, Theorem.BN2)
    assert w is not None and w.a == 2
    r = 11 - 2
    assert max(Fraction(20 - 10 - 2), Fraction(20 - 2, 2)) <= r
    assert 11 * (r - 20 + 10) < 5 - 2 + arith.delta2(20, 2) - 3
    print(f"(5,2,20,11): dispatch {v.witness.describe()}; BN2 a={w.a}")

    v = criteria.verdict(5, 3, 30, 18)
    assert v.outcome is Outcome.GUARANTEED_NONEMPTY
    if v.witness.theorem is Theorem.TEO1:
        assert _recheck_teo1(5, 3, 30, 18, v.witness)
    assert oracles.bn3_holds(5, 30, 18, _certificate(v, Theorem.BN3).a)

    v = criteria.verdict(5, 2, 21, 20)
    assert v.outcome is Outcome.CLIFFORD_INFEASIBLE
    assert 20 > 21 + 2 * (1 - 5)


def _random_tuples(rng, count):
    for _ in range(count):
        g = rng.randint(2, 15)
        n = rng.randint(2, 6)
        d = rng.randint(1, 3 * g * n)
        k = rng.randint(0, arith.clifford_max_k(g, n, d) + 2)
        yield g, n, d, k


def _closure_violations(at, g, n, d, *args):
    hits = [at(*args, a) is not None for a in range(criteria.a_max(g, n, d) + 1)]
    if True not in hits:
        return 0
    return int(not all(hits[hits.index(True):]))


@criterion(6, "witness upward closure in a and (t,l) monotonicity on 10^4 random tuples")
def test_upward_closure_and_monotonicity():
    rng = random.Random(20161016)
    violations = 0
    fired = 0
    for g, n, d, k in _random_tuples(rng, 10_000):
        violations += _closure_violations(criteria.teo1_at, g, n, d, g, n, d, k)
        violations += _closure_violations(criteria.teo12_at, g, n, d, g, n, d, k)
        if n == 2 and k >= 3:
            violations += _closure_violations(criteria.bn2_at, g, 2, d, g, d, k)
        if n == 3 and k >= 4:
            violations += _closure_violations(criteria.bn3_at, g, 3, d, g, d, k)
        fired += criteria.verdict(g, n, d, k).outcome is Outcome.GUARANTEED_NONEMPTY

        t = rng.randint(0, g)
        l = rng.randint(0, 2 * g)
        if criteria.tl_nonempty(g, n, d, t, l):
            violations += not criteria.tl_nonempty(g, n, d, t, l - 1)
            if t >= 1:
                violations += not criteria.tl_nonempty(g, n, d, t - 1, l)
    print(f"{fired} guaranteed verdicts among 10^4 tuples, {violations} violations")
    assert fired > 0
    assert violations == 0


@criterion(7, "walls: (2,3,1) -> {1} with cutoff 3; k = 0 -> no walls")
def test_walls():
    ws = walls.wall_candidates(2, 3, 1)
    assert ws.walls == (Fraction(1),)
    assert ws.upper_cutoff == 3
    for n in range(2, 6):
        for d in range(1, 25):
            assert walls.wall_candidates(n, d, 0).walls == ()


SCAN = ["scan", "--g", "5", "--n", "2", "--d-min", "10", "--d-max", "40",
        "--k-min", "1", "--k-max", "25", "--format", "csv"]


@criterion(8, "scan output byte-identical across runs and parallelism, each run < 2 s")
def test_scan_determinism():
    outputs = []
    for jobs in (1, 1, 1, 2, 4):
        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "cohsys", *SCAN, "--jobs", str(jobs)],
            capture_output=True,
            check=True,
        )
        elapsed = time.perf_counter() - start
        assert elapsed < 2, f"jobs={jobs} took {elapsed:.2f}s"
        outputs.append(proc.stdout)
    assert all(o == outputs[0] for o in outputs)
    assert outputs[0].count(b"\n") == 1 + 31 * 25
