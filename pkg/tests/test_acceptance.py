"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All comparisons are exact unless a runtime budget is stated.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from uniembed import oracle
from uniembed.bounds import dot, precedes
from uniembed.embedding import Embedding, verify_embedding
from uniembed.feasibility import (
    InfeasibilityCertificate, Thresholds, ratio_interval, solve_general_k,
)
from uniembed.generate import random_instance, random_thresholds
from uniembed.pathgen import extract_cycles, generate_bound_tables
from uniembed.solver import solve

from .conftest import FEASIBLE_ROWS, INFEASIBLE_ROWS, make_matrix


def _ok(criterion: int, message: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS - {message}")


@pytest.fixture(scope="module")
def desk_scale_run():
    """Shared batch for criteria 2 and 6: ≥500 desk-scale instances."""
    rng = random.Random(424242)
    instances = []
    start = time.monotonic()
    for trial in range(500):
        n = rng.randint(1, 7)
        k = rng.randint(1, 3)
        dup = 0.25 if trial % 3 == 0 else 0.0
        if trial % 4 == 1:
            perturbations = 12 * n
        elif trial % 2:
            perturbations = rng.randint(1, 2 * n)
        else:
            perturbations = 0
        m = random_instance(n, k, rng, duplicate_prob=dup,
                            perturbations=perturbations)
        result = solve(m)
        direct = oracle.direct_feasibility(m)
        instances.append((m, result, direct))
    elapsed = time.monotonic() - start
    return instances, elapsed


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "uniembed", *args],
        capture_output=True, text=True)


def test_criterion_1_golden_fixtures(tmp_path):
    matrix_a = make_matrix(FEASIBLE_ROWS, 2)
    start = time.monotonic()
    golden = Embedding.of(0, 5, Fraction(13, 2), Fraction(47, 4),
                          Fraction(51, 4))
    assert verify_embedding(matrix_a, Thresholds.of(8, 6), golden) is None
    verify_elapsed = time.monotonic() - start
    assert verify_elapsed < 1.0

    matrix_b = make_matrix(INFEASIBLE_ROWS, 2)
    path = tmp_path / "infeasible.txt"
    path.write_text(matrix_b.serialize())
    start = time.monotonic()
    proc = _run_cli("solve", str(path))
    solve_elapsed = time.monotonic() - start
    assert proc.returncode == 3
    assert "NO SOLUTION" in proc.stdout
    assert solve_elapsed < 1.0

    certificate = solve(matrix_b).certificate
    assert certificate is not None
    recheck = solve_general_k(list(certificate.cycles), 2)
    assert isinstance(recheck, InfeasibilityCertificate)
    _ok(1, f"golden embedding verifies exactly ({verify_elapsed:.3f}s); "
           f"infeasible fixture exits 3 ({solve_elapsed:.3f}s) and its "
           f"certificate re-checks as unsatisfiable")


def test_criterion_2_pipeline_matches_direct_oracle(desk_scale_run):
    instances, elapsed = desk_scale_run
    assert len(instances) >= 500
    disagreements = [
        m.serialize() for m, result, direct in instances
        if result.feasible != (direct is not None)
    ]
    assert disagreements == []
    assert elapsed < 300.0
    feasible = sum(1 for _, r, _ in instances if r.feasible)
    _ok(2, f"{len(instances)} instances, 100% feasibility agreement "
           f"({feasible} feasible, {len(instances) - feasible} infeasible) "
           f"in {elapsed:.1f}s")


def test_criterion_3_tables_match_bruteforce():
    rng = random.Random(31337)
    start = time.monotonic()
    checked_cells = 0
    for trial in range(200):
        n = rng.randint(2, 7)
        k = rng.randint(1, 3)
        m = random_instance(n, k, rng, duplicate_prob=0.15,
                            perturbations=rng.choice([0, rng.randint(1, n)]))
        table = generate_bound_tables(m)
        for i, j in table.ordered_pairs():
            got = {e.bound for e in table.minimal_entries(i, j)}
            want = {e.bound for e in oracle.enumerate_paths_bruteforce(m, i, j)}
            assert got == want, (m.serialize(), (i, j))
            checked_cells += 1
    _ok(3, f"200 instances, {checked_cells} cells equal the brute-force "
           f"minimal sets ({time.monotonic() - start:.1f}s)")


def test_criterion_4_ratio_interval_is_exact():
    matrix_a = make_matrix(FEASIBLE_ROWS, 2)
    solver_interval = ratio_interval(
        extract_cycles(generate_bound_tables(matrix_a)))
    oracle_lo, oracle_hi, forced_empty = oracle.cycle_ratio_interval(matrix_a)
    assert not forced_empty
    assert (solver_interval.lo, solver_interval.hi) == (oracle_lo, oracle_hi)
    assert (solver_interval.lo, solver_interval.hi) == (
        Fraction(1, 3), Fraction(1))
    _ok(4, "solver and brute-force cycle oracle both give the ratio "
           "interval (1/3, 1) exactly")


def _random_member(k: int, n: int, rng: random.Random):
    while True:
        a = tuple(rng.randint(-n, n) for _ in range(k))
        if sum(abs(x) for x in a) <= n:
            return a


def test_criterion_5_order_and_separation_properties():
    rng = random.Random(55555)
    start = time.monotonic()
    ordered = separated = 0
    for _ in range(1000):
        k = rng.randint(1, 4)
        n = rng.randint(k, 10)
        a = _random_member(k, n, rng)
        b = _random_member(k, n, rng)
        if precedes(b, a) and not precedes(a, b):
            a, b = b, a
        if precedes(a, b):
            ordered += 1
            c = oracle.buffer_vector(a, b)
            assert all(ci <= bi for ci, bi in zip(c, b))
            assert sum(c) == sum(a)
            for _ in range(100):
                d = random_thresholds(k, rng)
                da, dc, db = (dot(x, d.values) for x in (a, c, b))
                assert da <= dc <= db
        else:
            separated += 1
            d = oracle.separating_threshold(a, b)
            assert all(d.values[i] > d.values[i + 1] for i in range(k - 1))
            assert d.values[-1] > 0
            assert dot(a, d.values) > dot(b, d.values)
    assert ordered + separated == 1000
    assert ordered >= 100 and separated >= 100
    _ok(5, f"1000 pairs: {ordered} ordered (dot-product and buffer "
           f"postconditions at 100 thresholds each), {separated} unordered "
           f"(strict separation), 0 failures "
           f"({time.monotonic() - start:.1f}s)")


def test_criterion_6_constructed_embeddings_verify(desk_scale_run):
    instances, _ = desk_scale_run
    feasible = 0
    with_duplicates = 0
    for m, result, _ in instances:
        if not result.feasible:
            continue
        feasible += 1
        emb = result.embedding
        assert emb is not None and result.d is not None
        for v in range(2, m.n + 1):
            assert emb.position(v - 1) < emb.position(v)
        assert verify_embedding(m, result.d, emb) is None
        if result.reduction.reduced.n < m.n:
            with_duplicates += 1
    assert feasible > 100
    assert with_duplicates > 10
    _ok(6, f"{feasible} feasible instances: all constructed embeddings "
           f"strictly increasing and verifier-clean "
           f"({with_duplicates} routed through row reduction/expansion)")


def test_criterion_7_scaling(tmp_path):
    rng = random.Random(777)
    worst = []
    for n in (10, 20, 30, 40, 50):
        for _ in range(2):
            m = random_instance(n, 2, rng,
                                perturbations=rng.choice([0, n]))
            table = generate_bound_tables(m)
            size = table.max_cell_size()
            assert size <= 2 * n, (n, size)
            worst.append((n, size))
    timings = {}
    for n in (25, 50, 100):
        m = random_instance(n, 2, random.Random(1000 + n))
        path = tmp_path / f"n{n}.txt"
        path.write_text(m.serialize())
        start = time.monotonic()
        proc = _run_cli("solve", str(path), "--json")
        timings[n] = time.monotonic() - start
        assert proc.returncode == 0
        out = json.loads(proc.stdout)
        d = Thresholds(tuple(Fraction(x) for x in out["d"]))
        emb = Embedding(tuple(Fraction(x) for x in out["pi"]))
        assert verify_embedding(m, d, emb) is None
    assert timings[100] < 60.0
    trend = ", ".join(f"n={n}: {t:.2f}s" for n, t in sorted(timings.items()))
    _ok(7, f"cell sizes within 2n up to n=50 (worst {max(s for _, s in worst)}); "
           f"solve via the command line, growth trend (non-binding): {trend}")
