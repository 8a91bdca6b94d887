import random
from fractions import Fraction

import pytest

from uniembed.embedding import (
    Embedding, construct_embedding, expand_embedding, verify_embedding,
)
from uniembed.errors import EmbeddingGapError
from uniembed.feasibility import Thresholds, solve_ratio_k2
from uniembed.generate import random_instance, random_thresholds
from uniembed.matrix import reduce_repeated_rows
from uniembed.pathgen import extract_cycles, generate_bound_tables

from .conftest import make_matrix

GOLDEN_D = Thresholds.of(8, 6)
GOLDEN_PI = Embedding.of(0, 5, Fraction(13, 2), Fraction(47, 4), Fraction(51, 4))


def test_golden_embedding_verifies_exactly(matrix_a):
    assert verify_embedding(matrix_a, GOLDEN_D, GOLDEN_PI) is None


def test_boundary_gap_is_rejected(matrix_a):
    moved = Embedding.of(0, 6, Fraction(13, 2), Fraction(47, 4), Fraction(51, 4))
    violation = verify_embedding(matrix_a, GOLDEN_D, moved)
    assert violation is not None
    assert (violation.u, violation.v) == (1, 2)
    assert violation.gap == 6
    assert violation.level == 2


def test_no_embedding_of_infeasible_fixture_verifies(matrix_b):
    rng = random.Random(13)
    for _ in range(100):
        d = random_thresholds(2, rng)
        gaps = [Fraction(rng.randint(1, 40), rng.randint(1, 4))
                for _ in range(5)]
        positions = [Fraction(0)]
        for g in gaps:
            positions.append(positions[-1] + g)
        emb = Embedding(tuple(positions))
        assert verify_embedding(matrix_b, d, emb) is not None


def test_construct_with_golden_thresholds(matrix_a):
    table = generate_bound_tables(matrix_a)
    emb = construct_embedding(matrix_a, GOLDEN_D, table)
    assert emb.position(1) == 0
    assert verify_embedding(matrix_a, GOLDEN_D, emb) is None


def test_construct_with_solved_thresholds(matrix_a):
    table = generate_bound_tables(matrix_a)
    emb = construct_embedding(matrix_a, Thresholds.of(3, 2), table)
    assert verify_embedding(matrix_a, Thresholds.of(3, 2), emb) is None


def test_construct_single_vertex():
    m = make_matrix([[1]], 1)
    emb = construct_embedding(m, Thresholds.of(1), generate_bound_tables(m))
    assert emb.positions == (Fraction(0),)


def test_construct_rejects_infeasible_thresholds(matrix_a):
    table = generate_bound_tables(matrix_a)
    # ratio 1/4 is below the feasible interval (1/3, 1)
    with pytest.raises(EmbeddingGapError):
        construct_embedding(matrix_a, Thresholds.of(4, 1), table)


def test_construct_places_isolated_vertices_one_d1_apart():
    # two components at level 0: no upper-bound-path reaches vertex 2,
    # so it lands one d1 above its lower envelope (itself d1 here)
    m = make_matrix([[1, 0], [0, 1]], 1)
    d = Thresholds.of(5)
    emb = construct_embedding(m, d, generate_bound_tables(m))
    assert emb.positions == (Fraction(0), Fraction(10))
    assert verify_embedding(m, d, emb) is None


def test_expand_single_duplicate_pair():
    m = make_matrix([[2, 2], [2, 2]], 2)
    red = reduce_repeated_rows(m)
    base = Embedding.of(0)
    d = Thresholds.of(8, 6)
    emb = expand_embedding(red, base, d)
    assert emb.positions == (Fraction(0), Fraction(3))  # d_k / 2
    assert verify_embedding(m, d, emb) is None


def test_expand_identity_reduction_is_noop(matrix_a):
    red = reduce_repeated_rows(matrix_a)
    emb = expand_embedding(red, GOLDEN_PI, GOLDEN_D)
    assert emb == GOLDEN_PI


def test_expand_duplicate_run_with_k1():
    m = make_matrix([[1, 1, 1], [1, 1, 1], [1, 1, 1]], 1)
    red = reduce_repeated_rows(m)
    assert red.reduced.n == 1
    d = Thresholds.of(1)
    emb = expand_embedding(red, Embedding.of(0), d)
    assert verify_embedding(m, d, emb) is None
    assert emb.position(1) < emb.position(2) < emb.position(3)


def test_expand_leading_duplicate_pair_with_k1():
    m = make_matrix([[1, 1, 0], [1, 1, 0], [0, 0, 1]], 1)
    red = reduce_repeated_rows(m)
    assert red.reduced.n == 2
    d = Thresholds.of(1)
    base = Embedding.of(0, 2)
    emb = expand_embedding(red, base, d)
    assert verify_embedding(m, d, emb) is None
    assert emb.position(1) < emb.position(2) < emb.position(3)


def test_expand_rejects_invalid_base_embedding(matrix_a):
    red = reduce_repeated_rows(matrix_a)
    bad = Embedding.of(0, 6, Fraction(13, 2), Fraction(47, 4), Fraction(51, 4))
    with pytest.raises(ValueError):
        expand_embedding(red, bad, GOLDEN_D)


def test_walk_bounds_hold_for_verified_embedding(matrix_a):
    table = generate_bound_tables(matrix_a)
    emb = construct_embedding(matrix_a, GOLDEN_D, table)
    for i, j in table.ordered_pairs():
        for entry in table.entries(i, j):
            bound_value = GOLDEN_D.dot(entry.bound)
            assert emb.position(j) - emb.position(i) < bound_value


def test_reduce_solve_expand_round_trip_with_duplicates(rng):
    checked = 0
    for _ in range(60):
        m = random_instance(rng.randint(2, 9), 2, rng, duplicate_prob=0.35)
        red = reduce_repeated_rows(m)
        table = generate_bound_tables(red.reduced)
        outcome = solve_ratio_k2(extract_cycles(table))
        assert isinstance(outcome, Thresholds)  # unperturbed instances
        base = construct_embedding(red.reduced, outcome, table)
        emb = expand_embedding(red, base, outcome)
        assert verify_embedding(m, outcome, emb) is None
        for v in range(2, m.n + 1):
            assert emb.position(v - 1) < emb.position(v)
        if red.reduced.n < m.n:
            checked += 1
    assert checked >= 10
