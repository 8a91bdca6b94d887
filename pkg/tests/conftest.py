import random

import pytest

from uniembed.matrix import RobinsonMatrix

# 5x5 instance with a uniform embedding (thresholds (8, 6) work).
FEASIBLE_ROWS = [
    [2, 2, 1, 0, 0],
    [2, 2, 2, 1, 1],
    [1, 2, 2, 2, 1],
    [0, 1, 2, 2, 2],
    [0, 1, 1, 2, 2],
]

# 6x6 instance with no uniform embedding: the bounds along 1-2-6 and
# 1-4-6 contradict each other.
INFEASIBLE_ROWS = [
    [2, 2, 1, 0, 0, 0],
    [2, 2, 2, 1, 1, 1],
    [1, 2, 2, 2, 1, 1],
    [0, 1, 2, 2, 2, 1],
    [0, 1, 1, 2, 2, 2],
    [0, 1, 1, 1, 2, 2],
]


def make_matrix(rows, k) -> RobinsonMatrix:
    return RobinsonMatrix.from_rows(rows, k)


@pytest.fixture
def matrix_a() -> RobinsonMatrix:
    return make_matrix(FEASIBLE_ROWS, 2)


@pytest.fixture
def matrix_b() -> RobinsonMatrix:
    return make_matrix(INFEASIBLE_ROWS, 2)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
