"""Random instance generation.

Feasible matrices come from quantizing a random strictly increasing set of
positions through random integer thresholds; by construction the sampled
positions and thresholds witness feasibility. Fractional offsets keep
every gap away from the threshold values, so the strict system holds.
Optional random entry perturbations preserve the matrix invariants but may
destroy feasibility; deciding that is up to the caller.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .feasibility import Thresholds
from .matrix import RobinsonMatrix, validate_robinson


def random_thresholds(k: int, rng: random.Random) -> Thresholds:
    values = sorted(rng.sample(range(1, 4 * k + 2), k), reverse=True)
    return Thresholds(tuple(Fraction(v) for v in values))


def random_positions(n: int, d: Thresholds, rng: random.Random,
                     duplicate_prob: float = 0.0) -> list[Fraction]:
    """Strictly increasing positions, with optional exact duplicates.

    Distinct positions get a tiny index-dependent fractional offset so no
    gap between them is an integer, hence never equal to a threshold.
    """
    offset = Fraction(1, 2 * (n + 1))
    max_step = int(d.values[0])
    positions: list[Fraction] = []
    base = 0
    distinct = 0
    for v in range(n):
        if positions and rng.random() < duplicate_prob:
            positions.append(positions[-1])
            continue
        if positions:
            base += rng.randint(1, max_step)
        distinct += 1
        positions.append(Fraction(base) + distinct * offset)
    return positions


def quantize(positions: list[Fraction], d: Thresholds) -> RobinsonMatrix:
    """Similarity level of each pair from its gap: the count of thresholds above it."""
    n = len(positions)
    k = d.k
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = k
        for j in range(i + 1, n):
            gap = positions[j] - positions[i]
            assert gap not in d.values, "gap collides with a threshold"
            level = sum(1 for x in d.values if gap < x)
            rows[i][j] = rows[j][i] = level
    return RobinsonMatrix.from_rows(rows, k)


def perturb_once(m: RobinsonMatrix, rng: random.Random) -> RobinsonMatrix | None:
    """Nudge one off-diagonal pair by one level, keeping the matrix valid.

    Returns the perturbed matrix, or None when the sampled nudge would
    break validity.
    """
    if m.n < 2:
        return None
    u = rng.randint(1, m.n - 1)
    v = rng.randint(u + 1, m.n)
    delta = rng.choice((-1, 1))
    value = m.level(u, v) + delta
    if not 0 <= value <= m.k:
        return None
    rows = [list(row) for row in m.entries]
    rows[u - 1][v - 1] = rows[v - 1][u - 1] = value
    if validate_robinson(rows, m.k) is not None:
        return None
    return RobinsonMatrix(n=m.n, k=m.k, entries=tuple(tuple(r) for r in rows))


def random_instance(n: int, k: int, rng: random.Random,
                    duplicate_prob: float = 0.0,
                    perturbations: int = 0) -> RobinsonMatrix:
    """Random valid matrix; feasible by construction when unperturbed."""
    d = random_thresholds(k, rng)
    positions = random_positions(n, d, rng, duplicate_prob)
    m = quantize(positions, d)
    for _ in range(perturbations):
        perturbed = perturb_once(m, rng)
        if perturbed is not None:
            m = perturbed
    return m
