"""Bound vectors and bound walks.

A bound vector is an integer vector of length k: the coefficients of the
threshold distances d_1 > ... > d_k > 0. Walks in the complete graph on the
vertices yield such vectors, which bound the embedded distance between the
walk's endpoints from above (upper-bound-walks) or below (lower-bound-walks).
A pair with similarity 0 (a "null pair") may be traversed only from the
larger to the smaller vertex in an upper-bound-walk, and only from the
smaller to the larger in a lower-bound-walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IllegalWalkError
from .matrix import RobinsonMatrix

Bound = tuple[int, ...]

UPPER = "upper"
LOWER = "lower"

#: Chain label reserved for the all-zero vector, which sits outside the
#: norm-t chains.
ZERO_CHAIN = (0, 0)


def unit(k: int, t: int) -> Bound:
    """Unit vector of length k with a one at position t (1-based)."""
    return tuple(1 if i == t else 0 for i in range(1, k + 1))


def negate(a: Bound) -> Bound:
    return tuple(-x for x in a)


def add(a: Bound, b: Bound) -> Bound:
    return tuple(x + y for x, y in zip(a, b))


def dot(a: Bound, d: Sequence[Fraction]) -> Fraction:
    """Exact value of the linear form a . d."""
    total = Fraction(0)
    for x, y in zip(a, d):
        total += x * y
    return total


def edge_upper_bound(m: RobinsonMatrix, u: int, v: int) -> Bound | None:
    """Single-step upper bound on the gap from u to v, or None.

    For u < v with level t >= 1 this is the unit vector at t; a null pair
    admits no forward upper bound. For u > v the step reverses a lower
    bound, so it is always defined.
    """
    if u == v:
        raise ValueError("edge bounds need two distinct vertices")
    if u < v:
        t = m.level(u, v)
        return unit(m.k, t) if t >= 1 else None
    low = edge_lower_bound(m, v, u)
    assert low is not None
    return negate(low)


def edge_lower_bound(m: RobinsonMatrix, u: int, v: int) -> Bound | None:
    """Single-step lower bound on the gap from u to v, or None.

    For u < v with level t this is the unit vector at t+1, or the zero
    vector when t = k. For u > v it reverses the forward upper bound, which
    does not exist across a null pair.
    """
    if u == v:
        raise ValueError("edge bounds need two distinct vertices")
    if u < v:
        t = m.level(u, v)
        return tuple(0 for _ in range(m.k)) if t == m.k else unit(m.k, t + 1)
    up = edge_upper_bound(m, v, u)
    return None if up is None else negate(up)


@dataclass(frozen=True)
class BoundWalk:
    """A walk ``vertices`` tagged as an upper- or lower-bound-walk."""

    vertices: tuple[int, ...]
    kind: str  # UPPER or LOWER

    def __post_init__(self):
        if self.kind not in (UPPER, LOWER):
            raise ValueError(f"walk kind must be {UPPER!r} or {LOWER!r}")
        if not self.vertices:
            raise ValueError("a walk needs at least one vertex")


def check_walk(m: RobinsonMatrix, walk: BoundWalk) -> None:
    """Raise IllegalWalkError if any step crosses a null pair the wrong way."""
    verts = walk.vertices
    for i in range(1, len(verts)):
        x, y = verts[i - 1], verts[i]
        if x == y:
            raise IllegalWalkError(f"step {i} does not move ({x} to {y})", step=i)
        if m.level(x, y) == 0:
            if walk.kind == UPPER and x < y:
                raise IllegalWalkError(
                    f"step {i} crosses null pair ({x},{y}) from smaller to larger",
                    step=i)
            if walk.kind == LOWER and x > y:
                raise IllegalWalkError(
                    f"step {i} crosses null pair ({x},{y}) from larger to smaller",
                    step=i)


def walk_bound(m: RobinsonMatrix, walk: BoundWalk) -> Bound:
    """Sum of per-step edge bounds matching the walk's kind.

    The walk is legality-checked first; the bound of a single-vertex walk
    is the zero vector.
    """
    check_walk(m, walk)
    total = [0] * m.k
    step_bound = edge_upper_bound if walk.kind == UPPER else edge_lower_bound
    verts = walk.vertices
    for i in range(1, len(verts)):
        b = step_bound(m, verts[i - 1], verts[i])
        assert b is not None  # legality was checked above
        for j, x in enumerate(b):
            total[j] += x
    return tuple(total)


def reverse_walk(walk: BoundWalk) -> BoundWalk:
    """Reverse the vertex sequence and flip the kind.

    The bound of the reversed walk is the negation of the original's.
    """
    kind = LOWER if walk.kind == UPPER else UPPER
    return BoundWalk(vertices=tuple(reversed(walk.vertices)), kind=kind)


def concatenate(w1: BoundWalk, w2: BoundWalk) -> BoundWalk:
    """Join two walks of the same kind sharing an endpoint."""
    if w1.kind != w2.kind:
        raise ValueError("cannot concatenate walks of different kinds")
    if w1.vertices[-1] != w2.vertices[0]:
        raise ValueError("walks do not share an endpoint")
    return BoundWalk(vertices=w1.vertices + w2.vertices[1:], kind=w1.kind)


def precedes(a: Bound, b: Bound) -> bool:
    """Prefix-sum order: every prefix sum of a is at most that of b.

    Equivalent to a . d <= b . d for every valid threshold vector d.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    pa = 0
    pb = 0
    for x, y in zip(a, b):
        pa += x
        pb += y
        if pa > pb:
            return False
    return True


def chain_id(a: Bound) -> tuple[int, int]:
    """Chain label of a length-2 bound vector.

    Vectors of norm t split into two chains that are totally ordered under
    the prefix-sum order: chain (t, 1) holds vectors with positive second
    coordinate plus (-t, 0); chain (t, 2) holds the rest. The zero vector
    gets the dedicated label ``ZERO_CHAIN``.
    """
    if len(a) != 2:
        raise ValueError("chain labels are defined for k=2 only")
    a1, a2 = a
    t = abs(a1) + abs(a2)
    if t == 0:
        return ZERO_CHAIN
    if a2 > 0 or (a2 == 0 and a1 < 0):
        return (t, 1)
    return (t, 2)


def format_bound(a: Bound) -> str:
    """Render as "(a1,...,ak)" for reports."""
    return "(" + ",".join(str(x) for x in a) + ")"
