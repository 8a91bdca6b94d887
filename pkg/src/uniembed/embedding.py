"""Construct and verify embeddings of the vertices onto the rational line.

An embedding is valid for thresholds d when, for every pair u < v with
similarity level t, the gap satisfies d_{t+1} < pi(v) - pi(u) < d_t, with
the sentinels d_{k+1} = 0 and d_0 = infinity. All comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import Bound
from .errors import EmbeddingGapError
from .feasibility import Thresholds, check_cycle_system
from .matrix import RobinsonMatrix, RowReduction
from .pathgen import BoundTable, extract_cycles


@dataclass(frozen=True)
class Embedding:
    """Positions of the vertices, 1-based via :meth:`position`."""

    positions: tuple[Fraction, ...]

    @classmethod
    def of(cls, *values) -> Embedding:
        return cls(tuple(Fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.positions)

    def position(self, v: int) -> Fraction:
        return self.positions[v - 1]

    def gap(self, u: int, v: int) -> Fraction:
        return self.positions[v - 1] - self.positions[u - 1]

    def to_json_list(self) -> list[str]:
        return [str(x) for x in self.positions]


@dataclass(frozen=True)
class Violation:
    """First pair breaking the strict system, with the offending gap."""

    u: int
    v: int
    level: int
    gap: Fraction
    reason: str

    def __str__(self) -> str:
        return (f"pair ({self.u},{self.v}) at level {self.level}: "
                f"gap {self.gap} {self.reason}")


def verify_embedding(m: RobinsonMatrix, d: Thresholds,
                     emb: Embedding) -> Violation | None:
    """Return None when the strict system holds, else the first violation.

    Pairs are scanned in lexicographic order, so the reported violation is
    deterministic. Pair scanning is independent per pair and could run
    concurrently with a smallest-pair reduction; the sequential scan keeps
    the same result.
    """
    if emb.n != m.n:
        raise ValueError(f"embedding covers {emb.n} vertices, matrix has {m.n}")
    if d.k != m.k:
        raise ValueError(f"threshold count {d.k} does not match k={m.k}")
    for u in range(1, m.n + 1):
        for v in range(u + 1, m.n + 1):
            t = m.level(u, v)
            gap = emb.gap(u, v)
            lower = d.lower(t)
            if not gap > lower:
                return Violation(u, v, t, gap, f"is not above {lower}")
            upper = d.upper(t)
            if upper is not None and not gap < upper:
                return Violation(u, v, t, gap, f"is not below {upper}")
    return None


def construct_embedding(m: RobinsonMatrix, d: Thresholds,
                        table: BoundTable) -> Embedding:
    """Place vertices iteratively between their bound envelopes.

    Vertex 1 sits at 0; each later vertex v goes to the midpoint of the
    tightest upper envelope (over stored upper bounds from earlier
    vertices) and the tightest lower envelope. When no upper-bound-path
    reaches v from any earlier vertex the upper envelope is infinite and v
    is placed one d_1 above the lower envelope.
    """
    if table.n != m.n or table.k != m.k:
        raise ValueError("bound table does not match the matrix")
    if d.k != m.k:
        raise ValueError(f"threshold count {d.k} does not match k={m.k}")
    if not check_cycle_system(extract_cycles(table), d):
        raise EmbeddingGapError(
            0, 0, 0, "thresholds violate a cycle inequality of this matrix")
    dv = d.values
    positions: list[Fraction] = [Fraction(0)]
    for v in range(2, m.n + 1):
        ub: Fraction | None = None
        ub_vertex = 0
        lb: Fraction | None = None
        lb_vertex = 0
        for i in range(1, v):
            base = positions[i - 1]
            upper_entries = table.entries(i, v)
            if upper_entries:
                best = min(_dot(e.bound, dv) for e in upper_entries)
                if ub is None or base + best < ub:
                    ub = base + best
                    ub_vertex = i
            reverse_entries = table.entries(v, i)
            if reverse_entries:
                # lower bounds on (i, v) are negated reversed upper bounds
                best = max(-_dot(e.bound, dv) for e in reverse_entries)
                if lb is None or base + best > lb:
                    lb = base + best
                    lb_vertex = i
        assert lb is not None, "backward single steps always bound from below"
        if ub is None:
            positions.append(lb + dv[0])
            continue
        if not lb < ub:
            raise EmbeddingGapError(
                v, ub_vertex, lb_vertex,
                f"vertex {v}: lower envelope {lb} via {lb_vertex} meets upper "
                f"envelope {ub} via {ub_vertex}; thresholds are infeasible")
        positions.append((ub + lb) / 2)
    return Embedding(tuple(positions))


def _dot(bound: Bound, dv: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for a, x in zip(bound, dv):
        total += a * x
    return total


def expand_embedding(reduction: RowReduction, emb0: Embedding,
                     d: Thresholds) -> Embedding:
    """Extend an embedding of the reduced matrix to the original one.

    Duplicates of representative p spread over (0, eps_p] above it, where
    2*eps_p is the least slack of the reduced embedding at p, capped at
    d_k so duplicate pairs stay strictly within the innermost threshold.
    The input embedding is verified against the reduced matrix first.
    """
    reduced = reduction.reduced
    violation = verify_embedding(reduced, d, emb0)
    if violation is not None:
        raise ValueError(
            f"embedding of the reduced matrix is invalid: {violation}")
    n0 = reduced.n
    eps: list[Fraction] = []
    for p in range(1, n0 + 1):
        slack = d.values[-1]  # cap: duplicate gaps must stay below d_k
        for q in range(1, n0 + 1):
            if q == p:
                continue
            t = reduced.level(min(p, q), max(p, q))
            if q < p:
                upper = d.upper(t)
                if upper is None:
                    continue
                term = upper - (emb0.position(p) - emb0.position(q))
            else:
                term = (emb0.position(q) - emb0.position(p)) - d.lower(t)
            if term < slack:
                slack = term
        assert slack > 0, "verified embedding must leave positive slack"
        eps.append(slack / 2)
    positions: list[Fraction] = []
    offset_index = 0
    prev_rep = 0
    for v, p in enumerate(reduction.index_map, start=1):
        if reduction.representatives[p - 1] == v:
            offset_index = 0
            prev_rep = p
            positions.append(emb0.position(p))
        else:
            assert p == prev_rep, "duplicates must follow their representative"
            offset_index += 1
            r = reduction.run_lengths[p - 1]
            positions.append(
                emb0.position(p) + Fraction(offset_index, r) * eps[p - 1])
    return Embedding(tuple(positions))
