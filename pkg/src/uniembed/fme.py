"""Exact Fourier-Motzkin elimination for homogeneous inequality systems.

Rows represent ``c . x > 0`` (strict) or ``c . x >= 0`` (non-strict) with
integer coefficients; the systems solved here are all homogeneous, so a
contradiction is exactly a derived strict row with all-zero coefficients.
Each row carries a set of source ids so a contradiction can be traced back
to the original inequalities that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

# (coefficients, strict, source ids)
Row = tuple[tuple[int, ...], bool, frozenset[int]]

_ROW_CAP = 500_000


@dataclass(frozen=True)
class Infeasible:
    """Witness of a derived ``0 > 0``; ``sources`` are contributing row ids."""

    sources: frozenset[int]


@dataclass
class Eliminated:
    """Snapshots of the system before each elimination step."""

    order: tuple[int, ...]
    snapshots: list[list[Row]]


def make_row(coeffs: Sequence[int | Fraction], strict: bool = True,
             sources: Iterable[int] = ()) -> Row:
    """Normalize a row to primitive integer coefficients."""
    fracs = [Fraction(c) for c in coeffs]
    if any(f.denominator != 1 for f in fracs):
        scale = 1
        for f in fracs:
            scale = scale * f.denominator // gcd(scale, f.denominator)
        ints = [int(f * scale) for f in fracs]
    else:
        ints = [int(f) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return (tuple(ints), strict, frozenset(sources))


def _combine(pos: Row, neg: Row, var: int) -> Row:
    """Positive combination cancelling ``var`` between a >0- and <0-row."""
    pc, ps, psrc = pos
    nc, ns, nsrc = neg
    mp = -nc[var]
    mn = pc[var]
    coeffs = tuple(mp * a + mn * b for a, b in zip(pc, nc))
    g = 0
    for x in coeffs:
        g = gcd(g, abs(x))
    if g > 1:
        coeffs = tuple(x // g for x in coeffs)
    return (coeffs, ps or ns, psrc | nsrc)


def _dedupe(rows: Iterable[Row]) -> list[Row] | Infeasible:
    """Drop trivial rows and duplicates; detect all-zero strict rows."""
    seen: dict[tuple[int, ...], Row] = {}
    for row in rows:
        coeffs, strict, _ = row
        if not any(coeffs):
            if strict:
                return Infeasible(sources=row[2])
            continue
        prev = seen.get(coeffs)
        if prev is None or (strict and not prev[1]):
            seen[coeffs] = row
    return list(seen.values())


def eliminate(rows: Sequence[Row], order: Sequence[int]) -> Eliminated | Infeasible:
    """Eliminate variables in ``order``; stop early on a contradiction."""
    current = _dedupe(rows)
    if isinstance(current, Infeasible):
        return current
    snapshots: list[list[Row]] = []
    for var in order:
        snapshots.append(current)
        pos = [r for r in current if r[0][var] > 0]
        neg = [r for r in current if r[0][var] < 0]
        nxt: list[Row] = [r for r in current if r[0][var] == 0]
        for p in pos:
            for q in neg:
                nxt.append(_combine(p, q, var))
        deduped = _dedupe(nxt)
        if isinstance(deduped, Infeasible):
            return deduped
        current = deduped
        if len(current) > _ROW_CAP:
            raise RuntimeError(
                f"elimination exceeded {_ROW_CAP} rows; system too large")
    return Eliminated(order=tuple(order), snapshots=snapshots)


def back_substitute(elim: Eliminated) -> dict[int, Fraction]:
    """Assign a value to each eliminated variable, in reverse order.

    Each variable gets the midpoint of its residual open interval; with
    only a lower bound it gets lower + 1, with only an upper bound
    upper - 1, and 0 when unconstrained.
    """
    values: dict[int, Fraction] = {}
    for idx in range(len(elim.order) - 1, -1, -1):
        var = elim.order[idx]
        lo: Fraction | None = None
        lo_strict = False
        hi: Fraction | None = None
        hi_strict = False
        for coeffs, strict, _ in elim.snapshots[idx]:
            c = coeffs[var]
            if c == 0:
                continue
            rest = Fraction(0)
            for j, cj in enumerate(coeffs):
                if j != var and cj:
                    rest += cj * values[j]
            bound = -rest / c
            if c > 0:
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
            else:
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
        if lo is None and hi is None:
            values[var] = Fraction(0)
        elif hi is None:
            assert lo is not None
            values[var] = lo + 1
        elif lo is None:
            values[var] = hi - 1
        else:
            if lo < hi:
                values[var] = (lo + hi) / 2
            else:
                assert lo == hi and not lo_strict and not hi_strict, \
                    "empty interval after feasible elimination"
                values[var] = lo
    return values


def solve(rows: Sequence[Row], order: Sequence[int]
          ) -> dict[int, Fraction] | Infeasible:
    """Feasibility plus a satisfying assignment for the ordered variables."""
    result = eliminate(rows, order)
    if isinstance(result, Infeasible):
        return result
    return back_substitute(result)
