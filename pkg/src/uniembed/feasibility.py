"""Decide whether threshold distances satisfying the cycle system exist.

Every upper-bound-cycle C of the matrix imposes the strict inequality
bound(C) . d > 0 on the thresholds d_1 > ... > d_k > 0. For k = 2 each
inequality a1*d1 + a2*d2 > 0 becomes a bound on the ratio d2/d1 and the
system reduces to intersecting an interval; for general k the system is
decided by exact Fourier-Motzkin elimination. Infeasibility always comes
with one or two cycles whose inequalities are jointly unsatisfiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fme
from .bounds import Bound, format_bound, precedes
from .errors import ThresholdOrderError
from .pathgen import CycleRecord


@dataclass(frozen=True)
class Thresholds:
    """Exact threshold distances, strictly decreasing and positive."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ThresholdOrderError("need at least one threshold")
        prev = None
        for d in self.values:
            if d <= 0:
                raise ThresholdOrderError(f"threshold {d} is not positive")
            if prev is not None and d >= prev:
                raise ThresholdOrderError(
                    f"thresholds not strictly decreasing: {prev} then {d}")
            prev = d

    @classmethod
    def of(cls, *values) -> Thresholds:
        return cls(tuple(Fraction(v) for v in values))

    @property
    def k(self) -> int:
        return len(self.values)

    def upper(self, t: int) -> Fraction | None:
        """d_t, with None standing for the infinite sentinel d_0."""
        return None if t == 0 else self.values[t - 1]

    def lower(self, t: int) -> Fraction:
        """d_{t+1}, with the sentinel d_{k+1} = 0."""
        return Fraction(0) if t == self.k else self.values[t]

    def dot(self, bound: Bound) -> Fraction:
        total = Fraction(0)
        for a, d in zip(bound, self.values):
            total += a * d
        return total

    def to_json_list(self) -> list[str]:
        return [str(d) for d in self.values]


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """One or two cycles whose inequalities admit no threshold vector."""

    cycles: tuple[CycleRecord, ...]
    explanation: str

    def to_json_dict(self) -> dict:
        return {
            "cycles": [list(c.vertices) for c in self.cycles],
            "bounds": [list(c.bound) for c in self.cycles],
            "explanation": self.explanation,
        }


@dataclass(frozen=True)
class RatioInterval:
    """Open interval of admissible d2/d1 ratios, with attaining cycles."""

    lo: Fraction
    hi: Fraction
    lo_cycle: CycleRecord | None
    hi_cycle: CycleRecord | None
    degenerate: CycleRecord | None

    @property
    def feasible(self) -> bool:
        return self.degenerate is None and self.lo < self.hi


def ratio_interval(cycles: list[CycleRecord]) -> RatioInterval:
    """Fold cycle inequalities into bounds on the ratio d2/d1.

    With bound (a1, a2): a2 > 0 gives the lower bound -a1/a2, a2 < 0 the
    upper bound -a1/a2, and a2 = 0 requires a1 > 0 outright. The interval
    starts from (0, 1), the constraints of the threshold ordering itself.
    """
    lo, hi = Fraction(0), Fraction(1)
    lo_cycle = hi_cycle = degenerate = None
    for cycle in sorted(cycles, key=lambda c: (c.bound, c.vertices)):
        a1, a2 = cycle.bound
        if a2 == 0:
            if a1 <= 0 and degenerate is None:
                degenerate = cycle
        elif a2 > 0:
            r = Fraction(-a1, a2)
            if r > lo:
                lo, lo_cycle = r, cycle
        else:
            r = Fraction(-a1, a2)
            if r < hi:
                hi, hi_cycle = r, cycle
    return RatioInterval(lo=lo, hi=hi, lo_cycle=lo_cycle, hi_cycle=hi_cycle,
                         degenerate=degenerate)


def solve_ratio_k2(cycles: list[CycleRecord]
                   ) -> Thresholds | InfeasibilityCertificate:
    """Ratio method for k = 2: d = (1, midpoint) or a certificate."""
    for cycle in cycles:
        if len(cycle.bound) != 2:
            raise ValueError("ratio method needs k=2 cycle bounds")
    interval = ratio_interval(cycles)
    if interval.degenerate is not None:
        c = interval.degenerate
        return InfeasibilityCertificate(
            cycles=(c,),
            explanation=(
                f"cycle bound {format_bound(c.bound)} requires "
                f"{c.bound[0]}*d1 > 0, impossible for positive d1"),
        )
    if interval.feasible:
        mid = (interval.lo + interval.hi) / 2
        return Thresholds((Fraction(1), mid))
    cited = tuple(c for c in (interval.lo_cycle, interval.hi_cycle)
                  if c is not None)
    return InfeasibilityCertificate(
        cycles=cited,
        explanation=(
            f"largest lower bound {interval.lo} on d2/d1 meets smallest "
            f"upper bound {interval.hi}"),
    )


def _cycle_rows(cycles: list[CycleRecord], k: int) -> list[fme.Row]:
    rows = [fme.make_row(c.bound, strict=True, sources=(idx,))
            for idx, c in enumerate(cycles)]
    for i in range(k - 1):
        coeffs = [0] * k
        coeffs[i] = 1
        coeffs[i + 1] = -1
        rows.append(fme.make_row(coeffs, strict=True))
    last = [0] * k
    last[k - 1] = 1
    rows.append(fme.make_row(last, strict=True))
    return rows


def _filter_dominated(cycles: list[CycleRecord]) -> list[CycleRecord]:
    """Keep one cycle per minimal bound; dominated inequalities are implied."""
    ordered = sorted(cycles, key=lambda c: (c.bound, c.vertices))
    kept: list[CycleRecord] = []
    for cycle in ordered:
        if any(precedes(other.bound, cycle.bound) for other in kept):
            continue
        kept = [o for o in kept
                if not (precedes(cycle.bound, o.bound) and o.bound != cycle.bound)]
        kept.append(cycle)
    return kept


def solve_general_k(cycles: list[CycleRecord], k: int
                    ) -> Thresholds | InfeasibilityCertificate:
    """Exact elimination over d_1..d_k with strictness tracking.

    Feasible systems yield d scaled so the smallest gap (including d_k
    itself) is 1; infeasible ones yield a greedily minimized set of cycles
    that are jointly unsatisfiable on their own.
    """
    candidates = _filter_dominated(cycles)
    order = list(range(k))
    result = fme.solve(_cycle_rows(candidates, k), order)
    if isinstance(result, fme.Infeasible):
        core = _shrink_core(candidates, sorted(result.sources), k)
        return InfeasibilityCertificate(
            cycles=tuple(core),
            explanation=(
                "cycle inequalities "
                + ", ".join(format_bound(c.bound) + ".d > 0" for c in core)
                + " jointly derive the contradiction 0 > 0"),
        )
    d = [result[i] for i in range(k)]
    gaps = [d[i] - d[i + 1] for i in range(k - 1)] + [d[k - 1]]
    scale = 1 / min(gaps)
    return Thresholds(tuple(x * scale for x in d))


def _shrink_core(cycles: list[CycleRecord], source_ids: list[int],
                 k: int) -> list[CycleRecord]:
    """Greedily drop cycles while the remainder stays infeasible."""
    core = [cycles[i] for i in source_ids]
    changed = True
    while changed:
        changed = False
        for i in range(len(core)):
            trial = core[:i] + core[i + 1:]
            if isinstance(fme.eliminate(_cycle_rows(trial, k), list(range(k))),
                          fme.Infeasible):
                core = trial
                changed = True
                break
    return core


def check_cycle_system(cycles: list[CycleRecord], d: Thresholds) -> bool:
    """Exact check that every cycle inequality holds at d."""
    return all(d.dot(c.bound) > 0 for c in cycles)
