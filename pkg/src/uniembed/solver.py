"""End-to-end pipeline: reduce, generate bounds, decide, embed, verify.

The pipeline works on the duplicate-free reduced matrix, expands the
embedding back to the original vertices, and re-verifies the result
against the original matrix; a verification failure there is a bug, not an
input condition. Certificates are reported in original vertex numbering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import UPPER, BoundWalk, walk_bound
from .embedding import (
    Embedding, construct_embedding, expand_embedding, verify_embedding,
)
from .errors import InternalVerificationError
from .feasibility import (
    InfeasibilityCertificate, RatioInterval, Thresholds, ratio_interval,
    solve_general_k, solve_ratio_k2,
)
from .matrix import RobinsonMatrix, RowReduction, reduce_repeated_rows
from .pathgen import CycleRecord, extract_cycles, generate_bound_tables

RATIO = "ratio"
GENERAL = "general"
AUTO = "auto"


@dataclass(frozen=True)
class SolveResult:
    feasible: bool
    method: str
    reduction: RowReduction
    d: Thresholds | None = None
    embedding: Embedding | None = None
    certificate: InfeasibilityCertificate | None = None
    interval: RatioInterval | None = None

    def to_json_dict(self) -> dict:
        if self.feasible:
            assert self.d is not None and self.embedding is not None
            return {
                "status": "feasible",
                "d": self.d.to_json_list(),
                "pi": self.embedding.to_json_list(),
            }
        assert self.certificate is not None
        return {
            "status": "infeasible",
            "certificate": self.certificate.to_json_dict(),
        }


def solve(m: RobinsonMatrix, method: str = AUTO) -> SolveResult:
    """Find thresholds and an embedding, or a certificate that none exist."""
    if method == AUTO:
        method = RATIO if m.k == 2 else GENERAL
    if method == RATIO and m.k != 2:
        raise ValueError("the ratio method applies to k=2 matrices only")
    if method not in (RATIO, GENERAL):
        raise ValueError(f"unknown method {method!r}")
    reduction = reduce_repeated_rows(m)
    table = generate_bound_tables(reduction.reduced)
    cycles = extract_cycles(table)
    interval = ratio_interval(cycles) if m.k == 2 else None
    if method == RATIO:
        outcome = solve_ratio_k2(cycles)
    else:
        outcome = solve_general_k(cycles, m.k)
    if isinstance(outcome, InfeasibilityCertificate):
        return SolveResult(
            feasible=False, method=method, reduction=reduction,
            certificate=_remap_certificate(outcome, reduction),
            interval=interval)
    reduced_embedding = construct_embedding(reduction.reduced, outcome, table)
    embedding = expand_embedding(reduction, reduced_embedding, outcome)
    violation = verify_embedding(m, outcome, embedding)
    if violation is not None:
        raise InternalVerificationError(
            f"constructed embedding failed verification: {violation}")
    return SolveResult(
        feasible=True, method=method, reduction=reduction,
        d=outcome, embedding=embedding, interval=interval)


def _remap_certificate(cert: InfeasibilityCertificate,
                       reduction: RowReduction) -> InfeasibilityCertificate:
    """Translate cycle vertices from reduced to original numbering."""
    if reduction.identity:
        return cert
    reps = reduction.representatives
    cycles = tuple(
        CycleRecord(
            vertices=tuple(reps[p - 1] for p in c.vertices),
            bound=c.bound)
        for c in cert.cycles
    )
    return InfeasibilityCertificate(cycles=cycles, explanation=cert.explanation)


def check_certificate(m: RobinsonMatrix,
                      cert: InfeasibilityCertificate) -> tuple[bool, str]:
    """Re-check a certificate against a matrix with exact arithmetic.

    Valid when every cited cycle is a closed simple upper-bound-walk of the
    matrix with its stated bound, and the cited bounds alone admit no
    threshold vector.
    """
    if not cert.cycles:
        return False, "certificate cites no cycles"
    for idx, cycle in enumerate(cert.cycles, start=1):
        verts = cycle.vertices
        if len(verts) < 3 or verts[0] != verts[-1]:
            return False, f"cycle {idx} is not closed"
        core = verts[:-1]
        if len(set(core)) != len(core):
            return False, f"cycle {idx} repeats a vertex"
        if any(not 1 <= x <= m.n for x in core):
            return False, f"cycle {idx} mentions vertices outside the matrix"
        try:
            bound = walk_bound(m, BoundWalk(vertices=verts, kind=UPPER))
        except Exception as exc:
            return False, f"cycle {idx} is not a legal upper-bound-walk: {exc}"
        if bound != cycle.bound:
            return False, (f"cycle {idx} has bound {bound}, "
                           f"certificate claims {cycle.bound}")
    outcome = solve_general_k(list(cert.cycles), m.k)
    if isinstance(outcome, Thresholds):
        return False, ("cited cycle inequalities are satisfiable, e.g. by "
                       f"d = ({', '.join(map(str, outcome.values))})")
    return True, "certificate cycles are legal and jointly unsatisfiable"
