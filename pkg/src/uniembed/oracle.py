"""Independent brute-force references used to validate the main pipeline.

Everything here favours clarity over speed and is guarded by hard size
limits: these routines must never masquerade as scalable code paths. The
path and cycle enumerators do exhaustive DFS over simple walks; the direct
feasibility check eliminates the full strict system over both the
positions and the thresholds.
"""

from __future__ import annotations

from fractions import Fraction

from . import fme
from .bounds import (
    LOWER, UPPER, Bound, edge_lower_bound, edge_upper_bound, precedes,
)
from .embedding import Embedding
from .errors import SizeGuardError
from .feasibility import Thresholds
from .matrix import RobinsonMatrix
from .pathgen import CycleRecord, TableEntry

_PATH_GUARD = 10
_CYCLE_GUARD = 8
_DIRECT_GUARD_N = 7
_DIRECT_GUARD_K = 3


def enumerate_paths_bruteforce(m: RobinsonMatrix, u: int, v: int,
                               kind: str = UPPER) -> list[TableEntry]:
    """All extreme bounds over simple legal paths from u to v.

    Exhaustive DFS, then a full pairwise filter: minimal bounds for upper
    paths, maximal for lower paths (those are the binding ones). Each bound
    keeps its lexicographically smallest representative path.
    """
    if m.n > _PATH_GUARD:
        raise SizeGuardError(
            f"path enumeration is limited to n <= {_PATH_GUARD}, got {m.n}")
    if u == v:
        raise ValueError("endpoints must differ; cycles are enumerated separately")
    if kind not in (UPPER, LOWER):
        raise ValueError(f"kind must be {UPPER!r} or {LOWER!r}")
    step = edge_upper_bound if kind == UPPER else edge_lower_bound
    found: dict[Bound, tuple[int, ...]] = {}

    def legal(x: int, y: int) -> bool:
        if m.level(x, y) != 0:
            return True
        return x > y if kind == UPPER else x < y

    def dfs(x: int, mask: int, bound: tuple[int, ...], path: tuple[int, ...]):
        if x == v:
            if bound not in found:
                found[bound] = path
            return
        for y in range(1, m.n + 1):
            if mask & (1 << y) or y == x:
                continue
            if not legal(x, y):
                continue
            b = step(m, x, y)
            assert b is not None
            dfs(y, mask | (1 << y),
                tuple(p + q for p, q in zip(bound, b)), path + (y,))

    dfs(u, 1 << u, tuple(0 for _ in range(m.k)), (u,))
    if kind == UPPER:
        keep = {
            b for b in found
            if not any(precedes(o, b) and o != b for o in found)
        }
    else:
        keep = {
            b for b in found
            if not any(precedes(b, o) and o != b for o in found)
        }
    return sorted(TableEntry(b, found[b]) for b in keep)


def enumerate_cycles_bruteforce(m: RobinsonMatrix,
                                minimal_only: bool = False) -> list[CycleRecord]:
    """All simple upper-bound-cycles, each rooted at its smallest vertex.

    Both traversal directions of a vertex cycle are enumerated separately;
    legality may hold for one and not the other. With ``minimal_only`` the
    collection is filtered to cycles whose bounds are minimal.
    """
    if m.n > _CYCLE_GUARD:
        raise SizeGuardError(
            f"cycle enumeration is limited to n <= {_CYCLE_GUARD}, got {m.n}")
    records: list[CycleRecord] = []

    def legal(x: int, y: int) -> bool:
        return m.level(x, y) != 0 or x > y

    def dfs(root: int, x: int, mask: int, bound: tuple[int, ...],
            path: tuple[int, ...]):
        if x != root and legal(x, root):
            b = edge_upper_bound(m, x, root)
            assert b is not None
            records.append(CycleRecord(
                vertices=path + (root,),
                bound=tuple(p + q for p, q in zip(bound, b))))
        for y in range(root + 1, m.n + 1):
            if mask & (1 << y):
                continue
            if not legal(x, y):
                continue
            b = edge_upper_bound(m, x, y)
            assert b is not None
            dfs(root, y, mask | (1 << y),
                tuple(p + q for p, q in zip(bound, b)), path + (y,))

    zero = tuple(0 for _ in range(m.k))
    for root in range(1, m.n + 1):
        dfs(root, root, 1 << root, zero, (root,))
    if minimal_only:
        bounds = {r.bound for r in records}
        keep = {
            b for b in bounds
            if not any(precedes(o, b) and o != b for o in bounds)
        }
        records = [r for r in records if r.bound in keep]
    records.sort(key=lambda r: (r.bound, r.vertices))
    return records


def cycle_ratio_interval(m: RobinsonMatrix
                         ) -> tuple[Fraction, Fraction, bool]:
    """Admissible d2/d1 interval recomputed from the full cycle collection.

    Returns (lo, hi, forced_empty); ``forced_empty`` flags a cycle whose
    inequality alone is unsatisfiable regardless of the ratio.
    """
    if m.k != 2:
        raise ValueError("ratio intervals are defined for k=2 only")
    lo, hi = Fraction(0), Fraction(1)
    forced_empty = False
    for cycle in enumerate_cycles_bruteforce(m):
        a1, a2 = cycle.bound
        if a2 == 0:
            if a1 <= 0:
                forced_empty = True
        elif a2 > 0:
            lo = max(lo, Fraction(-a1, a2))
        else:
            hi = min(hi, Fraction(-a1, a2))
    return lo, hi, forced_empty


def direct_feasibility(m: RobinsonMatrix
                       ) -> tuple[Thresholds, Embedding] | None:
    """Eliminate the full strict system over positions and thresholds.

    Variables are d_1..d_k and the positions of vertices 2..n (vertex 1 is
    pinned to 0). Returns a satisfying assignment or None.
    """
    if m.n > _DIRECT_GUARD_N or m.k > _DIRECT_GUARD_K:
        raise SizeGuardError(
            f"direct feasibility is limited to n <= {_DIRECT_GUARD_N}, "
            f"k <= {_DIRECT_GUARD_K}, got n={m.n}, k={m.k}")
    n, k = m.n, m.k
    nvars = k + n - 1

    def pi(v: int) -> int:
        return k + v - 2

    rows: list[fme.Row] = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            t = m.level(u, v)
            if t >= 1:
                coeffs = [0] * nvars
                coeffs[t - 1] = 1
                coeffs[pi(v)] = -1
                if u >= 2:
                    coeffs[pi(u)] = 1
                rows.append(fme.make_row(coeffs))
            coeffs = [0] * nvars
            coeffs[pi(v)] = 1
            if u >= 2:
                coeffs[pi(u)] = -1
            if t < k:
                coeffs[t] = -1
            rows.append(fme.make_row(coeffs))
    for i in range(k - 1):
        coeffs = [0] * nvars
        coeffs[i] = 1
        coeffs[i + 1] = -1
        rows.append(fme.make_row(coeffs))
    coeffs = [0] * nvars
    coeffs[k - 1] = 1
    rows.append(fme.make_row(coeffs))

    order = [pi(v) for v in range(n, 1, -1)] + list(range(k))
    result = fme.solve(rows, order)
    if isinstance(result, fme.Infeasible):
        return None
    d = Thresholds(tuple(result[i] for i in range(k)))
    emb = Embedding((Fraction(0),)
                    + tuple(result[pi(v)] for v in range(2, n + 1)))
    return d, emb


def separating_threshold(a: Bound, b: Bound) -> Thresholds:
    """Thresholds d with a . d > b . d, for a not preceding b.

    Takes the smallest position t whose prefix sums violate the order,
    picks the ratio d_t/d_1 from its admissible open interval, keeps the
    leading components close enough to d_1, and makes the tail small
    enough that it cannot eat the slack won at position t.
    """
    if len(a) != len(b):
        raise ValueError("vectors must have equal length")
    if precedes(a, b):
        raise ValueError("vectors are ordered; no separating thresholds exist")
    k = len(a)
    pa = pb = 0
    t = 0
    for i in range(k):
        pa += a[i]
        pb += b[i]
        if pa > pb:
            t = i + 1
            break
    assert t >= 1
    diff = a[t - 1] - b[t - 1]  # exceeds the accumulated deficit, so > 0
    deficit = sum(b[i] - a[i] for i in range(t - 1))
    d = [Fraction(0)] * k
    if t == 1:
        d[0] = Fraction(1)
    else:
        ratio = (Fraction(deficit, diff) + 1) / 2
        head_weight = sum(abs(b[i] - a[i]) for i in range(t - 1))
        eta = min(Fraction(1) - ratio,
                  diff * ratio - Fraction(deficit)) / (2 * k * (head_weight + 1))
        for i in range(t - 1):
            d[i] = 1 - i * eta
        d[t - 1] = ratio
    slack = Fraction(0)
    for i in range(t):
        slack += (a[i] - b[i]) * d[i]
    assert slack > 0
    tail_weight = sum(abs(b[i] - a[i]) for i in range(t, k))
    tau = min(d[t - 1] / 2, slack / (2 * (tail_weight + 1)))
    for i in range(t, k):
        d[i] = tau
        tau /= 2
    result = Thresholds(tuple(d))
    total = Fraction(0)
    for i in range(k):
        total += (a[i] - b[i]) * result.values[i]
    assert total > 0, "construction failed to separate"
    return result


def buffer_vector(a: Bound, b: Bound) -> Bound:
    """Intermediate vector c with a.d <= c.d <= b.d for all thresholds d.

    Requires a to precede b. Componentwise c <= b, the full sums of c and a
    agree, and each level's excess of a over b is absorbed by earlier
    components with spare capacity.
    """
    if len(a) != len(b):
        raise ValueError("vectors must have equal length")
    if not precedes(a, b):
        raise ValueError("first vector must precede the second")
    c: list[int] = []
    for t in range(1, len(a) + 1):
        at, bt = a[t - 1], b[t - 1]
        excess = at - bt if at > bt else 0
        remaining = excess
        for i in range(t - 1):
            absorb = min(remaining, b[i] - c[i])
            remaining -= absorb
            c[i] += absorb
        assert remaining == 0, "ordered prefixes always leave enough capacity"
        c.append(at - excess)
    return tuple(c)
