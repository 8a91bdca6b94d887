"""All-pairs minimal upper-bound-paths via a Floyd-Warshall-style merge.

For every ordered pair (i, j) the table holds the upper-bound-paths from i
to j whose bound vectors are minimal under the prefix-sum order; the
diagonal cells collect upper-bound-cycles discovered along the way.
Merging two stored paths at a pivot is only allowed when they share no
vertex besides the pivot (and, for cycles, the common endpoint), so every
stored walk is a simple path or a simple cycle.

Two construction modes exist:

* ``exact``: a cell entry is pruned only when another entry has both a
  preceding bound and a subset of its vertices. A bound-dominated path can
  be the only way through its vertices to complete a later minimal path,
  so bound dominance alone loses minimal elements; with the two-component
  rule any simple path split at the pivot is dominated by stored entries
  whose vertex sets meet only in the pivot, which restores the usual pivot
  induction in a single pass. Cell sizes can grow combinatorially, so this
  mode is for moderate n.
* ``pruned``: bound dominance only, with k=2 cells bucketed by chain label
  (at most one entry per chain, so no more than 2n+1 per cell). Cheap and
  how the table scales, but stored sets can miss minimal bounds; every
  entry is still a real path, so downstream results remain sound and are
  re-verified by the solver.

``auto`` picks exact up to a size threshold and pruned beyond it. Final
table cells always apply the full bound-only minimality filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .bounds import Bound, precedes
from .matrix import RobinsonMatrix

EXACT = "exact"
PRUNED = "pruned"
AUTO = "auto"

#: Largest n that defaults to exact construction.
EXACT_LIMIT = 16


class TableEntry(NamedTuple):
    bound: Bound
    path: tuple[int, ...]


@dataclass(frozen=True)
class CycleRecord:
    """A simple upper-bound-cycle in canonical rotation (smallest vertex first)."""

    vertices: tuple[int, ...]
    bound: Bound


def _strictly_precedes(a: Bound, b: Bound) -> bool:
    return a != b and precedes(a, b)


def minimal_insert(cell: list[TableEntry], bound: Bound,
                   path: tuple[int, ...]) -> bool:
    """Insert a candidate into a bound-antichain cell.

    The candidate goes in iff no stored bound precedes it (a stored equal
    bound keeps its original representative path); stored bounds the
    candidate strictly precedes are evicted. Returns True on insert.
    """
    for entry in cell:
        if precedes(entry.bound, bound):
            return False
    cell[:] = [e for e in cell if not _strictly_precedes(bound, e.bound)]
    cell.append(TableEntry(bound, path))
    cell.sort()
    return True


class BoundTable:
    """Lookup table of minimal upper-bound-paths and discovered cycles."""

    def __init__(self, n: int, k: int, mode: str,
                 pairs: dict[tuple[int, int], tuple[TableEntry, ...]],
                 cycles: dict[int, tuple[TableEntry, ...]]):
        self.n = n
        self.k = k
        self.mode = mode
        self._pairs = pairs
        self._cycles = cycles

    def entries(self, i: int, j: int) -> tuple[TableEntry, ...]:
        """Minimal entries for the ordered pair (i, j), sorted by bound."""
        return self._pairs.get((i, j), ())

    def minimal_entries(self, i: int, j: int) -> tuple[TableEntry, ...]:
        """Alias of :meth:`entries`; cells are stored fully filtered."""
        return self.entries(i, j)

    def upper_bounds(self, i: int, j: int) -> list[Bound]:
        return [e.bound for e in self.entries(i, j)]

    def lower_bounds(self, i: int, j: int) -> list[Bound]:
        """Lower bounds on (i, j), obtained by reversing stored (j, i) paths."""
        return [tuple(-x for x in e.bound) for e in self.entries(j, i)]

    def cycle_entries(self, i: int) -> tuple[TableEntry, ...]:
        return self._cycles.get(i, ())

    def ordered_pairs(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if i != j:
                    yield (i, j)

    def max_cell_size(self) -> int:
        sizes = [len(v) for v in self._pairs.values()]
        sizes.extend(len(v) for v in self._cycles.values())
        return max(sizes, default=0)

    def to_json_dict(self) -> dict:
        pairs = {}
        for i, j in self.ordered_pairs():
            entries = self.entries(i, j)
            if entries:
                pairs[f"{i},{j}"] = [
                    {"bound": list(e.bound), "path": list(e.path)}
                    for e in entries
                ]
        cycles = [
            {"vertices": list(c.vertices), "bound": list(c.bound)}
            for c in extract_cycles(self)
        ]
        return {"n": self.n, "k": self.k, "pairs": pairs, "cycles": cycles}


def generate_bound_tables(m: RobinsonMatrix, mode: str = AUTO) -> BoundTable:
    """Run the pivot merge over all ordered pairs of a validated matrix."""
    if mode == AUTO:
        mode = EXACT if m.n <= EXACT_LIMIT else PRUNED
    if mode == EXACT:
        items = _build_exact(m)
    elif mode == PRUNED:
        items = _build_pruned(m)
    else:
        raise ValueError(f"unknown table mode {mode!r}")
    pairs: dict[tuple[int, int], tuple[TableEntry, ...]] = {}
    cycles: dict[int, tuple[TableEntry, ...]] = {}
    for i in range(1, m.n + 1):
        for j in range(1, m.n + 1):
            cell = items[i][j]
            if not cell:
                continue
            entries = _assemble(cell)
            if i == j:
                cycles[i] = entries
            else:
                pairs[(i, j)] = entries
    return BoundTable(m.n, m.k, mode, pairs, cycles)


def _assemble(cell: list[tuple[Bound, tuple[int, ...]]]) -> tuple[TableEntry, ...]:
    """Minimal bounds of a construction cell, one representative path each."""
    by_bound: dict[Bound, tuple[int, ...]] = {}
    for bound, path in sorted(cell):
        if bound not in by_bound:
            by_bound[bound] = path
    keep = _minimal_bounds(set(by_bound))
    return tuple(sorted(TableEntry(b, by_bound[b]) for b in keep))


def _single_steps(m: RobinsonMatrix):
    """Forward edge steps (absent across null pairs) and backward steps."""
    k = m.k
    zero = tuple(0 for _ in range(k))
    for u in range(1, m.n + 1):
        row_u = m.entries[u - 1]
        for v in range(u + 1, m.n + 1):
            t = row_u[v - 1]
            fwd = None
            if t >= 1:
                fwd = tuple(1 if i == t else 0 for i in range(1, k + 1))
            back = zero if t == k else tuple(
                -1 if i == t + 1 else 0 for i in range(1, k + 1))
            yield u, v, fwd, back


# ---------------------------------------------------------------------------
# Exact mode: Pareto frontier under (bound precedes, vertex subset).

def _build_exact(m: RobinsonMatrix):
    n = m.n
    cells = [[[] for _ in range(n + 1)] for _ in range(n + 1)]
    for u, v, fwd, back in _single_steps(m):
        mask = (1 << u) | (1 << v)
        if fwd is not None:
            cells[u][v].append((fwd, mask, (u, v)))
        cells[v][u].append((back, mask, (v, u)))
    for s in range(1, n + 1):
        sbit = 1 << s
        row_s = cells[s]
        for i in range(1, n + 1):
            if i == s:
                continue
            left = cells[i][s]
            if not left:
                continue
            left_items = tuple(left)
            row_i = cells[i]
            ibit = 1 << i
            for j in range(1, n + 1):
                if j == s:
                    continue
                right = row_s[j]
                if not right:
                    continue
                target = row_i[j]
                need = sbit if i != j else sbit | ibit
                for b1, m1, p1 in left_items:
                    for b2, m2, p2 in right:
                        if m1 & m2 != need:
                            continue
                        cand = tuple(x + y for x, y in zip(b1, b2))
                        _masked_insert(target, cand, m1 | m2, p1 + p2[1:])
    return [[[(b, p) for b, _m, p in cell] for cell in row] for row in cells]


def _masked_insert(cell: list, bound: Bound, mask: int,
                   path: tuple[int, ...]) -> None:
    for eb, em, _ep in cell:
        if em & mask == em and precedes(eb, bound):
            return
    kept = [
        e for e in cell
        if not (e[1] & mask == mask and precedes(bound, e[0]))
    ]
    kept.append((bound, mask, path))
    cell[:] = kept


# ---------------------------------------------------------------------------
# Pruned mode: bound dominance only; k=2 keeps one entry per chain.

def _build_pruned(m: RobinsonMatrix):
    if m.k == 2:
        return _build_pruned_k2(m)
    return _build_pruned_general(m)


def _build_pruned_k2(m: RobinsonMatrix):
    """Chain-bucketed cells: entries (b1, b2, mask, path) keyed by chain.

    The dict key encodes the chain label of (b1, b2) as 2t or 2t+1 with 0
    for the zero vector; chains are totally ordered, so each bucket keeps
    its unique minimum.
    """
    n = m.n
    cells = [[{} for _ in range(n + 1)] for _ in range(n + 1)]
    for u, v, fwd, back in _single_steps(m):
        mask = (1 << u) | (1 << v)
        if fwd is not None:
            cells[u][v][_k2_label(*fwd)] = (fwd[0], fwd[1], mask, (u, v))
        cells[v][u][_k2_label(*back)] = (back[0], back[1], mask, (v, u))
    for s in range(1, n + 1):
        sbit = 1 << s
        row_s = cells[s]
        for i in range(1, n + 1):
            if i == s:
                continue
            left = cells[i][s]
            if not left:
                continue
            left_items = tuple(left.values())
            row_i = cells[i]
            ibit = 1 << i
            for j in range(1, n + 1):
                if j == s:
                    continue
                right = row_s[j]
                if not right:
                    continue
                target = row_i[j]
                need = sbit if i != j else sbit | ibit
                for b1, b2, m1, p1 in left_items:
                    for c1, c2, m2, p2 in right.values():
                        if m1 & m2 != need:
                            continue
                        n1 = b1 + c1
                        n2 = b2 + c2
                        t = (n1 if n1 >= 0 else -n1) + (n2 if n2 >= 0 else -n2)
                        if t == 0:
                            label = 0
                        elif n2 > 0 or (n2 == 0 and n1 < 0):
                            label = t + t
                        else:
                            label = t + t + 1
                        cur = target.get(label)
                        if cur is not None:
                            e1 = cur[0]
                            if e1 <= n1 and e1 + cur[1] <= n1 + n2:
                                continue
                        target[label] = (n1, n2, m1 | m2, p1 + p2[1:])
    return [
        [[((b1, b2), p) for b1, b2, _m, p in cell.values()] for cell in row]
        for row in cells
    ]


def _k2_label(b1: int, b2: int) -> int:
    t = abs(b1) + abs(b2)
    if t == 0:
        return 0
    if b2 > 0 or (b2 == 0 and b1 < 0):
        return t + t
    return t + t + 1


def _build_pruned_general(m: RobinsonMatrix):
    """Bound-antichain cells keyed by bound, holding (mask, path)."""
    n = m.n
    cells = [[{} for _ in range(n + 1)] for _ in range(n + 1)]
    for u, v, fwd, back in _single_steps(m):
        mask = (1 << u) | (1 << v)
        if fwd is not None:
            cells[u][v][fwd] = (mask, (u, v))
        cells[v][u][back] = (mask, (v, u))
    for s in range(1, n + 1):
        sbit = 1 << s
        row_s = cells[s]
        for i in range(1, n + 1):
            if i == s:
                continue
            left = cells[i][s]
            if not left:
                continue
            left_items = tuple(left.items())
            row_i = cells[i]
            ibit = 1 << i
            for j in range(1, n + 1):
                if j == s:
                    continue
                right = row_s[j]
                if not right:
                    continue
                target = row_i[j]
                need = sbit if i != j else sbit | ibit
                for b1, (m1, p1) in left_items:
                    for b2, (m2, p2) in right.items():
                        if m1 & m2 != need:
                            continue
                        cand = tuple(x + y for x, y in zip(b1, b2))
                        _antichain_add(target, cand, m1 | m2, p1 + p2[1:])
    return [
        [[(bound, p) for bound, (_m, p) in cell.items()] for cell in row]
        for row in cells
    ]


def _antichain_add(cell: dict, bound: Bound, mask: int,
                   path: tuple[int, ...]) -> None:
    if bound in cell:
        return
    for stored in cell:
        if precedes(stored, bound):
            return
    evicted = [stored for stored in cell if _strictly_precedes(bound, stored)]
    for stored in evicted:
        del cell[stored]
    cell[bound] = (mask, path)


# ---------------------------------------------------------------------------
# Cycles.

def canonical_rotation(closed: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a closed walk so it starts at its smallest vertex."""
    core = closed[:-1]
    i = core.index(min(core))
    rot = core[i:] + core[:i]
    return rot + (rot[0],)


def extract_cycles(table: BoundTable) -> list[CycleRecord]:
    """Deduplicated cycles whose bounds are minimal across the collection."""
    seen: dict[tuple[int, ...], Bound] = {}
    for i in range(1, table.n + 1):
        for entry in table.cycle_entries(i):
            canon = canonical_rotation(entry.path)
            if canon not in seen:
                seen[canon] = entry.bound
    minimal = _minimal_bounds(set(seen.values()))
    records = [
        CycleRecord(vertices=verts, bound=bound)
        for verts, bound in seen.items() if bound in minimal
    ]
    records.sort(key=lambda r: (r.bound, r.vertices))
    return records


def _minimal_bounds(bounds: set[Bound]) -> set[Bound]:
    if not bounds:
        return set()
    k = len(next(iter(bounds)))
    if k == 2:
        # The prefix order for k=2 is the componentwise order on the prefix
        # points (a1, a1+a2); a sorted sweep finds the minimal points.
        minimal: set[Bound] = set()
        best: int | None = None
        for p1, p2 in sorted((a1, a1 + a2) for a1, a2 in bounds):
            if best is None or p2 < best:
                minimal.add((p1, p2 - p1))
                best = p2
        return minimal
    return {
        b for b in bounds
        if not any(_strictly_precedes(o, b) for o in bounds)
    }
