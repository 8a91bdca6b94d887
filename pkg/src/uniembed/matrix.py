"""Robinson similarity matrices: model, parsing, validation, level graphs.

A Robinson similarity matrix is a symmetric integer matrix with entries in
{0, ..., k}, all diagonal entries equal to k, and every row and column
non-increasing away from the diagonal. Vertices are 1-based throughout the
public API; the raw ``entries`` grid is stored 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import MatrixInvariantError, MatrixSyntaxError


@dataclass(frozen=True)
class RobinsonMatrix:
    """Validated similarity matrix. Immutable and safe to share.

    ``entries[u-1][v-1]`` is the similarity level of the pair (u, v).
    Use :meth:`level` for 1-based access.
    """

    n: int
    k: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], k: int) -> RobinsonMatrix:
        """Build and fully validate a matrix from nested sequences."""
        n = len(rows)
        if n < 1:
            raise MatrixInvariantError("range", (), "matrix must have at least one row")
        if k < 1:
            raise MatrixInvariantError("range", (), "level count k must be at least 1")
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        for u, row in enumerate(grid, start=1):
            if len(row) != n:
                raise MatrixInvariantError(
                    "range", (u,), f"row {u} has {len(row)} entries, expected {n}")
            for v, value in enumerate(row, start=1):
                if not 0 <= value <= k:
                    raise MatrixInvariantError(
                        "range", (u, v),
                        f"entry ({u},{v}) = {value} outside [0,{k}]")
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if grid[u - 1][v - 1] != grid[v - 1][u - 1]:
                    raise MatrixInvariantError(
                        "symmetry", (u, v),
                        f"entries ({u},{v}) and ({v},{u}) differ")
        for u in range(1, n + 1):
            if grid[u - 1][u - 1] != k:
                raise MatrixInvariantError(
                    "diagonal", (u,),
                    f"diagonal entry ({u},{u}) = {grid[u - 1][u - 1]}, expected {k}")
        witness = validate_robinson(grid, k)
        if witness is not None:
            u, v, w = witness
            raise MatrixInvariantError(
                "robinson", witness,
                f"Robinson condition fails at ({u},{v},{w}): "
                f"entry ({u},{w}) exceeds entry ({u},{v}) or ({v},{w})")
        return cls(n=n, k=k, entries=grid)

    def level(self, u: int, v: int) -> int:
        """Similarity level of the pair (u, v), vertices 1-based."""
        return self.entries[u - 1][v - 1]

    def row(self, u: int) -> tuple[int, ...]:
        return self.entries[u - 1]

    def serialize(self) -> str:
        """Canonical text form: header line "n k", then n rows of entries."""
        lines = [f"{self.n} {self.k}"]
        lines.extend(" ".join(str(x) for x in row) for row in self.entries)
        return "\n".join(lines) + "\n"


def validate_robinson(rows: Sequence[Sequence[int]], k: int) -> tuple[int, int, int] | None:
    """Check the Robinson condition on a symmetric grid with entries in [0,k].

    Returns None when every triple u < v < w satisfies both
    entries[u][w] <= entries[u][v] and entries[u][w] <= entries[v][w];
    otherwise returns the lexicographically smallest violating triple,
    1-based.
    """
    n = len(rows)
    # Fast path: the condition is equivalent to every row being
    # non-increasing moving away from the diagonal in both directions.
    monotone = True
    for i in range(n):
        row = rows[i]
        for j in range(i + 1, n - 1):
            if row[j + 1] > row[j]:
                monotone = False
                break
        if not monotone:
            break
        for j in range(i - 1, 0, -1):
            if row[j - 1] > row[j]:
                monotone = False
                break
        if not monotone:
            break
    if monotone:
        return None
    for u in range(n):
        row_u = rows[u]
        for v in range(u + 1, n):
            a_uv = row_u[v]
            row_v = rows[v]
            for w in range(v + 1, n):
                a_uw = row_u[w]
                if a_uw > a_uv or a_uw > row_v[w]:
                    return (u + 1, v + 1, w + 1)
    raise AssertionError("monotonicity scan and triple scan disagree")


def parse_matrix(text: str) -> RobinsonMatrix:
    """Parse the matrix text format and return a validated matrix.

    Format: optional comment lines starting with '#', a header line "n k",
    then n lines of n space-separated integers. Blank lines are ignored.
    """
    numbered = [
        (idx, line) for idx, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise MatrixSyntaxError("empty input, expected header line 'n k'", line=1)
    header_no, header = numbered[0]
    fields = header.split()
    if len(fields) != 2:
        raise MatrixSyntaxError(
            f"header must be 'n k', got {len(fields)} fields", line=header_no)
    try:
        n, k = int(fields[0]), int(fields[1])
    except ValueError:
        raise MatrixSyntaxError("header values must be integers", line=header_no) from None
    if n < 1:
        raise MatrixSyntaxError("vertex count n must be at least 1", line=header_no)
    if k < 1:
        raise MatrixSyntaxError("level count k must be at least 1", line=header_no)
    body = numbered[1:]
    if len(body) < n:
        raise MatrixSyntaxError(
            f"expected {n} matrix rows, found {len(body)}",
            line=body[-1][0] if body else header_no)
    if len(body) > n:
        raise MatrixSyntaxError(
            f"expected {n} matrix rows, found {len(body)}", line=body[n][0])
    rows: list[list[int]] = []
    for line_no, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixSyntaxError(
                f"expected {n} entries, found {len(tokens)}", line=line_no)
        row = []
        for col, token in enumerate(tokens, start=1):
            try:
                row.append(int(token))
            except ValueError:
                raise MatrixSyntaxError(
                    f"entry {token!r} is not an integer",
                    line=line_no, column=line.index(token) + 1) from None
        rows.append(row)
    return RobinsonMatrix.from_rows(rows, k)


def level_graph(m: RobinsonMatrix, t: int) -> tuple[tuple[int, ...], ...]:
    """0/1 matrix of the level-t graph: result[u][v] = 1 iff level >= t.

    Diagonal entries are 1; subtracting the identity gives the adjacency
    matrix of the t-th indifference graph. Graphs are nested in t.
    """
    if not 1 <= t <= m.k:
        raise ValueError(f"level t={t} outside [1,{m.k}]")
    return tuple(
        tuple(1 if x >= t else 0 for x in row) for row in m.entries
    )


@dataclass(frozen=True)
class RowReduction:
    """Result of collapsing consecutive duplicate rows.

    ``index_map[v-1]`` is the 1-based reduced vertex standing for original
    vertex v. ``representatives[p-1]`` is the original vertex that reduced
    vertex p came from, and ``run_lengths[p-1]`` counts the duplicate rows
    collapsed into it (0 when the row was unique).
    """

    reduced: RobinsonMatrix
    index_map: tuple[int, ...]
    run_lengths: tuple[int, ...]
    representatives: tuple[int, ...]

    @property
    def identity(self) -> bool:
        return self.reduced.n == len(self.index_map)


def reduce_repeated_rows(m: RobinsonMatrix) -> RowReduction:
    """Collapse duplicate rows, keeping the first of each run.

    Equal rows in a valid Robinson matrix are always contiguous; this is
    asserted, since a violation would contradict the validated input.
    """
    reps: list[int] = []
    index_map: list[int] = []
    run_lengths: list[int] = []
    for v in range(1, m.n + 1):
        if reps and m.row(v) == m.row(reps[-1]):
            index_map.append(len(reps))
            run_lengths[-1] += 1
        else:
            for earlier in reps:
                assert m.row(v) != m.row(earlier), \
                    f"equal rows {earlier} and {v} are not contiguous"
            reps.append(v)
            index_map.append(len(reps))
            run_lengths.append(0)
    if len(reps) == m.n:
        return RowReduction(reduced=m, index_map=tuple(index_map),
                            run_lengths=tuple(run_lengths),
                            representatives=tuple(reps))
    rows = [[m.level(u, v) for v in reps] for u in reps]
    reduced = RobinsonMatrix.from_rows(rows, m.k)
    return RowReduction(reduced=reduced, index_map=tuple(index_map),
                        run_lengths=tuple(run_lengths),
                        representatives=tuple(reps))
