"""Exception types shared across the package."""

from __future__ import annotations


class UniembedError(Exception):
    """Base class for all package-specific errors."""


class MatrixError(UniembedError, ValueError):
    """Base class for problems with an input matrix."""


class MatrixSyntaxError(MatrixError):
    """Malformed matrix file. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MatrixInvariantError(MatrixError):
    """Structurally well-formed matrix that violates a matrix invariant.

    ``kind`` is one of "range", "symmetry", "diagonal", "robinson";
    ``witness`` holds the offending 1-based vertices.
    """

    def __init__(self, kind: str, witness: tuple[int, ...], message: str):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class IllegalWalkError(UniembedError, ValueError):
    """A walk traverses a null pair in the forbidden direction.

    ``step`` is the 1-based index of the offending step.
    """

    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


class ThresholdOrderError(UniembedError, ValueError):
    """Threshold values are not strictly decreasing and positive."""


class EmbeddingGapError(UniembedError, ValueError):
    """During construction, the lower envelope met or crossed the upper one.

    Signals that the supplied thresholds do not admit an embedding.
    ``vertex`` is where placement failed; ``upper_vertex``/``lower_vertex``
    attain the crossing envelopes.
    """

    def __init__(self, vertex: int, upper_vertex: int, lower_vertex: int,
                 message: str):
        super().__init__(message)
        self.vertex = vertex
        self.upper_vertex = upper_vertex
        self.lower_vertex = lower_vertex


class SizeGuardError(UniembedError, ValueError):
    """A brute-force reference routine was called beyond its size guard."""


class InternalVerificationError(UniembedError, RuntimeError):
    """A constructed embedding failed its own verifier: a bug trap."""
