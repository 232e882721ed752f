"""Exception types shared across the package."""

from __future__ import annotations


class GraphGamesError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(GraphGamesError):
    """Graph construction rejected (self-loop, parallel edge, bad coloring...)."""


class VertexRangeError(GraphGamesError):
    """A vertex id is outside 0..n-1."""


class IllegalMoveError(GraphGamesError):
    """A move was applied that the active ruleset does not allow."""


class IllegalPositionError(GraphGamesError):
    """A position violates its ruleset's legality predicate."""


class FormatError(GraphGamesError):
    """A text file failed to parse.  Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceededError(GraphGamesError):
    """A search ran past its node budget.  Distinct from any game result."""

    def __init__(self, message: str = "search budget exceeded", nodes: int = 0):
        self.nodes = nodes
        super().__init__(message)


class LayoutError(GraphGamesError):
    """A constraint-logic machine is not expressible in the recognized
    vertex types (Variable, Goal, And, Or, Choice, Split plus plumbing)."""


class ParamsError(GraphGamesError):
    """Reduction parameters are inconsistent with the machine."""
