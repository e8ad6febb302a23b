"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class FormatError(ValueError):
    """Malformed graph or partition input.

    ``line`` is the 1-based line (or edge index) that triggered the error,
    when one can be identified.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Infeasible(Exception):
    """A partitioner could not complete.

    Raised instead of returning a partial answer. ``step`` names the stage
    whose precondition failed, ``witness`` holds the offending vertices, and
    ``partial``/``remainder`` describe how far the construction got. All
    vertex ids refer to the graph passed to the partitioner.
    """

    def __init__(
        self,
        step: str,
        detail: str,
        *,
        witness: tuple[int, ...] = (),
        partial: tuple[tuple[int, ...], ...] = (),
        remainder: tuple[int, ...] = (),
        trace=None,
    ):
        super().__init__(f"{step}: {detail}")
        self.step = step
        self.detail = detail
        self.witness = tuple(witness)
        self.partial = tuple(tuple(p) for p in partial)
        self.remainder = tuple(remainder)
        self.trace = trace
