"""Exception hierarchy for the skh package.

Every error raised on a user-facing path derives from SkhError and carries a
short machine-readable ``code`` so the service layer can map it to an HTTP
status and the CLI to an exit code without string matching.
"""

from __future__ import annotations

__all__ = [
    "SkhError",
    "DiagramParseError",
    "DiagramStructureError",
    "OrientationError",
    "CompositionError",
    "UnbalancedError",
    "IncompatibleInputError",
    "MoveError",
    "SizeCapError",
    "InternalCheckError",
]


class SkhError(Exception):
    """Base class for all package errors."""

    code = "error"


class DiagramParseError(SkhError):
    """Raised when diagram text cannot be parsed.

    Carries the 1-based line number (and column when known) of the offending
    directive.
    """

    code = "parse-error"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + loc)


class DiagramStructureError(SkhError):
    """A slice list is geometrically impossible (width underflow/overflow)."""

    code = "parse-error"


class OrientationError(SkhError):
    """Declared orientation flags are mutually inconsistent."""

    code = "parse-error"


class CompositionError(SkhError):
    """Stacking two tangles whose interface widths disagree."""

    code = "invalid-input"


class UnbalancedError(SkhError):
    """An operation that needs n_top == n_bottom got an unbalanced tangle."""

    code = "incompatible-invariant"


class IncompatibleInputError(SkhError):
    """The requested invariant does not apply to the given diagram."""

    code = "incompatible-invariant"


class MoveError(SkhError):
    """A local move was applied at an illegal location."""

    code = "invalid-input"


class SizeCapError(SkhError):
    """The crossing cap was exceeded; the cube would be too large."""

    code = "size-cap"


class InternalCheckError(SkhError):
    """An internal consistency check failed (for example d^2 != 0)."""

    code = "internal-check"
