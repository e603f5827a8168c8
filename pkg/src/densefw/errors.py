"""Exception types shared across the package.

Two broad families matter for the CLI exit codes: malformed input
(GraphParseError -> exit 2) and structurally infeasible requests such as a
disconnected graph handed to the tree packer or a ground set too large for
exhaustive enumeration (-> exit 3).
"""


class GraphParseError(ValueError):
    """Malformed edge-list input. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


class GroundSetTooLargeError(ValueError):
    """Exhaustive enumeration requested beyond the supported ground-set size."""


class OracleFlagError(ValueError):
    """A set-function oracle does not carry the flags an operation requires."""


class DegenerateDecompositionError(ValueError):
    """Deletion-variant decomposition hit a zero denominator (f(V) = f(S) for
    every proper S), which cannot happen for oracles meeting the preconditions."""


class NumericalError(ArithmeticError):
    """Non-finite values appeared in a floating-point iterate."""
