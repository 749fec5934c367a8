"""Exception types shared across the package."""


class TensePosetError(Exception):
    """Base class for all package errors."""


class CycleError(TensePosetError):
    """Cover closure would violate antisymmetry."""


class RelationError(TensePosetError):
    """An explicitly given relation is not a partial order."""


class SizeError(TensePosetError):
    """A structure exceeds the cap for an exhaustive computation."""


class EmptySetError(TensePosetError):
    """An operand set is empty where a nonempty one is required."""


class NonSerialError(TensePosetError):
    """A time frame lacks predecessors or successors at some point."""


class UnknownLabelError(TensePosetError):
    """A label does not name a known element or point."""


class SliceMismatchError(TensePosetError):
    """Two time-indexed values disagree on their time sets."""


class ParseError(TensePosetError):
    """Malformed instance text; carries position information."""

    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class ResolveError(TensePosetError):
    """A declaration references a name that was never declared."""


class ArityError(TensePosetError):
    """A proposition's value list does not match the frame's point count."""
