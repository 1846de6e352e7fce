"""Exception hierarchy shared by every module."""


class HypertreeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HypertreeError, ValueError):
    """Malformed or out-of-contract input."""


class ParamError(InputError):
    pass


class ArityError(InputError):
    pass


class RangeError(InputError):
    pass


class DuplicateEdgeError(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IsolatedVertexError(InputError):
    pass


class EmptyHypergraphError(InputError):
    pass


class PreconditionError(HypertreeError):
    """An operation was called outside the regime where it is meaningful."""


class NotAHypertreeError(PreconditionError):
    pass


class NotChainConnectedError(PreconditionError):
    pass


class NotSemicycleFreeError(PreconditionError):
    pass


class NotLHypertreeError(PreconditionError):
    pass


class HypothesisError(PreconditionError):
    pass


class FreshVertexMissing(PreconditionError):
    pass


class NotEdgeMinimalAfterExtension(PreconditionError):
    pass


class ConstraintInfeasible(PreconditionError):
    pass


class SizeError(HypertreeError):
    """The requested instance is beyond the configured size guard."""


class BudgetExceeded(HypertreeError):
    """A search ran out of node expansions before reaching a verdict."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"search exceeded its budget of {budget} node expansions")


class InternalInvariantError(HypertreeError, AssertionError):
    """A certificate the theory guarantees failed to materialise."""
