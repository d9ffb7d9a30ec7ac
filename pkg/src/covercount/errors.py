"""Exception types shared across the package."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (a divisibility or sign invariant).

    These checks guard identities that hold for every valid input, so a
    ConsistencyError always indicates a bug, never a bad argument.
    """


class ResourceLimitError(RuntimeError):
    """A brute-force request exceeds the enumeration feasibility bound."""
