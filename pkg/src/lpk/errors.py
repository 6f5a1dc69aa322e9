"""Exception types shared across the package."""


class LpkError(Exception):
    """Base class for rejected inputs."""


class PosetError(LpkError, ValueError):
    pass


class HomSizeError(LpkError):
    """A Hom-poset would exceed the configured size limit."""


class IdealError(LpkError, ValueError):
    pass


class BudgetExceeded(LpkError):
    """A computation would exceed its configured search or size budget."""


class InternalError(RuntimeError):
    """A computed result contradicts a proven statement; indicates a bug."""
